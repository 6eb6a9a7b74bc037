#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qosc/cli.hpp"

using namespace qosc;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "qosc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json report_of(const Outcome& o) { return nlohmann::json::parse(o.out); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qosc_test_" + name);
}

}  // namespace

TEST_CASE("verify fock n=2 N=5 passes") {
  const auto o = run({"verify", "--realization", "fock", "--n", "2", "--N", "5"});
  CHECK(o.code == cli::kPass);
  const auto doc = report_of(o);
  CHECK(doc["summary"]["failed_expected"] == 0);
  CHECK(doc["params"]["N"] == 5);
}

TEST_CASE("cyclic with a real q is a usage error") {
  const auto o = run({"verify", "--realization", "cyclic", "--q-real", "0.5"});
  CHECK(o.code == cli::kUsage);
  CHECK(o.err.find("root of unity") != std::string::npos);
}

TEST_CASE("bargmann real q reports orthonormality up to exponent 5") {
  const auto o = run({"verify", "--realization", "bargmann", "--n", "1", "--q-real", "0.5",
                      "--cutoff", "8"});
  CHECK(o.code == cli::kPass);
  const auto doc = report_of(o);
  int ortho = 0;
  for (const auto& r : doc["records"]) {
    if (r["id"].get<std::string>().rfind("orthonormal.", 0) == 0) ++ortho;
  }
  CHECK(ortho == 36);
}

TEST_CASE("virasoro on fock with window 4") {
  CHECK(run({"virasoro", "--realization", "fock", "--n", "1", "--N", "5", "--window", "4"}).code ==
        cli::kPass);
}

TEST_CASE("negative generator on a nilpotent abar is rejected") {
  const auto o = run({"virasoro", "--realization", "fock", "--n", "1", "--N", "3", "--m", "-2"});
  CHECK(o.code == cli::kUsage);
  CHECK(o.err.find("nilpotent") != std::string::npos);
}

TEST_CASE("classical limit reports a monotone table") {
  const auto o = run({"virasoro", "--classical-limit", "--n", "1", "--cutoff", "10"});
  CHECK(o.code == cli::kPass);
  const auto doc = report_of(o);
  bool monotone = false;
  for (const auto& r : doc["records"]) {
    if (r["id"] == "classical.monotone") monotone = r["passed"].get<bool>();
  }
  CHECK(monotone);
}

TEST_CASE("qcalc prints 17 significant digits") {
  CHECK(run({"qcalc", "qnum", "--N", "5", "--x", "5"}).out == "0\n");
  CHECK(run({"qcalc", "qfact", "--q-real", "0.5", "--n", "3"}).out == "2.625\n");
  const double moment = std::stod(run({"qcalc", "jackson", "--q-real", "0.5", "--moment", "2"}).out);
  CHECK(moment == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(run({"qcalc", "qexp", "--N", "5", "--x", "1"}).code == cli::kUsage);
  CHECK(run({"qcalc", "nonsense", "--N", "5"}).code == cli::kUsage);
}

TEST_CASE("resource cap maps to exit 3") {
  CHECK(run({"verify", "--n", "3", "--N", "7", "--cap", "100"}).code == cli::kResource);
}

TEST_CASE("unknown flags and missing subcommands are usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"verify", "--bogus"}).code == cli::kUsage);
  CHECK(run({"verify", "--realization", "nope", "--N", "5"}).code == cli::kUsage);
  CHECK(run({"verify", "--N", "5", "--q-real", "0.5"}).code == cli::kUsage);
}

TEST_CASE("flags override the config file, which overrides defaults") {
  const auto path = temp_file("config.json");
  {
    std::ofstream f(path);
    f << R"({"n": 2, "N": 3, "realization": "fock", "tolerance": 1e-9})";
  }
  const auto from_file = report_of(run({"verify", "--config", path.string()}));
  CHECK(from_file["params"]["n_modes"] == 2);
  CHECK(from_file["params"]["N"] == 3);
  CHECK(from_file["params"]["tolerance"] == 1e-9);
  const auto overridden = report_of(run({"verify", "--config", path.string(), "--N", "5"}));
  CHECK(overridden["params"]["N"] == 5);
  CHECK(overridden["params"]["n_modes"] == 2);
  std::filesystem::remove(path);

  CHECK(run({"verify", "--config", temp_file("missing.json").string()}).code == cli::kUsage);
}

TEST_CASE("identical runs give identical reports apart from the timestamp") {
  cli::set_fixed_timestamp("fixed");
  const auto a = run({"verify", "--realization", "cyclic", "--N", "5"});
  const auto b = run({"verify", "--realization", "cyclic", "--N", "5"});
  cli::set_fixed_timestamp("");
  CHECK(a.out == b.out);
  CHECK(a.code == cli::kPass);
}

TEST_CASE("--out writes the report and prints a summary line") {
  const auto path = temp_file("report.json");
  const auto o = run({"verify", "--N", "3", "--out", path.string()});
  CHECK(o.code == cli::kPass);
  CHECK(o.out.find("passed") != std::string::npos);
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["summary"]["total"].get<int>() > 0);
  std::filesystem::remove(path);
}

TEST_CASE("report-schema prints JSON") {
  const auto o = run({"report-schema"});
  CHECK(o.code == cli::kPass);
  CHECK(nlohmann::json::parse(o.out).contains("properties"));
}
