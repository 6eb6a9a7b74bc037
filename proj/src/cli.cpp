#include "qosc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qosc/bargmann.hpp"
#include "qosc/errors.hpp"
#include "qosc/fock.hpp"
#include "qosc/relations.hpp"
#include "qosc/virasoro.hpp"

namespace qosc::cli {

using nlohmann::json;

namespace {

std::string& fixed_timestamp() {
  static std::string ts;
  return ts;
}

std::string now_or_fixed() {
  return fixed_timestamp().empty() ? utc_timestamp() : fixed_timestamp();
}

Error usage(const std::string& what) { return Error(ErrorKind::Usage, what); }

std::string format17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format17(complex z) {
  if (z.imag() == 0.0) return format17(z.real());
  return format17(z.real()) + (z.imag() < 0 ? " - " : " + ") + format17(std::abs(z.imag())) + "i";
}

int jackson_terms(const RunConfig& c, const QParameter& p) {
  if (c.truncation) return *c.truncation;
  if (p.is_root_of_unity()) return kDefaultTruncation;
  return jackson_truncation(p, 1.0 / (1.0 - p.real_value()));
}

QParameter make_q(const RunConfig& c) {
  if (c.order) return q_from_root(*c.order);
  if (c.q_real) return q_real(*c.q_real);
  throw usage("one of --N or --q-real is required");
}

json base_params(const RunConfig& c) {
  json p = {{"subcommand", c.subcommand},
            {"realization", c.realization},
            {"n_modes", c.n_modes},
            {"tolerance", c.tolerance},
            {"cap", c.cap}};
  if (c.order) p["N"] = *c.order;
  if (c.q_real) p["q"] = *c.q_real;
  if (c.cutoff) p["cutoff"] = *c.cutoff;
  if (c.truncation) p["truncation"] = *c.truncation;
  if (c.realization == "cyclic") p["exponent_mode"] = to_string(c.exponent_mode);
  return p;
}

int exit_for(const ConformanceReport& report) {
  return report.summary.failed_expected == 0 ? kPass : kRelationFailure;
}

CommandResult finish(std::vector<ResidualRecord> records, std::vector<Finding> findings,
                     json params) {
  ReportMetadata meta;
  meta.timestamp = now_or_fixed();
  meta.params = std::move(params);
  CommandResult out;
  out.report = assemble(std::move(records), std::move(findings), std::move(meta));
  out.exit_code = exit_for(out.report);
  return out;
}

void append(std::vector<ResidualRecord>& into, std::vector<ResidualRecord> more) {
  into.insert(into.end(), std::make_move_iterator(more.begin()),
              std::make_move_iterator(more.end()));
}

void add_divergence_findings(const std::vector<ResidualRecord>& records,
                             std::vector<Finding>& findings) {
  for (const auto& r : records) {
    if (r.expected) continue;
    std::ostringstream os;
    os << "documented divergence on this basis; residual " << format17(r.residual)
       << (r.passed ? " (holds here)" : " (does not hold here)");
    findings.push_back({r.relation_id, os.str()});
  }
}

RepAssignment build_realization(const RunConfig& c, std::vector<Finding>* findings) {
  const QParameter p = make_q(c);
  if (c.realization == "fock") return build_fock_rep(c.n_modes, *c.order, c.cap);
  if (c.realization == "bargmann") return build_bargmann_rep(p, c.n_modes, c.cutoff.value_or(8), c.cap);
  auto real = build_cyclic_rep(p, c.n_modes, c.exponent_mode, c.tolerance, c.cap);
  if (findings) {
    std::ostringstream os;
    os << "exponent mode " << to_string(c.exponent_mode)
       << (real.conforms ? " realizes" : " does not realize")
       << " the exchange relations; max residual " << format17(real.max_residual);
    findings->push_back({"cyclic.exponent_mode.selected", os.str()});
  }
  return std::move(real.rep);
}

}  // namespace

void set_fixed_timestamp(std::string timestamp) { fixed_timestamp() = std::move(timestamp); }

void apply_config_file(const json& doc, RunConfig& c) {
  if (!doc.is_object()) throw usage("config file must hold a JSON object");
  try {
    if (doc.contains("n")) c.n_modes = doc.at("n").get<int>();
    if (doc.contains("N")) c.order = doc.at("N").get<int>();
    if (doc.contains("q_real")) c.q_real = doc.at("q_real").get<double>();
    if (doc.contains("realization")) c.realization = doc.at("realization").get<std::string>();
    if (doc.contains("cutoff")) c.cutoff = doc.at("cutoff").get<int>();
    if (doc.contains("truncation")) c.truncation = doc.at("truncation").get<int>();
    if (doc.contains("tolerance")) c.tolerance = doc.at("tolerance").get<double>();
    if (doc.contains("exponent_mode"))
      c.exponent_mode = parse_exponent_mode(doc.at("exponent_mode").get<std::string>());
    if (doc.contains("out")) c.output_path = doc.at("out").get<std::string>();
    if (doc.contains("cap")) c.cap = doc.at("cap").get<std::size_t>();
    if (doc.contains("window")) c.window = doc.at("window").get<int>();
  } catch (const json::exception& e) {
    throw usage(std::string("bad config value: ") + e.what());
  }
}

void validate(const RunConfig& c) {
  if (c.n_modes < 1) throw usage("--n must be >= 1");
  if (c.order && c.q_real) throw usage("--N and --q-real are mutually exclusive");
  if (c.order && *c.order < 2) throw usage("--N must be >= 2");
  if (c.q_real && !(*c.q_real > 0.0 && *c.q_real < 1.0)) throw usage("--q-real must lie in (0,1)");
  if (c.truncation && *c.truncation < 1) throw usage("--K must be >= 1");
  if (!(c.tolerance > 0.0)) throw usage("--tolerance must be positive");
  if (c.cutoff && *c.cutoff < 1) throw usage("--cutoff must be >= 1");

  const bool needs_rep = c.subcommand == "verify" || (c.subcommand == "virasoro" && !c.classical_limit);
  if (!needs_rep) return;
  if (c.realization == "fock") {
    if (!c.order) throw usage("the fock realization requires --N (q is a root of unity)");
  } else if (c.realization == "cyclic") {
    if (!c.order) throw usage("the cyclic realization requires --N (q is a root of unity)");
  } else if (c.realization == "bargmann") {
    if (!c.order && !c.q_real) throw usage("the bargmann realization requires --N or --q-real");
  } else {
    throw usage("unknown realization '" + c.realization + "' (fock, bargmann, cyclic)");
  }
}

CommandResult cmd_verify(const RunConfig& c) {
  validate(c);
  const QParameter p = make_q(c);
  std::vector<ResidualRecord> records;
  std::vector<Finding> findings;
  json params = base_params(c);

  if (c.realization == "fock") {
    const RepAssignment rep = build_fock_rep(c.n_modes, *c.order, c.cap);
    records = check_suite(rep, relation_suite_oscillator(p, c.n_modes, *c.order), c.tolerance);
    double deviation = 0.0;
    for (int i = 1; i <= c.n_modes; ++i) {
      deviation = std::max(deviation, max_abs(rep.at(sym::abar(i)).matrix -
                                              adjoint(rep.at(sym::a(i)).matrix)));
    }
    findings.push_back({"fock.adjointness",
                        "max |abar_i - a_i^dagger| = " + format17(deviation) +
                            " (abar is built independently, not as the adjoint)"});
  } else if (c.realization == "bargmann") {
    const int cutoff = c.cutoff.value_or(8);
    params["cutoff"] = cutoff;
    const RepAssignment rep = build_bargmann_rep(p, c.n_modes, cutoff, c.cap);
    OscillatorSuiteOptions opts;
    opts.n_modes = c.n_modes;
    if (p.is_root_of_unity()) {
      opts.nilpotency_order = p.order();
      opts.creation_power_checks = false;
    }
    records = check_suite(rep, relation_suite_oscillator(p, opts), c.tolerance);
    if (p.is_root_of_unity()) {
      if (cutoff >= p.order() - 1) {
        append(records, fock_agreement(rep, build_fock_rep(c.n_modes, p.order(), c.cap),
                                       c.tolerance));
      }
      findings.push_back({"bargmann.measure",
                          "inner-product identities need a real q; skipped at a root of unity"});
    } else {
      append(records, measure_identity_records(p, c.n_modes, cutoff, jackson_terms(c, p)));
    }
  } else {
    const RepAssignment rep = build_realization(c, &findings);
    append(records, check_suite(rep, relation_suite_shift(p, c.n_modes), 1e-12));
    OscillatorSuiteOptions opts = default_oscillator_options(c.n_modes, p.order());
    opts.number_operators = false;
    append(records, check_suite(rep, relation_suite_oscillator(p, opts), c.tolerance));

    std::ostringstream os;
    std::vector<std::string> winners;
    for (const auto& o : compare_exponent_modes(p, c.n_modes, all_exponent_modes(), c.tolerance,
                                                c.cap)) {
      if (o.conforms) winners.emplace_back(to_string(o.mode));
      os << to_string(o.mode) << ": max residual " << format17(o.max_residual) << "; ";
    }
    std::string list;
    for (const auto& w : winners) list += (list.empty() ? "" : ", ") + w;
    findings.push_back({"cyclic.exponent_mode.comparison",
                        "conforming modes: [" + list + "]; " + os.str()});
  }
  add_divergence_findings(records, findings);
  return finish(std::move(records), std::move(findings), std::move(params));
}

CommandResult cmd_virasoro(const RunConfig& c) {
  validate(c);
  std::vector<ResidualRecord> records;
  std::vector<Finding> findings;
  json params = base_params(c);

  if (c.classical_limit) {
    const int cutoff = c.cutoff.value_or(10);
    const int wmax = c.window.value_or(2);
    const std::vector<double> qs{0.9, 0.99, 0.999};
    params = {{"subcommand", c.subcommand}, {"realization", "bargmann"}, {"n_modes", 1},
              {"cutoff", cutoff}, {"window", wmax}, {"q_sequence", qs},
              {"classical_limit", true}, {"cap", c.cap}};
    const auto rows = classical_limit_probe(qs, cutoff, wmax);
    double worst_increase = 0.0;
    std::ostringstream table;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      records.push_back(scalar_record("classical.q=" + format17(rows[k].q), "classical limit",
                                      rows[k].residual, 10.0 * (1.0 - rows[k].q)));
      table << "q=" << rows[k].q << " residual=" << format17(rows[k].residual);
      if (k > 0) {
        worst_increase = std::max(worst_increase, rows[k].residual - rows[k - 1].residual);
        table << " ratio=" << format17(rows[k - 1].residual / rows[k].residual);
      }
      table << "; ";
    }
    records.push_back(scalar_record("classical.monotone", "classical limit", worst_increase, 0.0));
    findings.push_back({"classical.table", table.str()});
    return finish(std::move(records), std::move(findings), std::move(params));
  }

  const RepAssignment rep = build_realization(c, &findings);
  std::vector<int> window;
  if (c.window) {
    for (int m = -1; m <= *c.window; ++m) window.push_back(m);
  } else {
    window = default_window(rep);
  }
  if (c.extra_m) {
    for (int i = 1; i <= rep.n_modes(); ++i) build_l(rep, i, *c.extra_m);
  }
  if (c.extra_m && std::find(window.begin(), window.end(), *c.extra_m) == window.end()) {
    window.insert(window.begin(), *c.extra_m);
    std::sort(window.begin(), window.end());
  }
  params["window"] = window;

  auto checked = check_virasoro(rep, window, c.tolerance);
  records = std::move(checked.records);
  findings.insert(findings.end(), checked.findings.begin(), checked.findings.end());
  for (int i = 1; i <= rep.n_modes(); ++i) {
    for (int m : window) {
      const Matrix small = build_l(rep, i, m);
      const Matrix back = l_from_L(rep, i, build_L(rep, i, m));
      records.push_back(make_record("vir.roundtrip." + std::to_string(i) + ".m" + std::to_string(m),
                                    "rescaling round trip", small, back, 1e-12));
    }
  }
  return finish(std::move(records), std::move(findings), std::move(params));
}

int cmd_qcalc(const RunConfig& c, std::ostream& out) {
  validate(c);
  const QParameter p = make_q(c);
  const std::string& op = c.qcalc_op;
  if (op == "qnum") {
    if (!c.x) throw usage("qnum needs --x");
    out << format17(q_number(p, *c.x)) << '\n';
  } else if (op == "qfact") {
    if (!c.n || *c.n < 0) throw usage("qfact needs --n >= 0");
    out << format17(q_factorial(p, *c.n)) << '\n';
  } else if (op == "qexp") {
    if (!c.x) throw usage("qexp needs --x");
    out << format17(q_exponential(p, complex{static_cast<double>(*c.x), 0.0},
                                       c.truncation.value_or(kDefaultTruncation))) << '\n';
  } else if (op == "jackson") {
    if (!c.moment || *c.moment < 0) throw usage("jackson needs --moment >= 0");
    out << format17(radial_moment(p, *c.moment, jackson_terms(c, p))) << '\n';
  } else if (op == "halfpow") {
    if (!c.half_m) throw usage("halfpow needs --m");
    out << format17(half_power(p, *c.half_m)) << '\n';
  } else {
    throw usage("unknown qcalc operation '" + op + "'");
  }
  return kPass;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conformance checks for q-deformed covariant oscillator realizations", "qosc"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;
  std::string mode_name;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file (flags override it)");
    sub->add_option("--n", cfg.n_modes, "number of modes");
    sub->add_option("--N", cfg.order, "root order: q = exp(2 pi i/N)");
    sub->add_option("--q-real", cfg.q_real, "real deformation parameter in (0,1)");
    sub->add_option("--realization", cfg.realization, "fock | bargmann | cyclic");
    sub->add_option("--cutoff", cfg.cutoff, "polynomial cutoff D");
    sub->add_option("--K", cfg.truncation, "series truncation");
    sub->add_option("--tolerance", cfg.tolerance, "relation tolerance");
    sub->add_option("--exponent-mode", mode_name, "cyclic factor: squared_diff | squared_h | linear");
    sub->add_option("--out", cfg.output_path, "report path (default: stdout)");
    sub->add_option("--cap", cfg.cap, "dimension cap");
  };

  auto* verify = app.add_subcommand("verify", "check the oscillator algebra in one realization");
  add_common(verify);
  auto* virasoro = app.add_subcommand("virasoro", "check the q-Virasoro algebra");
  add_common(virasoro);
  virasoro->add_option("--window", cfg.window, "check r, m in -1..W");
  virasoro->add_option("--m", cfg.extra_m, "additional generator index to include");
  virasoro->add_flag("--classical-limit", cfg.classical_limit, "run the q -> 1 probe");

  auto* qcalc = app.add_subcommand("qcalc", "evaluate q-calculus scalars");
  qcalc->add_option("op", cfg.qcalc_op, "qnum | qfact | qexp | jackson | halfpow")->required();
  qcalc->add_option("--N", cfg.order, "root order");
  qcalc->add_option("--q-real", cfg.q_real, "real deformation parameter");
  qcalc->add_option("--x", cfg.x, "integer argument");
  qcalc->add_option("--n", cfg.n, "factorial order");
  qcalc->add_option("--moment", cfg.moment, "Jackson moment");
  qcalc->add_option("--m", cfg.half_m, "half-power exponent");
  qcalc->add_option("--K", cfg.truncation, "series truncation");

  auto* schema = app.add_subcommand("report-schema", "print the report JSON schema");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (schema->parsed()) {
      out << report_schema().dump(2) << '\n';
      return kPass;
    }
    if (qcalc->parsed()) {
      cfg.subcommand = "qcalc";
      return cmd_qcalc(cfg, out);
    }

    CLI::App* sub = verify->parsed() ? verify : virasoro;
    cfg.subcommand = sub->get_name();
    if (!config_path.empty()) {
      // flags override the file: re-apply every flag that was given
      RunConfig flags = cfg;
      std::ifstream in(config_path);
      if (!in) throw usage("cannot read config file " + config_path);
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::exception& e) {
        throw usage(std::string("config file is not valid JSON: ") + e.what());
      }
      apply_config_file(doc, cfg);
      auto given = [&](const char* name) { return sub->count(name) > 0; };
      if (given("--n")) cfg.n_modes = flags.n_modes;
      if (given("--N")) cfg.order = flags.order;
      if (given("--q-real")) cfg.q_real = flags.q_real;
      if (given("--realization")) cfg.realization = flags.realization;
      if (given("--cutoff")) cfg.cutoff = flags.cutoff;
      if (given("--K")) cfg.truncation = flags.truncation;
      if (given("--tolerance")) cfg.tolerance = flags.tolerance;
      if (given("--out")) cfg.output_path = flags.output_path;
      if (given("--cap")) cfg.cap = flags.cap;
      if (sub == virasoro && given("--window")) cfg.window = flags.window;
      // a file-level q choice yields to the other flag
      if (given("--N") && !given("--q-real")) cfg.q_real.reset();
      if (given("--q-real") && !given("--N")) cfg.order.reset();
    }
    if (!mode_name.empty()) cfg.exponent_mode = parse_exponent_mode(mode_name);

    const CommandResult result = sub == verify ? cmd_verify(cfg) : cmd_virasoro(cfg);
    const std::string text = serialize(result.report);
    if (cfg.output_path.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.output_path);
      if (!file) throw usage("cannot write report to " + cfg.output_path);
      file << text;
      const auto& s = result.report.summary;
      out << cfg.subcommand << ": " << s.passed << "/" << s.total << " passed, "
          << s.failed_expected << " unexpected failures, " << s.divergent
          << " documented divergences -> " << cfg.output_path << '\n';
    }
    return result.exit_code;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::Resource: return kResource;
      case ErrorKind::Numeric:
      case ErrorKind::Integrity: return kRelationFailure;
      default: return kUsage;
    }
  }
}

}  // namespace qosc::cli
