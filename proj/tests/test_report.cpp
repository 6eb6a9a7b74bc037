#include <doctest.h>

#include <cmath>

#include "qosc/errors.hpp"
#include "qosc/report.hpp"

using namespace qosc;

namespace {

ResidualRecord rec(std::string id, double residual, bool passed, bool expected = true) {
  ResidualRecord r;
  r.relation_id = std::move(id);
  r.family = "f";
  r.residual = residual;
  r.tolerance = 1e-10;
  r.passed = passed;
  r.expected = expected;
  return r;
}

}  // namespace

TEST_CASE("empty report") {
  const auto report = assemble({}, {}, {});
  CHECK(report.summary.total == 0);
  CHECK(report.summary.passed == 0);
  CHECK(deserialize(serialize(report)).summary.total == 0);
}

TEST_CASE("summary counts and ordering") {
  const auto report = assemble({rec("z", 0.5, false), rec("a", 0.0, true)}, {}, {});
  CHECK(report.summary.passed == 1);
  CHECK(report.summary.failed == 1);
  CHECK(report.summary.failed_expected == 1);
  CHECK(report.records.front().relation_id == "a");
}

TEST_CASE("documented divergences are failures but not expected failures") {
  const auto report = assemble({rec("d", 1.0, false, false)}, {}, {});
  CHECK(report.summary.failed == 1);
  CHECK(report.summary.failed_expected == 0);
  CHECK(report.summary.divergent == 1);
}

TEST_CASE("duplicate ids are an integrity error") {
  CHECK_THROWS_AS(assemble({rec("x", 0, true), rec("x", 0, true)}, {}, {}), Error);
}

TEST_CASE("serialization round-trips every field exactly") {
  ReportMetadata meta;
  meta.timestamp = "2026-01-01T00:00:00Z";
  meta.params = {{"N", 5}, {"q", 0.1}};
  std::vector<ResidualRecord> records{rec("a", 1.0 / 3.0, true), rec("b", 5e-324, true),
                                      rec("c", std::nan(""), false),
                                      rec("d", HUGE_VAL, false, false)};
  records[0].norm_scale = 2.718281828459045;
  const auto report = assemble(records, {{"label", "detail"}}, meta);
  const auto back = deserialize(serialize(report));
  CHECK(back.version == report.version);
  CHECK(back.timestamp == report.timestamp);
  CHECK(back.params == report.params);
  CHECK(back.summary == report.summary);
  REQUIRE(back.records.size() == 4);
  CHECK(back.records[0] == report.records[0]);
  CHECK(back.records[1] == report.records[1]);
  CHECK(std::isnan(back.records[2].residual));
  CHECK(back.records[3].residual == HUGE_VAL);
  CHECK(back.findings.front().detail == "detail");
  CHECK(serialize(back) == serialize(report));
}

TEST_CASE("tampered summaries and malformed documents are rejected") {
  auto doc = to_json(assemble({rec("a", 0, true)}, {}, {}));
  doc["summary"]["passed"] = 7;
  CHECK_THROWS_AS(from_json(doc), Error);
  CHECK_THROWS_AS(deserialize("{not json"), Error);
  CHECK_THROWS_AS(deserialize("{}"), Error);
}

TEST_CASE("schema names the top-level fields") {
  const auto schema = report_schema();
  CHECK(schema["required"].size() == 6);
  CHECK(schema["properties"].contains("records"));
}
