#include "qosc/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>

#include "qosc/errors.hpp"

namespace qosc {

using nlohmann::json;

namespace {

// JSON has no NaN/inf; such residuals travel as strings.
json number_or_string(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

double read_number(const json& v) {
  if (v.is_number()) return v.get<double>();
  const auto s = v.get<std::string>();
  if (s == "nan") return std::nan("");
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  throw Error(ErrorKind::Integrity, "malformed numeric field '" + s + "'");
}

}  // namespace

ReportSummary tally(const std::vector<ResidualRecord>& records) {
  ReportSummary s;
  s.total = records.size();
  for (const auto& r : records) {
    if (r.passed) {
      ++s.passed;
    } else {
      ++s.failed;
      if (r.expected) ++s.failed_expected;
    }
    if (!r.expected) ++s.divergent;
  }
  return s;
}

ConformanceReport assemble(std::vector<ResidualRecord> records, std::vector<Finding> findings,
                           ReportMetadata metadata) {
  std::stable_sort(records.begin(), records.end(),
                   [](const auto& a, const auto& b) { return a.relation_id < b.relation_id; });
  const auto dup = std::adjacent_find(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return a.relation_id == b.relation_id;
  });
  if (dup != records.end()) {
    throw Error(ErrorKind::Integrity, "duplicate relation id '" + dup->relation_id + "'");
  }
  ConformanceReport rep;
  rep.version = std::move(metadata.version);
  rep.timestamp = std::move(metadata.timestamp);
  rep.params = std::move(metadata.params);
  rep.summary = tally(records);
  rep.records = std::move(records);
  rep.findings = std::move(findings);
  return rep;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json to_json(const ConformanceReport& report) {
  json records = json::array();
  for (const auto& r : report.records) {
    records.push_back({{"id", r.relation_id},
                       {"family", r.family},
                       {"residual", number_or_string(r.residual)},
                       {"norm_scale", number_or_string(r.norm_scale)},
                       {"tolerance", r.tolerance},
                       {"passed", r.passed},
                       {"expected", r.expected}});
  }
  json findings = json::array();
  for (const auto& f : report.findings) findings.push_back({{"label", f.label}, {"detail", f.detail}});
  return {{"version", report.version},
          {"timestamp", report.timestamp},
          {"params", report.params},
          {"records", std::move(records)},
          {"findings", std::move(findings)},
          {"summary",
           {{"total", report.summary.total},
            {"passed", report.summary.passed},
            {"failed", report.summary.failed},
            {"failed_expected", report.summary.failed_expected},
            {"divergent", report.summary.divergent}}}};
}

ConformanceReport from_json(const json& doc) {
  try {
    ConformanceReport rep;
    rep.version = doc.at("version").get<std::string>();
    rep.timestamp = doc.at("timestamp").get<std::string>();
    rep.params = doc.at("params");
    for (const auto& r : doc.at("records")) {
      ResidualRecord rec;
      rec.relation_id = r.at("id").get<std::string>();
      rec.family = r.at("family").get<std::string>();
      rec.residual = read_number(r.at("residual"));
      rec.norm_scale = read_number(r.at("norm_scale"));
      rec.tolerance = r.at("tolerance").get<double>();
      rec.passed = r.at("passed").get<bool>();
      rec.expected = r.at("expected").get<bool>();
      rep.records.push_back(std::move(rec));
    }
    for (const auto& f : doc.at("findings")) {
      rep.findings.push_back({f.at("label").get<std::string>(), f.at("detail").get<std::string>()});
    }
    const auto& s = doc.at("summary");
    rep.summary.total = s.at("total").get<std::size_t>();
    rep.summary.passed = s.at("passed").get<std::size_t>();
    rep.summary.failed = s.at("failed").get<std::size_t>();
    rep.summary.failed_expected = s.at("failed_expected").get<std::size_t>();
    rep.summary.divergent = s.at("divergent").get<std::size_t>();
    if (!(rep.summary == tally(rep.records))) {
      throw Error(ErrorKind::Integrity, "report summary does not match its records");
    }
    return rep;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Integrity, std::string("malformed report: ") + e.what());
  }
}

std::string serialize(const ConformanceReport& report) { return to_json(report).dump(2) + "\n"; }

ConformanceReport deserialize(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Integrity, std::string("report is not valid JSON: ") + e.what());
  }
  return from_json(doc);
}

json report_schema() {
  const json number_like = {{"oneOf", json::array({{{"type", "number"}},
                                                   {{"enum", {"nan", "inf", "-inf"}}}})}};
  const json record = {
      {"type", "object"},
      {"required", {"id", "family", "residual", "norm_scale", "tolerance", "passed", "expected"}},
      {"properties",
       {{"id", {{"type", "string"}}},
        {"family", {{"type", "string"}}},
        {"residual", number_like},
        {"norm_scale", number_like},
        {"tolerance", {{"type", "number"}}},
        {"passed", {{"type", "boolean"}}},
        {"expected", {{"type", "boolean"}}}}}};
  const json finding = {{"type", "object"},
                        {"required", {"label", "detail"}},
                        {"properties",
                         {{"label", {{"type", "string"}}}, {"detail", {{"type", "string"}}}}}};
  const json count = {{"type", "integer"}, {"minimum", 0}};
  return {{"$schema", "https://json-schema.org/draft/2020-12/schema"},
          {"title", "qosc conformance report"},
          {"type", "object"},
          {"required", {"version", "timestamp", "params", "records", "findings", "summary"}},
          {"properties",
           {{"version", {{"type", "string"}}},
            {"timestamp", {{"type", "string"}}},
            {"params", {{"type", "object"}}},
            {"records", {{"type", "array"}, {"items", record}}},
            {"findings", {{"type", "array"}, {"items", finding}}},
            {"summary",
             {{"type", "object"},
              {"required", {"total", "passed", "failed", "failed_expected", "divergent"}},
              {"properties",
               {{"total", count},
                {"passed", count},
                {"failed", count},
                {"failed_expected", count},
                {"divergent", count}}}}}}}};
}

}  // namespace qosc
