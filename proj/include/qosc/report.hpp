#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qosc/opcore.hpp"

namespace qosc {

inline constexpr const char* kToolVersion = "0.1.0";

struct ReportSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Failed records that were expected to pass; drives the exit status.
  std::size_t failed_expected = 0;
  /// Records on a basis where the identity is documented not to hold.
  std::size_t divergent = 0;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct ReportMetadata {
  std::string version = kToolVersion;
  std::string timestamp;
  nlohmann::json params = nlohmann::json::object();
};

struct ConformanceReport {
  std::string version;
  std::string timestamp;
  nlohmann::json params = nlohmann::json::object();
  std::vector<ResidualRecord> records;
  std::vector<Finding> findings;
  ReportSummary summary;

  friend bool operator==(const ConformanceReport&, const ConformanceReport&) = default;
};

/// Sorts records by relation id and tallies the summary. Throws Integrity on a
/// duplicate relation id.
ConformanceReport assemble(std::vector<ResidualRecord> records, std::vector<Finding> findings,
                           ReportMetadata metadata);

ReportSummary tally(const std::vector<ResidualRecord>& records);

/// Current UTC time as ISO-8601.
std::string utc_timestamp();

nlohmann::json to_json(const ConformanceReport& report);
ConformanceReport from_json(const nlohmann::json& doc);

std::string serialize(const ConformanceReport& report);
ConformanceReport deserialize(const std::string& text);

/// JSON Schema describing the report document.
nlohmann::json report_schema();

}  // namespace qosc
