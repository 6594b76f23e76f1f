#pragma once

// Report structure shared by the suite and the CLI, with deterministic JSON
// and TSV serialization.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symflag {

enum class ReportFormat { Json, Tsv };
ReportFormat parse_report_format(const std::string& text);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const Table&, const Table&) = default;
};

enum class CheckStatus { Pass, Fail, Advisory };
std::string to_string(CheckStatus s);
CheckStatus parse_check_status(const std::string& text);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;

  friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
  std::string entry;
  std::string operation;
  std::vector<std::pair<std::string, std::string>> params;  // insertion order is kept
  Table table;                                              // the main result rows
  std::vector<Check> checks;
  std::vector<std::pair<std::string, Table>> sections;      // extra tables, JSON only

  /// No check has status Fail.
  bool passed() const;
  void param(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }
  void check(std::string name, CheckStatus status, std::string detail) {
    checks.push_back({std::move(name), status, std::move(detail)});
  }

  friend bool operator==(const Report&, const Report&) = default;
};

/// JSON: schema "symflag-report/1", two-space indent, trailing newline.
/// TSV: header of the main table plus one line per row.
std::string emit(const Report& report, ReportFormat format);

/// Checks a JSON document against the report schema. Throws SchemaError with
/// a JSON pointer (or "line N" for malformed JSON).
void validate_report_json(std::string_view text);
/// validate_report_json followed by conversion back to a Report.
Report parse_report_json(std::string_view text);

/// printf("%.12g") for floating point residuals.
std::string format_decimal(double v);

}  // namespace symflag
