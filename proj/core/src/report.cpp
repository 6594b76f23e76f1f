#include "symflag/report.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "symflag/errors.hpp"

namespace symflag {

namespace {

using nlohmann::ordered_json;

constexpr const char* kSchemaId = "symflag-report/1";

ordered_json table_json(const Table& t) {
  ordered_json j;
  j["columns"] = t.columns;
  j["rows"] = ordered_json::array();
  for (const auto& row : t.rows) j["rows"].push_back(row);
  return j;
}

std::string tsv_cell(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

void require(bool ok, const std::string& where, const std::string& msg) {
  if (!ok) throw SchemaError(where, msg);
}

void require_string_array(const ordered_json& j, const std::string& where) {
  require(j.is_array(), where, "expected an array");
  for (std::size_t i = 0; i < j.size(); ++i)
    require(j[i].is_string(), where + "/" + std::to_string(i), "expected a string");
}

void validate_table(const ordered_json& j, const std::string& where) {
  require(j.is_object(), where, "expected an object");
  require(j.contains("columns"), where + "/columns", "missing field");
  require(j.contains("rows"), where + "/rows", "missing field");
  require_string_array(j["columns"], where + "/columns");
  const auto& rows = j["rows"];
  require(rows.is_array(), where + "/rows", "expected an array");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string rw = where + "/rows/" + std::to_string(i);
    require_string_array(rows[i], rw);
    require(rows[i].size() == j["columns"].size(), rw, "row width differs from the header");
  }
}

Table table_from(const ordered_json& j) {
  Table t;
  t.columns = j["columns"].get<std::vector<std::string>>();
  for (const auto& row : j["rows"]) t.rows.push_back(row.get<std::vector<std::string>>());
  return t;
}

ordered_json parse_json(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw SchemaError("line " + std::to_string(line), "malformed JSON");
  }
}

void validate(const ordered_json& j) {
  require(j.is_object(), "", "expected an object");
  static const std::vector<std::string> keys{"schema", "entry", "operation", "params", "columns",
                                             "rows",   "checks", "sections", "verdict"};
  for (const auto& k : keys) require(j.contains(k), "/" + k, "missing field");
  for (auto it = j.begin(); it != j.end(); ++it)
    require(std::find(keys.begin(), keys.end(), it.key()) != keys.end(), "/" + it.key(), "unknown field");
  require(j["schema"] == kSchemaId, "/schema", std::string("expected \"") + kSchemaId + "\"");
  require(j["entry"].is_string(), "/entry", "expected a string");
  require(j["operation"].is_string(), "/operation", "expected a string");
  require(j["params"].is_object(), "/params", "expected an object");
  for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
    require(it.value().is_string(), "/params/" + it.key(), "expected a string");

  ordered_json main;
  main["columns"] = j["columns"];
  main["rows"] = j["rows"];
  validate_table(main, "");

  const auto& checks = j["checks"];
  require(checks.is_array(), "/checks", "expected an array");
  bool failed = false;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const std::string where = "/checks/" + std::to_string(i);
    const auto& c = checks[i];
    require(c.is_object(), where, "expected an object");
    for (const char* k : {"name", "status", "detail"}) {
      require(c.contains(k), where + "/" + k, "missing field");
      require(c[k].is_string(), where + "/" + k, "expected a string");
    }
    const std::string s = c["status"].get<std::string>();
    require(s == "pass" || s == "fail" || s == "advisory", where + "/status", "expected pass, fail or advisory");
    failed = failed || s == "fail";
  }

  require(j["sections"].is_object(), "/sections", "expected an object");
  for (auto it = j["sections"].begin(); it != j["sections"].end(); ++it)
    validate_table(it.value(), "/sections/" + it.key());

  require(j["verdict"] == (failed ? "fail" : "pass"), "/verdict", "verdict disagrees with the checks");
}

}  // namespace

ReportFormat parse_report_format(const std::string& text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "tsv") return ReportFormat::Tsv;
  throw std::invalid_argument("unknown format: " + text);
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Advisory: return "advisory";
  }
  return "fail";
}

CheckStatus parse_check_status(const std::string& text) {
  if (text == "pass") return CheckStatus::Pass;
  if (text == "fail") return CheckStatus::Fail;
  if (text == "advisory") return CheckStatus::Advisory;
  throw std::invalid_argument("unknown check status: " + text);
}

bool Report::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

std::string format_decimal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string emit(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Tsv) {
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "\t" : "") + tsv_cell(cells[i]);
      out += '\n';
    };
    line(report.table.columns);
    for (const auto& row : report.table.rows) line(row);
    return out;
  }

  ordered_json j;
  j["schema"] = kSchemaId;
  j["entry"] = report.entry;
  j["operation"] = report.operation;
  j["params"] = ordered_json::object();
  for (const auto& [k, v] : report.params) j["params"][k] = v;
  const ordered_json main = table_json(report.table);
  j["columns"] = main["columns"];
  j["rows"] = main["rows"];
  j["checks"] = ordered_json::array();
  for (const Check& c : report.checks)
    j["checks"].push_back(ordered_json{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  j["sections"] = ordered_json::object();
  for (const auto& [name, t] : report.sections) j["sections"][name] = table_json(t);
  j["verdict"] = report.passed() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

void validate_report_json(std::string_view text) { validate(parse_json(text)); }

Report parse_report_json(std::string_view text) {
  const ordered_json j = parse_json(text);
  validate(j);
  Report r;
  r.entry = j["entry"].get<std::string>();
  r.operation = j["operation"].get<std::string>();
  for (auto it = j["params"].begin(); it != j["params"].end(); ++it) r.param(it.key(), it.value().get<std::string>());
  ordered_json main;
  main["columns"] = j["columns"];
  main["rows"] = j["rows"];
  r.table = table_from(main);
  for (const auto& c : j["checks"])
    r.check(c["name"].get<std::string>(), parse_check_status(c["status"].get<std::string>()),
            c["detail"].get<std::string>());
  for (auto it = j["sections"].begin(); it != j["sections"].end(); ++it)
    r.sections.emplace_back(it.key(), table_from(it.value()));
  return r;
}

}  // namespace symflag
