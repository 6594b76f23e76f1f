#include <doctest.h>

#include <sstream>

#include "symflag/errors.hpp"
#include "symflag/report.hpp"

using namespace symflag;

namespace {

Report sample() {
  Report r;
  r.entry = "group-A1";
  r.operation = "verify";
  r.param("tau", "1/8");
  r.param("epsilon", "1/20");
  r.table.columns = {"check", "status", "detail"};
  r.table.rows = {{"a", "pass", "tab\there"}, {"b", "advisory", "line\nbreak"}};
  r.check("a", CheckStatus::Pass, "ok");
  r.check("b", CheckStatus::Advisory, "window");
  r.sections.emplace_back("extra", Table{{"k", "v"}, {{"x", "1"}}});
  return r;
}

}  // namespace

TEST_CASE("JSON round trip is exact") {
  const std::string text = emit(sample(), ReportFormat::Json);
  CHECK_NOTHROW(validate_report_json(text));
  CHECK(emit(parse_report_json(text), ReportFormat::Json) == text);
  CHECK(text.find("\"verdict\": \"pass\"") != std::string::npos);
}

TEST_CASE("TSV has one line per row plus the header, cells sanitized") {
  const std::string tsv = emit(sample(), ReportFormat::Tsv);
  std::istringstream in(tsv);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    CHECK(std::count(line.begin(), line.end(), '\t') == 2);
  }
  CHECK(lines == 3);
}

TEST_CASE("a failing check flips the verdict") {
  Report r = sample();
  r.check("c", CheckStatus::Fail, "broken");
  CHECK_FALSE(r.passed());
  CHECK(emit(r, ReportFormat::Json).find("\"verdict\": \"fail\"") != std::string::npos);
}

TEST_CASE("strict validation") {
  std::string text = emit(sample(), ReportFormat::Json);
  const auto swap = [&](const std::string& from, const std::string& to) {
    std::string t = text;
    t.replace(t.rfind(from), from.size(), to);
    return t;
  };
  CHECK_THROWS_AS(validate_report_json(swap("\"verdict\": \"pass\"", "\"verdict\": \"fail\"")), SchemaError);
  CHECK_THROWS_AS(validate_report_json(swap("\"schema\"", "\"schemata\"")), SchemaError);
  CHECK_THROWS_AS(validate_report_json(swap("\"advisory\"", "\"maybe\"")), SchemaError);
  CHECK_THROWS_AS(validate_report_json("{"), SchemaError);
}

TEST_CASE("decimal formatting") {
  CHECK(format_decimal(0.5) == "0.5");
  CHECK(format_decimal(1e-16) == "1e-16");
}
