#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "symflag/errors.hpp"

using namespace symflag;
using testing::pt;

namespace {

const Check* find_check(const Report& r, const std::string& name) {
  const auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const Check& c) { return c.name == name; });
  return it == r.checks.end() ? nullptr : &*it;
}

std::string param(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.params)
    if (k == key) return v;
  return "";
}

}  // namespace

TEST_CASE("full suite passes on every built-in entry") {
  for (const CatalogEntry& e : builtin_catalog()) {
    CAPTURE(e.name);
    SuiteOptions o;
    o.jobs = 4;
    const Report r = run_suite(e, o);
    for (const Check& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.status != CheckStatus::Fail);
    }
    CHECK(find_check(r, "finite_generation") != nullptr);
    CHECK_NOTHROW(validate_report_json(emit(r, ReportFormat::Json)));
  }
}

TEST_CASE("suite parameters and the triangle step") {
  SuiteOptions o;
  o.epsilon = Rational(1, 20);
  o.triangle = true;
  const Report r = run_suite(find_entry(builtin_catalog(), "group-A1"), o);
  CHECK(r.passed());
  CHECK(param(r, "tau") == "1/8");
  CHECK(param(r, "epsilon") == "1/20");
  CHECK(param(r, "a") == "[1/20]");
  REQUIRE(find_check(r, "triangle_hull[[1],s1]") != nullptr);
  CHECK(find_check(r, "triangle_hull[[1],s1]")->status == CheckStatus::Pass);
}

TEST_CASE("a rejected shift stops the suite with a failure") {
  SuiteOptions o;
  o.epsilon = Rational(1, 5);
  const Report r = run_suite(find_entry(builtin_catalog(), "group-A1"), o);
  CHECK_FALSE(r.passed());
  CHECK(r.checks.back().detail.find("NotSmall") != std::string::npos);
  CHECK(find_check(r, "end2_sweep") == nullptr);
}

TEST_CASE("radius zero degrades to advisories") {
  SuiteOptions o;
  o.radius = 0;
  const Report r = run_suite(find_entry(builtin_catalog(), "group-A2"), o);
  CHECK(r.passed());
  REQUIRE(find_check(r, "finite_generation") != nullptr);
  CHECK(find_check(r, "finite_generation")->status == CheckStatus::Advisory);
  CHECK(find_check(r, "triangularity")->status == CheckStatus::Advisory);
}

TEST_CASE("thread count does not change the report") {
  SuiteOptions one, many;
  many.jobs = 8;
  const auto& e = find_entry(builtin_catalog(), "group-A2");
  CHECK(emit(run_suite(e, one), ReportFormat::Json) == emit(run_suite(e, many), ReportFormat::Json));
}

TEST_CASE("single-operation reports") {
  const Session s = testing::session("group-A1", Rational(1, 20));
  const Report idx = index_report(s, pt({1}), std::string("s1"), std::nullopt);
  CHECK(idx.passed());
  CHECK(emit(idx, ReportFormat::Tsv).find("18") != std::string::npos);

  CHECK(index_report(s, std::nullopt, std::nullopt, std::nullopt).table.rows.size() == 10);
  CHECK(filtration_report(s).passed());
  CHECK(certify_report(s).passed());
  CHECK(product_report(s, pt({1}), "e", pt({0}), "s1").table.rows.at(0).at(0) == "y(s1,[-1])");
  CHECK_THROWS_AS(product_report(s, pt({1}), "s1", pt({0}), "s1"), NotInImplementedSector);
  CHECK(triangle_report(s, pt({1}), "s1").passed());
  CHECK(info_report(builtin_catalog(), std::nullopt).table.rows.size() == 6);
}
