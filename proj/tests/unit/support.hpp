#pragma once

#include <optional>
#include <string>

#include "symflag/catalog.hpp"
#include "symflag/suite.hpp"

namespace testing {

inline symflag::Session session(const std::string& pair, std::optional<symflag::Rational> eps = std::nullopt,
                                symflag::Rational radius = 3) {
  symflag::SuiteOptions o;
  o.epsilon = std::move(eps);
  o.radius = std::move(radius);
  return symflag::Session(symflag::find_entry(symflag::builtin_catalog(), pair), o);
}

inline symflag::Rational q(const char* s) { return symflag::parse_rational(s); }

inline symflag::LatticePoint pt(std::initializer_list<std::int64_t> c) { return {std::vector<std::int64_t>(c)}; }

}  // namespace testing
