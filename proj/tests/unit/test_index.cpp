#include <doctest.h>

#include "oracles/oracles.hpp"
#include "support.hpp"
#include "symflag/errors.hpp"

using namespace symflag;
using testing::pt;

namespace {

// Hand-evaluated constants for group-A1 with tau = 1/8 and 2 alpha(a) = 1/5.
const Rational kTau(1, 8);
const Rational kEllE(2, 5);
const Rational kEllS(8, 5);
const long kUglyAlphaS = 18;
const long kMaslovAlpha = -8;
const Rational kAreaAlpha(-1);

CatalogEntry rank_one_with_multiplicity(int m) {
  CatalogEntry e = find_entry(builtin_catalog(), "group-A1");
  e.name = "A1-m" + std::to_string(m);
  e.multiplicities = {{2, m}};
  e.expected_dim = m;
  e.space_dim = m + 1;
  return e;
}

}  // namespace

TEST_CASE("group-A1 worked values") {
  const Session s = testing::session("group-A1", Rational(1, 20));
  const auto& idx = s.index();
  const WeylIndex e = WeylGroup::identity();
  const WeylIndex refl = s.weyl().from_word({0});

  CHECK(s.monotone().tau == kTau);
  CHECK(s.monotone().x0 == Vector{Rational(1, 2)});
  CHECK(idx.two_alpha(s.weyl().roots().positive_roots().front(), s.lattice().origin()) == Rational(1, 5));
  CHECK(idx.ell_prime(e) == kEllE);
  CHECK(idx.ell_prime(refl) == kEllS);
  CHECK(idx.ugly_index(pt({1}), refl) == kUglyAlphaS);
  CHECK(capping_maslov(s.model().roots(), s.lattice(), pt({1})) == kMaslovAlpha);
  CHECK(capping_area(s.model().roots(), s.lattice(), pt({1}), s.monotone()) == kAreaAlpha);
  CHECK(kAreaAlpha == kTau * kMaslovAlpha);
}

TEST_CASE("multiplicity one halves the ugly index") {
  SuiteOptions o;
  o.epsilon = Rational(1, 20);
  const Session s(rank_one_with_multiplicity(1), o);
  CHECK(s.index().ugly_index(pt({1}), s.weyl().from_word({0})) == kUglyAlphaS / 2);
}

TEST_CASE("rank-one degrees match integer floor arithmetic") {
  const Session s = testing::session("group-A1", Rational(1, 20));
  const WeylIndex refl = s.weyl().from_word({0});
  for (const LatticePoint& p : s.lattice().points(3)) {
    const long k = p.coords[0];
    CHECK(s.index().degree(0, p) == oracle::rank_one_degree(k, 2, 1, 5, true));
    CHECK(s.index().degree(refl, p) == oracle::rank_one_degree(k, 2, 1, 5, false));
  }
}

TEST_CASE("bad data have index zero, ugly data positive and equal to the quilt index") {
  for (const char* name : {"group-A1", "group-A2", "AI-A2", "AII-A1", "sphere-S7"}) {
    CAPTURE(name);
    const Session s = testing::session(name);
    const auto& idx = s.index();
    for (const LatticePoint& p : s.lattice().points(3)) {
      for (WeylIndex w = 0; w < s.weyl().size(); ++w) {
        const Integer qi = idx.quilt_index({p, w, p});
        if (idx.classify(p, w) == QuiltClass::Bad) {
          CHECK(qi == 0);
          CHECK_THROWS_AS(idx.ugly_index(p, w), NotUgly);
        } else {
          CHECK(idx.ugly_index(p, w) == qi);
          CHECK(qi >= 1);
        }
      }
    }
  }
}

TEST_CASE("quilt index rejects data outside the validated window") {
  const Session s = testing::session("group-A1");
  CHECK_THROWS_AS(s.index().quilt_index({pt({3}), 0, pt({3})}), InvariantViolation);
}

TEST_CASE("monotone data") {
  const Session s = testing::session("group-A2");
  const auto& rs = s.model().roots();
  CHECK(default_tau(rs) == Rational(1, 8));
  CHECK(monotone_identity_holds(rs, s.monotone(), s.lattice().basis()));
  MonotoneData broken = s.monotone();
  broken.tau *= 2;
  CHECK_FALSE(monotone_identity_holds(rs, broken, s.lattice().basis()));
  CHECK_THROWS_AS(monotone_data(rs, Rational(0)), std::invalid_argument);
}

TEST_CASE("area equals tau times Maslov for every capping class") {
  for (const CatalogEntry& e : builtin_catalog()) {
    CAPTURE(e.name);
    const Session s = testing::session(e.name);
    for (const LatticePoint& p : s.lattice().points(2))
      CHECK(capping_area(s.model().roots(), s.lattice(), p, s.monotone()) ==
            s.monotone().tau * Rational(capping_maslov(s.model().roots(), s.lattice(), p)));
  }
}

TEST_CASE("end2 chain holds on every pair and catches forged terms") {
  // An off-diagonal shift separates ell'(s1) from ell'(s2), so the antecedent fires.
  const EntryModel m(find_entry(builtin_catalog(), "AI-A2"));
  const GenericShift shift = validate_generic(m.weyl(), m.lattice(), Vector{Rational(1, 20), Rational(1, 30)},
                                              ShiftMode::SmallInChamber, 2);
  const IndexEngine idx(m.weyl(), m.lattice(), shift);
  const MonotoneData md = monotone_data(m.roots(), default_tau(m.roots()));
  std::vector<EndTerms> terms;
  for (const LatticePoint& p : m.lattice().points(2))
    for (WeylIndex w = 0; w < m.weyl().size(); ++w) terms.push_back(idx.end_terms({p, w}, md));
  std::size_t antecedent = 0;
  for (const EndTerms& a : terms)
    for (const EndTerms& b : terms) {
      CHECK(idx.end2_implication_check(a, b, md));
      if (a.floor_sum == b.floor_sum && a.pairing > b.pairing) ++antecedent;
    }
  CHECK(antecedent > 0);

  EndTerms forged = terms.front();
  forged.ell_prime += 1;
  CHECK_FALSE(idx.end2_implication_check(forged, terms.back(), md));
}

TEST_CASE("the end2 antecedent is vacuous along rho coroot") {
  const Session s = testing::session("group-A2");
  std::vector<EndTerms> terms;
  for (const LatticePoint& p : s.lattice().points(2))
    for (WeylIndex w = 0; w < s.weyl().size(); ++w) terms.push_back(s.index().end_terms({p, w}, s.monotone()));
  for (const EndTerms& a : terms)
    for (const EndTerms& b : terms)
      if (a.floor_sum == b.floor_sum) CHECK(a.pairing == b.pairing);
}

TEST_CASE("Morse indices and Poincare polynomials") {
  using P = std::vector<std::int64_t>;
  CHECK(testing::session("group-A1").index().poincare_polynomial() == P{1, 0, 1});
  CHECK(testing::session("group-A2").index().poincare_polynomial() == P{1, 0, 2, 0, 2, 0, 1});
  CHECK(testing::session("AI-A2").index().poincare_polynomial() == P{1, 2, 2, 1});
  CHECK(testing::session("AII-A1").index().poincare_polynomial() == P{1, 0, 0, 0, 1});

  const Session s = testing::session("group-A2");
  for (WeylIndex w = 0; w < s.weyl().size(); ++w)
    CHECK(s.index().morse_index(w) == 2 * s.weyl().length(w));
}

TEST_CASE("Morse index needs a small shift") {
  SuiteOptions o;
  o.mode = ShiftMode::RegularOnly;
  o.epsilon = Rational(1, 20);
  const Session s(find_entry(builtin_catalog(), "group-A1"), o);
  CHECK_THROWS_AS(s.index().morse_index(0), ModeMismatch);
}

TEST_CASE("ell' has a unique minimum at e") {
  for (const CatalogEntry& e : builtin_catalog()) {
    CAPTURE(e.name);
    const Session s = testing::session(e.name);
    const Rational at_e = s.index().ell_prime(0);
    for (WeylIndex w = 1; w < s.weyl().size(); ++w) CHECK(s.index().ell_prime(w) > at_e);
  }
}

TEST_CASE("parity report") {
  const ParityReport even = testing::session("group-A2").index().parity_report();
  CHECK(even.differential_must_vanish == "true");
  CHECK(even.reason == "even-multiplicities");
  CHECK(even.odd_count == 0);

  const Session s = testing::session("AI-A2");
  const auto& ai = s.index();
  const ParityReport plain = ai.parity_report(false);
  CHECK(plain.differential_must_vanish == "undetermined");
  CHECK(plain.odd_count > 0);
  CHECK(plain.even_count > 0);
  const ParityReport z2 = ai.parity_report(true);
  CHECK(z2.differential_must_vanish == "true");
  CHECK(z2.reason == "z2-coefficients");
}
