#include "symflag/index.hpp"

#include <algorithm>

#include "symflag/errors.hpp"

namespace symflag {

Vector weighted_rho(const RootSystem& roots) {
  Vector rho = zero_vector(roots.rank());
  for (RootIndex r : roots.positive_roots()) rho = rho + Rational(roots.multiplicity(r)) * roots.root(r);
  return rho;
}

Rational default_tau(const RootSystem& roots) {
  const Vector rho = weighted_rho(roots);
  Rational best = -1;
  for (RootIndex s : roots.simple_roots()) {
    const Rational v = roots.evaluate(s, rho);
    if (best < 0 || v < best) best = v;
  }
  if (best <= 0) throw NotDominant("rho is not strictly dominant");
  return Rational(1) / (2 * best);
}

MonotoneData monotone_data(const RootSystem& roots, const Rational& tau) {
  if (tau <= 0) throw std::invalid_argument("tau must be positive");
  MonotoneData md;
  md.tau = tau;
  md.rho = weighted_rho(roots);
  md.x0 = Rational(2 * tau) * md.rho;
  for (RootIndex s : roots.simple_roots()) {
    if (roots.evaluate(s, md.rho) <= 0)
      throw NotDominant("<rho, beta> <= 0 for simple beta = " + to_string(roots.root(s)));
  }
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < roots.rank(); ++i) {
    Vector e(roots.rank());
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  if (!monotone_identity_holds(roots, md, basis))
    throw InvariantViolation("monotonicity identity fails on the coordinate basis");
  return md;
}

bool monotone_identity_holds(const RootSystem& roots, const MonotoneData& md, const std::vector<Vector>& probes) {
  for (const Vector& v : probes) {
    Rational rhs = 0;
    for (RootIndex r : roots.positive_roots()) rhs += roots.multiplicity(r) * roots.evaluate(r, v);
    rhs *= 2 * md.tau;
    if (roots.pairing(v, md.x0) != rhs) return false;
  }
  return true;
}

Integer capping_maslov(const RootSystem& roots, const Lattice& lattice, const LatticePoint& q) {
  const Vector v = lattice.to_vector(q);
  Rational sum = 0;
  for (RootIndex r : roots.positive_roots()) sum += roots.multiplicity(r) * roots.evaluate(r, v);
  const Rational maslov = -2 * sum;
  if (!is_integer(maslov)) throw InvariantViolation("non-integral Maslov index at q = " + to_string(q));
  return maslov.get_num();
}

Rational capping_area(const RootSystem& roots, const Lattice& lattice, const LatticePoint& q, const MonotoneData& md) {
  return -roots.pairing(lattice.to_vector(q), md.x0);
}

std::string to_string(QuiltClass c) { return c == QuiltClass::Bad ? "bad" : "ugly"; }

// ---------------------------------------------------------------------------

IndexEngine::IndexEngine(const WeylGroup& weyl, const Lattice& lattice, const GenericShift& shift)
    : weyl_(weyl), lattice_(lattice), shift_(shift) {
  const RootSystem& rs = weyl_.roots();
  two_alpha_basis_.resize(rs.size());
  two_alpha_shift_.resize(rs.size());
  for (RootIndex r = 0; r < rs.size(); ++r) {
    for (const Vector& b : lattice_.basis()) {
      const Rational v = 2 * rs.evaluate(r, b);
      if (!is_integer(v)) throw InvariantViolation("2 alpha(b) not integral");
      two_alpha_basis_[r].push_back(v.get_num());
    }
    two_alpha_shift_[r] = 2 * rs.evaluate(r, shift_.a());
  }
}

Rational IndexEngine::two_alpha(RootIndex r, const LatticePoint& q) const {
  Integer s = 0;
  for (std::size_t i = 0; i < q.coords.size(); ++i) s += two_alpha_basis_[r][i] * static_cast<long>(q.coords[i]);
  return Rational(s) + two_alpha_shift_[r];
}

WeylIndex IndexEngine::chamber_of(const LatticePoint& q) const {
  return weyl_.chamber_of(lattice_.to_vector(q) + shift_.a());
}

Integer IndexEngine::degree(WeylIndex w, const LatticePoint& q) const {
  const RootSystem& rs = weyl_.roots();
  Integer sum = 0;
  for (RootIndex r : weyl_.positive_roots_of(w)) {
    const Rational x = two_alpha(r, q);
    if (is_integer(x))
      throw FloorBoundary("2 alpha(q + a) integral at alpha = " + to_string(rs.root(r)) + ", q = " + to_string(q));
    sum += rs.multiplicity(r) * floor_of(x);
  }
  return sum;
}

Integer IndexEngine::quilt_index(const QuiltDatum& d) const {
  const Rational r2 = shift_.window_radius() * shift_.window_radius();
  if (lattice_.norm2(d.q_in) > r2 || lattice_.norm2(d.q_out) > r2)
    throw InvariantViolation("quilt datum lies outside the validated window");
  return degree(chamber_of(d.q_in), d.q_in) - degree(d.w_out, d.q_out);
}

QuiltClass IndexEngine::classify(const LatticePoint& q, WeylIndex w) const {
  return chamber_of(q) == w ? QuiltClass::Bad : QuiltClass::Ugly;
}

Integer IndexEngine::ugly_index(const LatticePoint& q, WeylIndex w) const {
  const WeylIndex w_in = chamber_of(q);
  if (w_in == w) throw NotUgly("(q, w) = (" + to_string(q) + ", " + weyl_.label(w) + ") is bad");
  const RootSystem& rs = weyl_.roots();
  const auto& out_positive = weyl_.positive_roots_of(w);
  Integer sum = 0;
  for (RootIndex r : weyl_.positive_roots_of(w_in)) {
    // alpha(w X0) < 0  <=>  alpha is not in R^+_{w X0}.
    if (std::binary_search(out_positive.begin(), out_positive.end(), r)) continue;
    const Rational x = two_alpha(r, q);
    sum += rs.multiplicity(r) * (floor_of(x) - floor_of(-x));
  }
  if (sum <= 0) throw InvariantViolation("ugly index is not positive at q = " + to_string(q));
  return sum;
}

Rational IndexEngine::ell_prime(WeylIndex w) const {
  const RootSystem& rs = weyl_.roots();
  Rational sum = 0;
  for (RootIndex r : weyl_.positive_roots_of(w)) sum += rs.multiplicity(r) * frac(two_alpha_shift_[r]);
  return sum;
}

EndTerms IndexEngine::end_terms(const QuiltEnd& end, const MonotoneData& md) const {
  const RootSystem& rs = weyl_.roots();
  EndTerms t;
  const Vector p = lattice_.to_vector(end.q) + shift_.a();
  t.pairing = rs.pairing(p, weyl_.act(end.w, md.x0));
  t.linear_sum = 0;
  t.floor_sum = 0;
  t.frac_sum = 0;
  for (RootIndex r : weyl_.positive_roots_of(end.w)) {
    const Rational x = two_alpha(r, end.q);
    const int m = rs.multiplicity(r);
    t.linear_sum += m * x;
    t.floor_sum += m * floor_of(x);
    t.frac_sum += m * frac(x);
  }
  t.ell_prime = ell_prime(end.w);
  return t;
}

bool IndexEngine::end2_implication_check(const QuiltEnd& in, const QuiltEnd& out, const MonotoneData& md) const {
  return end2_implication_check(end_terms(in, md), end_terms(out, md), md);
}

bool IndexEngine::end2_implication_check(const EndTerms& in, const EndTerms& out, const MonotoneData& md) const {
  // Each step of the chain must hold on both ends regardless of the antecedent.
  for (const EndTerms* t : {&in, &out}) {
    if (t->pairing != md.tau * t->linear_sum) return false;  // monotonicity, W-translated
    if (t->frac_sum != t->linear_sum - Rational(t->floor_sum)) return false;
    if (t->frac_sum != t->ell_prime) return false;  // 2 alpha(q) is an integer
  }
  const bool zero_index = in.floor_sum == out.floor_sum;
  const bool action_drop = in.pairing > out.pairing;
  if (!(zero_index && action_drop)) return true;
  return in.linear_sum > out.linear_sum && in.ell_prime > out.ell_prime;
}

int IndexEngine::morse_index(WeylIndex w) const {
  if (shift_.mode() != ShiftMode::SmallInChamber)
    throw ModeMismatch("morse_index needs a small_in_chamber shift");
  const RootSystem& rs = weyl_.roots();
  int by_sign = 0;
  Integer by_floor = 0;
  for (RootIndex r : weyl_.positive_roots_of(w)) {
    if (two_alpha_shift_[r] < 0) by_sign += rs.multiplicity(r);
    by_floor -= rs.multiplicity(r) * floor_of(two_alpha_shift_[r]);
  }
  if (by_floor != by_sign) throw InvariantViolation("Morse index formulas disagree at w = " + weyl_.label(w));
  return by_sign;
}

std::vector<std::int64_t> IndexEngine::poincare_polynomial() const {
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(weyl_.roots().positive_multiplicity_sum()) + 1, 0);
  for (WeylIndex w = 0; w < weyl_.size(); ++w) ++coeffs.at(static_cast<std::size_t>(morse_index(w)));
  return coeffs;
}

ParityReport IndexEngine::parity_report(bool z2_coefficients) const {
  const RootSystem& rs = weyl_.roots();
  ParityReport rep;
  rep.z2_coefficients = z2_coefficients;
  rep.all_multiplicities_even = true;
  for (RootIndex r = 0; r < rs.size(); ++r)
    if (rs.multiplicity(r) % 2 != 0) rep.all_multiplicities_even = false;

  rep.reference_degree = degree(WeylGroup::identity(), lattice_.origin());
  for (const LatticePoint& q : lattice_.points(shift_.window_radius())) {
    for (WeylIndex w = 0; w < weyl_.size(); ++w) {
      const Integer rel = degree(w, q) - rep.reference_degree;
      if (mpz_even_p(rel.get_mpz_t()))
        ++rep.even_count;
      else
        ++rep.odd_count;
    }
  }
  if (rep.all_multiplicities_even) {
    if (rep.odd_count != 0) throw InvariantViolation("odd relative degree with even multiplicities");
    rep.differential_must_vanish = "true";
    rep.reason = "even-multiplicities";
  } else if (z2_coefficients) {
    rep.differential_must_vanish = "true";
    rep.reason = "z2-coefficients";
  } else {
    rep.differential_must_vanish = "undetermined";
    rep.reason = "none";
  }
  return rep;
}

}  // namespace symflag
