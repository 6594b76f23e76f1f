#pragma once

// Closed-form index, filtration, capping and Morse quantities.

#include <cstdint>
#include <string>
#include <vector>

#include "symflag/lattice.hpp"
#include "symflag/rational.hpp"
#include "symflag/root_system.hpp"

namespace symflag {

/// tau, rho = sum of m_alpha alpha over R^+, and X0 = 2 tau rho.
struct MonotoneData {
  Rational tau;
  Vector rho;
  Vector x0;
};

/// Sum of m_alpha alpha over the positive roots of the base chamber.
Vector weighted_rho(const RootSystem& roots);

/// The tau making min over simple alpha of alpha(X0) equal to 1.
Rational default_tau(const RootSystem& roots);

/// Builds X0 and checks <rho, beta> > 0 for simple beta (NotDominant otherwise)
/// and <v, X0> = 2 tau sum m_alpha alpha(v) on the coordinate basis.
MonotoneData monotone_data(const RootSystem& roots, const Rational& tau);

/// Checks the defining identity <v, X0> = 2 tau sum_{R^+} m_alpha alpha(v) on each probe.
bool monotone_identity_holds(const RootSystem& roots, const MonotoneData& md, const std::vector<Vector>& probes);

/// Maslov index of the moment capping disk of class q: -2 sum_{R^+} m_alpha alpha(q).
Integer capping_maslov(const RootSystem& roots, const Lattice& lattice, const LatticePoint& q);
/// Symplectic area of the same disk: -<q, X0>.
Rational capping_area(const RootSystem& roots, const Lattice& lattice, const LatticePoint& q, const MonotoneData& md);

struct QuiltDatum {
  LatticePoint q_in;
  WeylIndex w_out = 0;
  LatticePoint q_out;
};

enum class QuiltClass { Bad, Ugly };
std::string to_string(QuiltClass c);

/// A chord or intersection-point end (q, w) with X = w X0.
struct QuiltEnd {
  LatticePoint q;
  WeylIndex w = 0;
};

/// The sums entering the monotonicity argument for one end.
struct EndTerms {
  Rational pairing;     // <q + a, w X0>
  Rational linear_sum;  // sum_{R^+_{wX0}} m 2 alpha(q + a)
  Integer floor_sum;    // sum_{R^+_{wX0}} m floor(2 alpha(q + a))
  Rational frac_sum;    // sum_{R^+_{wX0}} m frac(2 alpha(q + a))
  Rational ell_prime;   // sum_{R^+_{wX0}} m frac(2 alpha(a))
};

/// Histogram of relative degrees deg(w, q) - deg(e, 0) by parity.
struct ParityReport {
  bool all_multiplicities_even = false;
  bool z2_coefficients = false;
  Integer reference_degree;
  std::size_t even_count = 0;
  std::size_t odd_count = 0;
  /// "true" when the differentials are forced to vanish, "undetermined" otherwise.
  std::string differential_must_vanish;
  /// Which hypothesis forced vanishing: "even-multiplicities", "z2-coefficients" or "none".
  std::string reason;
};

/// Index and filtration formulas for a fixed (root system, lattice, shift).
/// Holds references: the Weyl group and lattice must outlive the engine.
class IndexEngine {
 public:
  IndexEngine(const WeylGroup& weyl, const Lattice& lattice, const GenericShift& shift);

  const WeylGroup& weyl() const { return weyl_; }
  const Lattice& lattice() const { return lattice_; }
  const GenericShift& shift() const { return shift_; }

  /// 2 alpha(q + a), exact.
  Rational two_alpha(RootIndex r, const LatticePoint& q) const;
  /// The unique w with q + a in w(C).
  WeylIndex chamber_of(const LatticePoint& q) const;

  /// deg(w, q) = sum_{R^+_{wX0}} m_alpha floor(2 alpha(q + a)).
  Integer degree(WeylIndex w, const LatticePoint& q) const;

  /// Fredholm index of the quilt with input x_{q_in} and output (w_out, q_out).
  Integer quilt_index(const QuiltDatum& d) const;
  /// Bad iff chamber_of(q + a) == w.
  QuiltClass classify(const LatticePoint& q, WeylIndex w) const;
  /// Sum over {alpha in R^+_{X_in} : alpha(w X0) < 0} of m (floor(2alpha(q+a)) - floor(-2alpha(q+a))).
  /// Throws NotUgly for bad data and InvariantViolation if the result is not positive.
  Integer ugly_index(const LatticePoint& q, WeylIndex w) const;

  Rational ell_prime(WeylIndex w) const;
  EndTerms end_terms(const QuiltEnd& end, const MonotoneData& md) const;
  /// Verifies the arithmetic of the monotonicity argument: zero index and a strict
  /// action drop force a strict drop in ell'.
  bool end2_implication_check(const QuiltEnd& in, const QuiltEnd& out, const MonotoneData& md) const;
  bool end2_implication_check(const EndTerms& in, const EndTerms& out, const MonotoneData& md) const;

  /// Sum of m_alpha over {alpha in R^+_{wX0} : alpha(a) < 0}, cross-checked
  /// against -sum m floor(2 alpha(a)). Throws ModeMismatch outside small_in_chamber.
  int morse_index(WeylIndex w) const;
  /// c_k = #{w : morse_index(w) = k}, k = 0..D.
  std::vector<std::int64_t> poincare_polynomial() const;

  /// Relative degree parities over the shift's window.
  ParityReport parity_report(bool z2_coefficients = false) const;

 private:
  const WeylGroup& weyl_;
  const Lattice& lattice_;
  GenericShift shift_;
  std::vector<std::vector<Integer>> two_alpha_basis_;  // [root][basis]
  std::vector<Rational> two_alpha_shift_;              // [root]
};

}  // namespace symflag
