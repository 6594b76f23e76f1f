#pragma once

// The enlarged complex as a free module on generators y_{w,q}, the unit-sector
// product, leading terms of the comparison map and the localization certificates.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "symflag/index.hpp"
#include "symflag/lattice.hpp"

namespace symflag {

enum class CoefficientRing { Z2, Z };
std::string to_string(CoefficientRing ring);
CoefficientRing parse_coefficient_ring(const std::string& text);

/// Finitely supported combination of generators. Over Z the signs of products
/// are not determined, so any element produced by a product has sign_trusted = false.
class RingElement {
 public:
  explicit RingElement(CoefficientRing ring = CoefficientRing::Z2) : ring_(ring) {}
  static RingElement generator(const Generator& g, CoefficientRing ring = CoefficientRing::Z2);

  CoefficientRing ring() const { return ring_; }
  bool sign_trusted() const { return sign_trusted_; }
  const std::map<Generator, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * g, reducing mod 2 over Z2 and dropping zero coefficients.
  void add(const Generator& g, const Integer& c);
  void mark_sign_untrusted() { sign_trusted_ = false; }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  CoefficientRing ring_;
  bool sign_trusted_ = true;
  std::map<Generator, Integer> terms_;
};

struct LeadingTerm {
  LatticePoint q;
  WeylIndex w_q = 0;
  Rational filtration;
};

struct FactorizationRow {
  Generator target;
  LatticePoint q1;  // w^{-1}(q)
  bool ok = false;
};

struct TriangularityRow {
  Generator target;
  LatticePoint witness;  // q' with q' + a in w(C)
  LatticePoint s;        // w^{-1}(q - q')
  Rational filtration;   // ell'(w)
  bool verified = false;
};

struct TriangularityCertificate {
  std::vector<TriangularityRow> rows;   // sorted by (ell', w, q)
  std::vector<Generator> missing;       // no witness inside the window
  bool leading_injective = false;
  bool leading_matches_classify = false;

  bool complete() const { return missing.empty(); }
  bool passed() const;
  /// Throws WindowTooSmall naming the generators without a witness.
  void require_complete(const WeylGroup& weyl) const;
};

struct FiniteGenerationWitness {
  std::vector<Generator> generators;  // y_{e, +-b_i} and one y_{w, q_w} per w
  std::size_t targets = 0;
  std::size_t reached = 0;
  std::size_t star_steps = 0;
  bool all_reachable() const { return reached == targets; }
};

struct MultiplicativeSet {
  std::vector<LatticePoint> generators;  // {q : q + a in C}, graded lex order
  bool closed_in_window = false;
};

class RingEngine {
 public:
  explicit RingEngine(const IndexEngine& index, CoefficientRing ring = CoefficientRing::Z2)
      : index_(index), ring_(ring) {}

  const IndexEngine& index() const { return index_; }
  CoefficientRing ring() const { return ring_; }

  /// y_{e,q1} * y_{w,q} = y_{w, w(q1) + q}.
  Generator star_unit_sector(const LatticePoint& q1, const Generator& g) const;
  /// Bilinear product restricted to pairs with at least one factor in the
  /// e-sector. Throws NotInImplementedSector otherwise.
  RingElement multiply(const RingElement& a, const RingElement& b) const;

  /// Checks y_{w,q} = star_unit_sector(w^{-1}(q), y_{w,0}) over the window.
  std::vector<FactorizationRow> r_module_basis_check(const Rational& radius) const;

  LeadingTerm phi_leading(const LatticePoint& q) const;
  MultiplicativeSet multiplicative_set(const Rational& radius) const;

  /// One row per (w, q) in the window; rows without a witness go to `missing`.
  TriangularityCertificate triangularity_certificate(const Rational& radius, unsigned jobs = 1) const;

  /// Throws WindowTooSmall when some w has no chamber witness in the window.
  /// Reachability is replayed one star step at a time from the witness set.
  FiniteGenerationWitness finitely_generated_witness(const Rational& radius) const;

  /// Generators of the window reachable from `seeds` by star steps with the
  /// e-sector seeds, never leaving the window.
  std::vector<Generator> reachable_closure(const std::vector<Generator>& seeds, const Rational& radius) const;

 private:
  /// Smallest q' in graded lex order with chamber_of(q') = w, per w.
  std::vector<std::optional<LatticePoint>> chamber_witnesses(const std::vector<LatticePoint>& window) const;

  const IndexEngine& index_;
  CoefficientRing ring_;
};

}  // namespace symflag
