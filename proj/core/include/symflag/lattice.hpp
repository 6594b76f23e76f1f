#pragma once

// The unit lattice in the flat, the generic shift, and the chord / generator
// bases of the enlarged complexes.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symflag/rational.hpp"
#include "symflag/root_system.hpp"

namespace symflag {

/// A point of the unit lattice in integer coordinates with respect to the lattice basis.
struct LatticePoint {
  std::vector<std::int64_t> coords;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator-(const LatticePoint& a);
std::string to_string(const LatticePoint& q);
/// Parses "[1,-2]" or "1,-2".
LatticePoint parse_lattice_point(const std::string& text);

/// Graded lexicographic order: L1 norm of the coordinates first, then lexicographic.
bool graded_lex_less(const LatticePoint& a, const LatticePoint& b);

class Lattice {
 public:
  static constexpr std::size_t kDefaultPointCap = 1'000'000;

  /// Checks full rank, W-stability (exact membership of w(b) for every basis
  /// vector b and simple reflection), and 2 alpha(b) in Z for every root.
  /// Throws InvariantViolation or LatticeNotStable.
  Lattice(const WeylGroup& weyl, std::vector<Vector> basis);

  std::size_t rank() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  LatticePoint origin() const { return {std::vector<std::int64_t>(rank(), 0)}; }
  LatticePoint basis_point(std::size_t i, std::int64_t sign = 1) const;

  Vector to_vector(const LatticePoint& q) const;
  /// Exact membership: coordinates of v, or nullopt when v is off the lattice.
  std::optional<LatticePoint> coordinates(const Vector& v) const;
  /// <q, q> in the ambient metric.
  Rational norm2(const LatticePoint& q) const;

  /// Matrix action of W in lattice coordinates.
  LatticePoint act(WeylIndex w, const LatticePoint& q) const;

  /// All q with <q,q> <= radius^2 in graded lexicographic order. Throws
  /// BudgetExceeded when more than `cap` points qualify.
  std::vector<LatticePoint> points(const Rational& radius, std::size_t cap = kDefaultPointCap) const;

 private:
  std::vector<Vector> basis_;
  Matrix basis_matrix_;      // columns are basis vectors
  Matrix basis_inverse_;
  Matrix basis_gram_;        // B^T G B
  std::vector<std::vector<std::int64_t>> action_;  // per Weyl element, row-major r x r
};

/// weyl_action(w, q) with a membership re-check of the result.
LatticePoint weyl_action(const WeylGroup& weyl, const Lattice& lattice, WeylIndex w, const LatticePoint& q);

enum class ShiftMode { RegularOnly, SmallInChamber };
std::string to_string(ShiftMode mode);
ShiftMode parse_shift_mode(const std::string& text);

/// A validated generic shift a. Instances only come out of validate_generic.
class GenericShift {
 public:
  const Vector& a() const { return a_; }
  ShiftMode mode() const { return mode_; }
  const Rational& window_radius() const { return radius_; }

 private:
  friend GenericShift validate_generic(const WeylGroup&, const Lattice&, const Vector&, ShiftMode,
                                       const Rational&);
  GenericShift(Vector a, ShiftMode mode, Rational radius)
      : a_(std::move(a)), mode_(mode), radius_(std::move(radius)) {}

  Vector a_;
  ShiftMode mode_;
  Rational radius_;
};

/// Upper bound on |2 alpha(a)| accepted in small-in-chamber mode.
Rational small_shift_bound();

/// Exact finite check over roots x lattice_points(radius). Throws NotRegular,
/// FloorBoundary, NotInChamber or NotSmall (checked in that order).
GenericShift validate_generic(const WeylGroup& weyl, const Lattice& lattice, const Vector& a, ShiftMode mode,
                              const Rational& radius);

/// Sum of the positive coroots of the base chamber.
Vector rho_coroot(const RootSystem& roots);

/// First eps = 1/((2D+1) k), k = 1, 2, ..., for which eps * rho_coroot passes
/// small-in-chamber validation at `radius`. D is the positive multiplicity sum.
Rational canonical_epsilon(const WeylGroup& weyl, const Lattice& lattice, const Rational& radius);

struct Generator {
  WeylIndex w = 0;
  LatticePoint q;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

struct Chord {
  LatticePoint q;
};

std::string to_string(const WeylGroup& weyl, const Generator& g);

/// W x lattice_points(radius), ordered by Weyl index then by lattice point.
std::vector<Generator> generators(const WeylGroup& weyl, const Lattice& lattice, const Rational& radius);
std::vector<Chord> chords(const Lattice& lattice, const Rational& radius);

}  // namespace symflag
