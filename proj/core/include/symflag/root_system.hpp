#pragma once

// Restricted root systems with multiplicities and their Weyl groups, in exact
// rational arithmetic. Roots are stored as metric duals: a root alpha is a
// vector with alpha(v) = <alpha, v>_gram.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symflag/rational.hpp"

namespace symflag {

using RootIndex = std::size_t;
using WeylIndex = std::size_t;

class RootSystem {
 public:
  /// Validates every structural invariant and throws InvariantViolation on
  /// failure: symmetric positive-definite gram, -R = R, reflection closure with
  /// multiplicities preserved, only alpha and 2*alpha as proportional roots,
  /// and a regular base point.
  RootSystem(Matrix gram, std::vector<Vector> roots, std::vector<int> multiplicities,
             Vector base_point);

  std::size_t rank() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  std::size_t size() const { return roots_.size(); }
  const Vector& root(RootIndex i) const { return roots_[i]; }
  const std::vector<Vector>& roots() const { return roots_; }
  int multiplicity(RootIndex i) const { return mult_[i]; }
  const Vector& base_point() const { return base_point_; }

  /// <u, v> in the stored metric.
  Rational pairing(const Vector& u, const Vector& v) const;
  /// alpha_i(v).
  Rational evaluate(RootIndex i, const Vector& v) const;

  std::optional<RootIndex> find(const Vector& v) const;
  RootIndex negative(RootIndex i) const { return negative_[i]; }
  /// alpha/2 is not a root.
  bool is_indivisible(RootIndex i) const { return indivisible_[i]; }
  /// 2 alpha / <alpha, alpha>.
  Vector coroot(RootIndex i) const;

  /// v - 2<v,alpha>/<alpha,alpha> alpha. Throws UnknownRoot when alpha is not in R.
  Vector reflect(const Vector& alpha, const Vector& v) const;
  Vector reflect(RootIndex i, const Vector& v) const;
  Matrix reflection_matrix(RootIndex i) const;

  /// Root indices whose wall contains v.
  std::vector<RootIndex> walls_containing(const Vector& v) const;
  bool is_regular(const Vector& v) const { return walls_containing(v).empty(); }
  /// {alpha : alpha(x) > 0}. Throws NotRegular listing the walls through x.
  std::vector<RootIndex> positive_system(const Vector& x) const;

  /// Positive roots and simple roots of the base chamber.
  const std::vector<RootIndex>& positive_roots() const { return positive_; }
  const std::vector<RootIndex>& simple_roots() const { return simple_; }
  bool is_positive(RootIndex i) const { return positive_mask_[i]; }
  /// Strictly inside the base chamber.
  bool in_base_chamber(const Vector& v) const;

  /// Sum of m_alpha over the positive roots (the dimension of the flag Lagrangian).
  int positive_multiplicity_sum() const;

  /// A root system with the same roots and multiplicities but another base chamber.
  RootSystem with_base_point(Vector base_point) const;

 private:
  Matrix gram_;
  std::vector<Vector> roots_;
  std::vector<int> mult_;
  Vector base_point_;
  std::map<Vector, RootIndex> lookup_;
  std::vector<RootIndex> negative_;
  std::vector<bool> indivisible_;
  std::vector<RootIndex> positive_;
  std::vector<bool> positive_mask_;
  std::vector<RootIndex> simple_;
};

/// An element of W with its matrix (acting on coordinate vectors) and a reduced
/// word in the simple reflections (indices into RootSystem::simple_roots()).
struct WeylElement {
  Matrix matrix;
  std::vector<int> word;
};

/// "e" for the identity, otherwise "s1s2..." with 1-based simple reflection labels.
std::string word_to_string(const std::vector<int>& word);
/// Inverse of word_to_string; accepts "e", "s1s2", "1,2" and "" (identity).
std::vector<int> parse_word(std::string_view text);

/// The finite reflection group of a root system, enumerated by breadth-first
/// closure over the simple reflections of the base chamber. Elements are
/// addressed by WeylIndex; index 0 is the identity.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  /// Throws BudgetExceeded if |W| would exceed `cap`.
  static WeylGroup generate(RootSystem roots, std::size_t cap = kDefaultCap);

  const RootSystem& roots() const { return roots_; }
  std::size_t size() const { return elements_.size(); }
  const WeylElement& element(WeylIndex w) const { return elements_[w]; }
  static constexpr WeylIndex identity() { return 0; }
  WeylIndex longest() const { return longest_; }

  Vector act(WeylIndex w, const Vector& v) const { return elements_[w].matrix * v; }
  /// Index of w(alpha_i).
  RootIndex act_on_root(WeylIndex w, RootIndex i) const { return root_perm_[w][i]; }
  /// R^+_{wX} for X in the base chamber, i.e. w(R^+).
  const std::vector<RootIndex>& positive_roots_of(WeylIndex w) const { return positive_of_[w]; }

  WeylIndex compose(WeylIndex a, WeylIndex b) const;
  WeylIndex inverse(WeylIndex w) const { return inverse_[w]; }
  std::optional<WeylIndex> find(const Matrix& m) const;
  /// Evaluates a word (product of simple reflections, left to right).
  WeylIndex from_word(const std::vector<int>& word) const;

  /// The unique w with v in w(C), C the base chamber. Throws NotRegular.
  WeylIndex chamber_of(const Vector& v) const;
  /// Number of indivisible positive roots sent to negative roots.
  int length(WeylIndex w) const { return length_[w]; }

  std::string label(WeylIndex w) const { return word_to_string(elements_[w].word); }

 private:
  explicit WeylGroup(RootSystem roots) : roots_(std::move(roots)) {}
  WeylIndex lookup_image(const Vector& base_image) const;

  RootSystem roots_;
  std::vector<WeylElement> elements_;
  std::map<Vector, WeylIndex> by_image_;
  std::vector<std::vector<RootIndex>> root_perm_;
  std::vector<std::vector<RootIndex>> positive_of_;
  std::vector<WeylIndex> inverse_;
  std::vector<int> length_;
  WeylIndex longest_ = 0;
};

/// Standard data for an irreducible Cartan type in simple-root coordinates.
struct CartanData {
  std::string type;  // e.g. "A2", "BC2", "F4"
  Matrix gram;       // standard normalisation
  bool non_reduced = false;
};

/// Supports A_n, B_n, C_n, D_n (n >= 3), BC_n, G2, F4. Throws std::invalid_argument.
CartanData cartan_data(std::string_view type);

/// Closure of the simple roots (unit coordinate vectors) under reflections for
/// `gram`, plus 2*alpha for the shortest roots when `non_reduced`. Sorted.
std::vector<Vector> generate_roots(const Matrix& gram, bool non_reduced);

/// True when `gram` is a positive multiple of the standard gram of `type`.
bool gram_matches_type(const Matrix& gram, const CartanData& data);

/// Vector x with alpha_i(x) = 1 for every simple root alpha_i of the coordinate basis.
Vector dominant_point(const Matrix& gram);

/// Root system of a Cartan type with a uniform multiplicity, base chamber
/// containing dominant_point.
RootSystem cartan_root_system(std::string_view type, int multiplicity = 1);

}  // namespace symflag
