#include "symflag/root_system.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "symflag/errors.hpp"

namespace symflag {

RootSystem::RootSystem(Matrix gram, std::vector<Vector> roots, std::vector<int> multiplicities,
                       Vector base_point)
    : gram_(std::move(gram)), base_point_(std::move(base_point)) {
  const std::size_t n = gram_.rows();
  if (n == 0 || gram_.cols() != n) throw InvariantViolation("gram must be a non-empty square matrix");
  if (!gram_.is_symmetric()) throw InvariantViolation("gram is not symmetric");
  if (!is_positive_definite(gram_)) throw InvariantViolation("gram is not positive definite");
  if (roots.size() != multiplicities.size())
    throw InvariantViolation("roots and multiplicities differ in length");
  if (base_point_.size() != n) throw InvariantViolation("base point has wrong dimension");

  // Sort (root, multiplicity) pairs for a deterministic indexing.
  std::vector<std::size_t> order(roots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return roots[a] < roots[b]; });
  for (std::size_t i : order) {
    if (roots[i].size() != n) throw InvariantViolation("root has wrong dimension");
    if (is_zero(roots[i])) throw InvariantViolation("zero vector listed as a root");
    if (multiplicities[i] <= 0) throw InvariantViolation("multiplicities must be positive");
    if (!lookup_.emplace(roots[i], roots_.size()).second)
      throw InvariantViolation("duplicate root " + to_string(roots[i]));
    roots_.push_back(roots[i]);
    mult_.push_back(multiplicities[i]);
  }

  negative_.resize(roots_.size());
  indivisible_.resize(roots_.size());
  for (RootIndex i = 0; i < roots_.size(); ++i) {
    auto neg = find(-roots_[i]);
    if (!neg) throw InvariantViolation("-R != R: missing negative of " + to_string(roots_[i]));
    if (mult_[*neg] != mult_[i]) throw InvariantViolation("m(-alpha) != m(alpha) for " + to_string(roots_[i]));
    negative_[i] = *neg;
    indivisible_[i] = !find(Rational(1, 2) * roots_[i]).has_value();
  }

  // Proportional roots: only alpha, 2 alpha (and negatives).
  for (RootIndex i = 0; i < roots_.size(); ++i) {
    for (RootIndex j = 0; j < roots_.size(); ++j) {
      if (i == j) continue;
      const Rational ii = pairing(roots_[i], roots_[i]);
      const Rational ij = pairing(roots_[i], roots_[j]);
      const Rational jj = pairing(roots_[j], roots_[j]);
      if (ij * ij != ii * jj) continue;  // not proportional
      const Rational ratio = ij / ii;
      if (ratio != -1 && ratio != 2 && ratio != -2 && ratio != Rational(1, 2) && ratio != Rational(-1, 2))
        throw InvariantViolation("forbidden proportional roots " + to_string(roots_[i]) + " and " +
                                 to_string(roots_[j]));
    }
  }

  // Weyl-equivariance of the set and of the multiplicities.
  for (RootIndex i = 0; i < roots_.size(); ++i) {
    for (RootIndex j = 0; j < roots_.size(); ++j) {
      auto image = find(reflect(i, roots_[j]));
      if (!image) throw InvariantViolation("R not closed under reflection s_" + to_string(roots_[i]));
      if (mult_[*image] != mult_[j])
        throw InvariantViolation("multiplicity not Weyl-invariant at " + to_string(roots_[j]));
    }
  }

  if (!is_regular(base_point_)) throw InvariantViolation("base point is not regular");

  positive_mask_.assign(roots_.size(), false);
  for (RootIndex i = 0; i < roots_.size(); ++i) {
    if (evaluate(i, base_point_) > 0) {
      positive_.push_back(i);
      positive_mask_[i] = true;
    }
  }

  // Simple roots: indivisible positive roots that are not a sum of two positive roots.
  for (RootIndex i : positive_) {
    if (!indivisible_[i]) continue;
    bool decomposable = false;
    for (RootIndex j : positive_) {
      auto rest = find(roots_[i] - roots_[j]);
      if (rest && positive_mask_[*rest]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple_.push_back(i);
  }
  std::sort(simple_.begin(), simple_.end(), [&](RootIndex a, RootIndex b) { return roots_[b] < roots_[a]; });
}

Rational RootSystem::pairing(const Vector& u, const Vector& v) const { return dot(u, gram_ * v); }

Rational RootSystem::evaluate(RootIndex i, const Vector& v) const { return pairing(roots_[i], v); }

std::optional<RootIndex> RootSystem::find(const Vector& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Vector RootSystem::coroot(RootIndex i) const {
  return (Rational(2) / pairing(roots_[i], roots_[i])) * roots_[i];
}

Vector RootSystem::reflect(const Vector& alpha, const Vector& v) const {
  auto i = find(alpha);
  if (!i) throw UnknownRoot(to_string(alpha) + " is not a root");
  return reflect(*i, v);
}

Vector RootSystem::reflect(RootIndex i, const Vector& v) const {
  const Vector& a = roots_[i];
  const Rational c = 2 * pairing(v, a) / pairing(a, a);
  return v - c * a;
}

Matrix RootSystem::reflection_matrix(RootIndex i) const {
  const std::size_t n = rank();
  Matrix m = Matrix::identity(n);
  const Vector& a = roots_[i];
  const Vector ga = gram_ * a;
  const Rational scale = Rational(2) / dot(a, ga);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) -= scale * a[r] * ga[c];
  return m;
}

std::vector<RootIndex> RootSystem::walls_containing(const Vector& v) const {
  std::vector<RootIndex> walls;
  for (RootIndex i = 0; i < roots_.size(); ++i)
    if (evaluate(i, v) == 0) walls.push_back(i);
  return walls;
}

std::vector<RootIndex> RootSystem::positive_system(const Vector& x) const {
  std::vector<RootIndex> walls = walls_containing(x);
  if (!walls.empty()) {
    std::string msg = to_string(x) + " lies on the walls of";
    for (RootIndex w : walls) msg += " " + to_string(roots_[w]);
    throw NotRegular(msg, std::move(walls));
  }
  std::vector<RootIndex> out;
  for (RootIndex i = 0; i < roots_.size(); ++i)
    if (evaluate(i, x) > 0) out.push_back(i);
  return out;
}

bool RootSystem::in_base_chamber(const Vector& v) const {
  return std::all_of(simple_.begin(), simple_.end(), [&](RootIndex i) { return evaluate(i, v) > 0; });
}

int RootSystem::positive_multiplicity_sum() const {
  int d = 0;
  for (RootIndex i : positive_) d += mult_[i];
  return d;
}

RootSystem RootSystem::with_base_point(Vector base_point) const {
  return RootSystem(gram_, roots_, mult_, std::move(base_point));
}

// ---------------------------------------------------------------------------

std::string word_to_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (int s : word) out += "s" + std::to_string(s + 1);
  return out;
}

std::vector<int> parse_word(std::string_view text) {
  std::vector<int> word;
  if (text.empty() || text == "e") return word;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == 's' || text[i] == ',' || text[i] == ' ' || text[i] == '.') {
      ++i;
      continue;
    }
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("malformed Weyl word: " + std::string(text));
    int value = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') value = value * 10 + (text[i++] - '0');
    if (value == 0) throw std::invalid_argument("Weyl word labels are 1-based: " + std::string(text));
    word.push_back(value - 1);
  }
  return word;
}

WeylGroup WeylGroup::generate(RootSystem roots, std::size_t cap) {
  WeylGroup g(std::move(roots));
  const RootSystem& rs = g.roots_;
  const auto& simple = rs.simple_roots();
  std::vector<Matrix> gens;
  gens.reserve(simple.size());
  for (RootIndex s : simple) gens.push_back(rs.reflection_matrix(s));

  const Vector& x = rs.base_point();
  g.elements_.push_back({Matrix::identity(rs.rank()), {}});
  g.by_image_.emplace(x, 0);
  std::deque<WeylIndex> queue{0};
  while (!queue.empty()) {
    const WeylIndex u = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Matrix m = gens[i] * g.elements_[u].matrix;
      Vector image = m * x;
      if (g.by_image_.count(image)) continue;
      if (g.elements_.size() >= cap)
        throw BudgetExceeded("Weyl group exceeds the cap of " + std::to_string(cap) + " elements");
      std::vector<int> word{static_cast<int>(i)};
      word.insert(word.end(), g.elements_[u].word.begin(), g.elements_[u].word.end());
      g.by_image_.emplace(std::move(image), g.elements_.size());
      g.elements_.push_back({std::move(m), std::move(word)});
      queue.push_back(g.elements_.size() - 1);
    }
  }

  const std::size_t n = g.elements_.size();
  g.root_perm_.assign(n, std::vector<RootIndex>(rs.size()));
  g.positive_of_.assign(n, {});
  g.length_.assign(n, 0);
  g.inverse_.assign(n, 0);
  for (WeylIndex w = 0; w < n; ++w) {
    for (RootIndex r = 0; r < rs.size(); ++r) {
      auto image = rs.find(g.elements_[w].matrix * rs.root(r));
      if (!image) throw InvariantViolation("Weyl element does not permute the roots");
      g.root_perm_[w][r] = *image;
    }
    for (RootIndex r : rs.positive_roots()) {
      g.positive_of_[w].push_back(g.root_perm_[w][r]);
      if (rs.is_indivisible(r) && !rs.is_positive(g.root_perm_[w][r])) ++g.length_[w];
    }
    std::sort(g.positive_of_[w].begin(), g.positive_of_[w].end());
    std::vector<int> rev(g.elements_[w].word.rbegin(), g.elements_[w].word.rend());
    g.inverse_[w] = g.from_word(rev);
  }
  g.longest_ = static_cast<WeylIndex>(
      std::max_element(g.length_.begin(), g.length_.end()) - g.length_.begin());
  return g;
}

WeylIndex WeylGroup::lookup_image(const Vector& base_image) const {
  auto it = by_image_.find(base_image);
  if (it == by_image_.end()) throw InvariantViolation("element not found in the Weyl group");
  return it->second;
}

WeylIndex WeylGroup::compose(WeylIndex a, WeylIndex b) const {
  return lookup_image(elements_[a].matrix * (elements_[b].matrix * roots_.base_point()));
}

std::optional<WeylIndex> WeylGroup::find(const Matrix& m) const {
  if (m.rows() != roots_.rank() || m.cols() != roots_.rank()) return std::nullopt;
  auto it = by_image_.find(m * roots_.base_point());
  if (it == by_image_.end() || !(elements_[it->second].matrix == m)) return std::nullopt;
  return it->second;
}

WeylIndex WeylGroup::from_word(const std::vector<int>& word) const {
  const auto& simple = roots_.simple_roots();
  Vector v = roots_.base_point();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || static_cast<std::size_t>(*it) >= simple.size())
      throw std::invalid_argument("simple reflection label out of range");
    v = roots_.reflect(simple[static_cast<std::size_t>(*it)], v);
  }
  return lookup_image(v);
}

WeylIndex WeylGroup::chamber_of(const Vector& v) const {
  roots_.positive_system(v);  // throws NotRegular
  const auto& simple = roots_.simple_roots();
  Vector cur = v;
  std::vector<int> word;
  for (;;) {
    bool moved = false;
    for (std::size_t i = 0; i < simple.size(); ++i) {
      if (roots_.evaluate(simple[i], cur) < 0) {
        cur = roots_.reflect(simple[i], cur);
        word.push_back(static_cast<int>(i));
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  // cur = s_k ... s_1 v lies in C, so v = s_1 ... s_k cur.
  return from_word(word);
}

// ---------------------------------------------------------------------------

namespace {

Matrix gram_from_entries(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& entries) {
  Matrix g(n, n);
  for (const auto& [i, j, v] : entries) {
    g(i, j) = v;
    g(j, i) = v;
  }
  return g;
}

}  // namespace

CartanData cartan_data(std::string_view type) {
  std::string t(type);
  std::size_t digits = t.find_first_of("0123456789");
  if (digits == std::string::npos || digits == 0) throw std::invalid_argument("bad Cartan type: " + t);
  const std::string family = t.substr(0, digits);
  const int n = std::stoi(t.substr(digits));
  if (n < 1) throw std::invalid_argument("bad Cartan rank: " + t);
  const std::size_t r = static_cast<std::size_t>(n);

  std::vector<std::tuple<std::size_t, std::size_t, Rational>> e;
  auto chain = [&](Rational diag) {
    for (std::size_t i = 0; i < r; ++i) e.emplace_back(i, i, diag);
    for (std::size_t i = 0; i + 1 < r; ++i) e.emplace_back(i, i + 1, Rational(-1));
  };

  CartanData d;
  d.type = t;
  if (family == "A") {
    chain(2);
  } else if (family == "B" || family == "BC") {
    if (family == "B" && n < 2) throw std::invalid_argument("B_n needs n >= 2");
    chain(2);
    e.emplace_back(r - 1, r - 1, Rational(1));
    d.non_reduced = family == "BC";
  } else if (family == "C") {
    if (n < 2) throw std::invalid_argument("C_n needs n >= 2");
    chain(2);
    e.emplace_back(r - 1, r - 1, Rational(4));
    e.emplace_back(r - 2, r - 1, Rational(-2));
  } else if (family == "D") {
    if (n < 3) throw std::invalid_argument("D_n needs n >= 3");
    chain(2);
    e.emplace_back(r - 2, r - 1, Rational(0));
    e.emplace_back(r - 3, r - 1, Rational(-1));
  } else if (family == "G" && n == 2) {
    e = {{0, 0, 2}, {1, 1, 6}, {0, 1, -3}};
  } else if (family == "F" && n == 4) {
    e = {{0, 0, 2}, {1, 1, 2}, {2, 2, 1}, {3, 3, 1}, {0, 1, -1}, {1, 2, -1}, {2, 3, Rational(-1, 2)}};
  } else {
    throw std::invalid_argument("unsupported Cartan type: " + t);
  }
  d.gram = gram_from_entries(r, e);
  return d;
}

std::vector<Vector> generate_roots(const Matrix& gram, bool non_reduced) {
  const std::size_t n = gram.rows();
  auto pair = [&](const Vector& u, const Vector& v) { return dot(u, gram * v); };
  std::vector<Vector> simple;
  for (std::size_t i = 0; i < n; ++i) {
    Vector v(n);
    v[i] = 1;
    simple.push_back(std::move(v));
  }
  std::map<Vector, bool> seen;
  std::deque<Vector> queue;
  for (const Vector& s : simple) {
    seen.emplace(s, true);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vector v = queue.front();
    queue.pop_front();
    for (const Vector& s : simple) {
      Vector img = v - (2 * pair(v, s) / pair(s, s)) * s;
      if (seen.emplace(img, true).second) queue.push_back(std::move(img));
      if (seen.size() > 100000) throw BudgetExceeded("root closure did not terminate");
    }
  }
  std::vector<Vector> roots;
  for (auto& [v, _] : seen) roots.push_back(v);
  if (non_reduced) {
    Rational shortest = pair(roots.front(), roots.front());
    for (const Vector& v : roots) shortest = std::min(shortest, pair(v, v));
    std::vector<Vector> doubled;
    for (const Vector& v : roots)
      if (pair(v, v) == shortest) doubled.push_back(Rational(2) * v);
    roots.insert(roots.end(), doubled.begin(), doubled.end());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool gram_matches_type(const Matrix& gram, const CartanData& data) {
  if (gram.rows() != data.gram.rows() || gram.cols() != data.gram.cols()) return false;
  if (data.gram(0, 0) == 0 || gram(0, 0) <= 0) return false;
  const Rational scale = gram(0, 0) / data.gram(0, 0);
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j)
      if (gram(i, j) != scale * data.gram(i, j)) return false;
  return true;
}

Vector dominant_point(const Matrix& gram) {
  Vector ones(gram.rows(), Rational(1));
  return solve(gram, ones);
}

RootSystem cartan_root_system(std::string_view type, int multiplicity) {
  const CartanData d = cartan_data(type);
  std::vector<Vector> roots = generate_roots(d.gram, d.non_reduced);
  std::vector<int> mult(roots.size(), multiplicity);
  return RootSystem(d.gram, std::move(roots), std::move(mult), dominant_point(d.gram));
}

}  // namespace symflag
