#include "symflag/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "symflag/errors.hpp"

namespace symflag {

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint out{a.coords};
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint out{a.coords};
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
  return out;
}

LatticePoint operator-(const LatticePoint& a) {
  LatticePoint out{a.coords};
  for (auto& c : out.coords) c = -c;
  return out;
}

std::string to_string(const LatticePoint& q) { return to_string(q.coords); }

LatticePoint parse_lattice_point(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '[' && c != ']' && c != ' ' && c != '(' && c != ')') s += c;
  LatticePoint q;
  if (s.empty()) return q;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const long long v = std::stoll(item, &used);
    if (used != item.size()) throw std::invalid_argument("malformed lattice point: " + text);
    q.coords.push_back(v);
  }
  return q;
}

bool graded_lex_less(const LatticePoint& a, const LatticePoint& b) {
  auto l1 = [](const LatticePoint& p) {
    std::int64_t s = 0;
    for (auto c : p.coords) s += std::llabs(c);
    return s;
  };
  const auto la = l1(a), lb = l1(b);
  if (la != lb) return la < lb;
  return a.coords < b.coords;
}

Lattice::Lattice(const WeylGroup& weyl, std::vector<Vector> basis) : basis_(std::move(basis)) {
  const RootSystem& rs = weyl.roots();
  const std::size_t n = rs.rank();
  if (basis_.size() != n) throw InvariantViolation("lattice basis must have rank-many vectors");
  basis_matrix_ = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (basis_[j].size() != n) throw InvariantViolation("lattice basis vector has wrong dimension");
    for (std::size_t i = 0; i < n; ++i) basis_matrix_(i, j) = basis_[j][i];
  }
  if (determinant(basis_matrix_) == 0) throw InvariantViolation("lattice basis is not of full rank");
  basis_inverse_ = inverse(basis_matrix_);
  basis_gram_ = basis_matrix_.transpose() * rs.gram() * basis_matrix_;

  for (const Vector& b : basis_) {
    for (RootIndex r = 0; r < rs.size(); ++r) {
      if (!is_integer(2 * rs.evaluate(r, b)))
        throw InvariantViolation("2 alpha(b) is not an integer for alpha = " + to_string(rs.root(r)) +
                                 ", b = " + to_string(b));
    }
    for (RootIndex s : rs.simple_roots()) {
      if (!coordinates(rs.reflect(s, b)))
        throw LatticeNotStable("reflection in " + to_string(rs.root(s)) + " moves " + to_string(b) +
                               " off the lattice");
    }
  }

  action_.resize(weyl.size());
  for (WeylIndex w = 0; w < weyl.size(); ++w) {
    const Matrix m = basis_inverse_ * weyl.element(w).matrix * basis_matrix_;
    auto& out = action_[w];
    out.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_integer(m(i, j)) || !m(i, j).get_num().fits_slong_p())
          throw LatticeNotStable("Weyl element " + weyl.label(w) + " is not integral on the lattice");
        out[i * n + j] = m(i, j).get_num().get_si();
      }
  }
}

LatticePoint Lattice::basis_point(std::size_t i, std::int64_t sign) const {
  LatticePoint q = origin();
  q.coords[i] = sign;
  return q;
}

Vector Lattice::to_vector(const LatticePoint& q) const {
  Vector c(q.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<long>(q.coords[i]);
  return basis_matrix_ * c;
}

std::optional<LatticePoint> Lattice::coordinates(const Vector& v) const {
  const Vector c = basis_inverse_ * v;
  LatticePoint q;
  for (const Rational& x : c) {
    if (!is_integer(x) || !x.get_num().fits_slong_p()) return std::nullopt;
    q.coords.push_back(x.get_num().get_si());
  }
  return q;
}

Rational Lattice::norm2(const LatticePoint& q) const {
  Vector c(q.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<long>(q.coords[i]);
  return dot(c, basis_gram_ * c);
}

LatticePoint Lattice::act(WeylIndex w, const LatticePoint& q) const {
  const std::size_t n = rank();
  const auto& m = action_.at(w);
  LatticePoint out{std::vector<std::int64_t>(n, 0)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.coords[i] += m[i * n + j] * q.coords[j];
  return out;
}

std::vector<LatticePoint> Lattice::points(const Rational& radius, std::size_t cap) const {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  const std::size_t n = rank();
  const Rational r2 = radius * radius;
  // |c_i| <= radius * sqrt((Q^{-1})_ii) for c^T Q c <= radius^2.
  const Matrix qinv = inverse(basis_gram_);
  std::vector<std::int64_t> bound(n);
  double box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer f = floor_of(r2 * qinv(i, i));
    Integer s;
    mpz_sqrt(s.get_mpz_t(), f.get_mpz_t());
    if (!s.fits_slong_p()) throw BudgetExceeded("lattice window too large");
    bound[i] = s.get_si();
    box *= 2.0 * static_cast<double>(bound[i]) + 1.0;
  }
  if (box > 64.0 * static_cast<double>(cap) + 1e6)
    throw BudgetExceeded("lattice window box of " + std::to_string(box) + " candidates exceeds the budget");

  std::vector<LatticePoint> out;
  LatticePoint cur = origin();
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      if (norm2(cur) <= r2) {
        if (out.size() >= cap)
          throw BudgetExceeded("more than " + std::to_string(cap) + " lattice points in window");
        out.push_back(cur);
      }
      return;
    }
    for (std::int64_t c = -bound[i]; c <= bound[i]; ++c) {
      cur.coords[i] = c;
      rec(i + 1);
    }
    cur.coords[i] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

LatticePoint weyl_action(const WeylGroup& weyl, const Lattice& lattice, WeylIndex w, const LatticePoint& q) {
  LatticePoint out = lattice.act(w, q);
  const Vector direct = weyl.act(w, lattice.to_vector(q));
  if (!(lattice.to_vector(out) == direct)) throw LatticeNotStable("Weyl action left the lattice");
  return out;
}

std::string to_string(ShiftMode mode) {
  return mode == ShiftMode::RegularOnly ? "regular_only" : "small_in_chamber";
}

ShiftMode parse_shift_mode(const std::string& text) {
  if (text == "regular_only") return ShiftMode::RegularOnly;
  if (text == "small_in_chamber") return ShiftMode::SmallInChamber;
  throw std::invalid_argument("unknown shift mode: " + text);
}

Rational small_shift_bound() { return Rational(1, 2); }

GenericShift validate_generic(const WeylGroup& weyl, const Lattice& lattice, const Vector& a, ShiftMode mode,
                              const Rational& radius) {
  const RootSystem& rs = weyl.roots();
  if (a.size() != rs.rank()) throw std::invalid_argument("shift has wrong dimension");
  rs.positive_system(a);  // NotRegular

  for (const LatticePoint& q : lattice.points(radius)) {
    const Vector p = lattice.to_vector(q) + a;
    for (RootIndex r = 0; r < rs.size(); ++r) {
      if (is_integer(2 * rs.evaluate(r, p)))
        throw FloorBoundary("2 alpha(q + a) is an integer for alpha = " + to_string(rs.root(r)) +
                            ", q = " + to_string(q));
    }
  }

  if (mode == ShiftMode::SmallInChamber) {
    if (!rs.in_base_chamber(a)) throw NotInChamber(to_string(a) + " is not in the base chamber");
    for (RootIndex r = 0; r < rs.size(); ++r) {
      const Rational v = 2 * rs.evaluate(r, a);
      if (abs(v) >= small_shift_bound())
        throw NotSmall("|2 alpha(a)| = " + to_string(Rational(abs(v))) + " >= " + to_string(small_shift_bound()) +
                       " for alpha = " + to_string(rs.root(r)));
    }
  }
  return GenericShift(a, mode, radius);
}

Vector rho_coroot(const RootSystem& roots) {
  Vector sum = zero_vector(roots.rank());
  for (RootIndex r : roots.positive_roots()) sum = sum + roots.coroot(r);
  return sum;
}

Rational canonical_epsilon(const WeylGroup& weyl, const Lattice& lattice, const Rational& radius) {
  const RootSystem& rs = weyl.roots();
  const Vector rho = rho_coroot(rs);
  const long base = 2L * rs.positive_multiplicity_sum() + 1;
  for (long k = 1; k <= 4096; ++k) {
    const Rational eps(1, base * k);
    try {
      validate_generic(weyl, lattice, eps * rho, ShiftMode::SmallInChamber, radius);
      return eps;
    } catch (const Error&) {
    }
  }
  throw InvariantViolation("no canonical epsilon found");
}

std::string to_string(const WeylGroup& weyl, const Generator& g) {
  return "y(" + weyl.label(g.w) + "," + to_string(g.q) + ")";
}

std::vector<Generator> generators(const WeylGroup& weyl, const Lattice& lattice, const Rational& radius) {
  const auto pts = lattice.points(radius);
  std::vector<Generator> out;
  out.reserve(weyl.size() * pts.size());
  for (WeylIndex w = 0; w < weyl.size(); ++w)
    for (const auto& q : pts) out.push_back({w, q});
  return out;
}

std::vector<Chord> chords(const Lattice& lattice, const Rational& radius) {
  std::vector<Chord> out;
  for (auto& q : lattice.points(radius)) out.push_back({q});
  return out;
}

}  // namespace symflag
