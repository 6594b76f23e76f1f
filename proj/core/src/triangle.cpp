#include "symflag/triangle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "symflag/errors.hpp"

namespace symflag {

namespace {

using cd = std::complex<double>;

Vector concat(const Vector& a, const Vector& b) {
  Vector out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Matrix columns(const std::vector<Vector>& cols) {
  Matrix m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
  return m;
}

/// The unique common point of two affine subspaces of complementary dimension.
Vector intersect(const AffineSubspace& s, const AffineSubspace& t) {
  std::vector<Vector> cols = s.directions;
  for (const Vector& d : t.directions) cols.push_back(-d);
  const Matrix m = columns(cols);
  if (m.rows() != m.cols() || determinant(m) == 0) throw Degenerate("affine Lagrangians are not transverse");
  const Vector coeff = solve(m, t.point - s.point);
  Vector p = s.point;
  for (std::size_t j = 0; j < s.directions.size(); ++j) p = p + coeff[j] * s.directions[j];
  return p;
}

bool contains(const AffineSubspace& s, const Vector& p) {
  std::vector<Vector> cols = s.directions;
  const std::size_t r = matrix_rank(columns(cols));
  cols.push_back(p - s.point);
  return matrix_rank(columns(cols)) == r;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

Rational symplectic_form(const Matrix& gram, const Vector& u, const Vector& v) {
  const std::size_t r = gram.rows();
  const Vector ue(u.begin(), u.begin() + r), uz(u.begin() + r, u.end());
  const Vector ve(v.begin(), v.begin() + r), vz(v.begin() + r, v.end());
  return dot(ue, gram * vz) - dot(uz, gram * ve);
}

AffineLagrangianTriple build_triple(const IndexEngine& index, const LatticePoint& q, WeylIndex w,
                                    const MonotoneData& md) {
  const WeylGroup& weyl = index.weyl();
  const Matrix& gram = weyl.roots().gram();
  const std::size_t r = gram.rows();
  const Vector qa = index.lattice().to_vector(q) + index.shift().a();
  const Vector wx0 = weyl.act(w, md.x0);
  if (qa == wx0) throw Degenerate("q + a = wX0 for q = " + to_string(q) + ", w = " + weyl.label(w));

  const Vector zero = zero_vector(r);
  AffineLagrangianTriple t;
  t.dim = r;
  for (std::size_t i = 0; i < r; ++i) {
    Vector e = zero;
    e[i] = 1;
    t.lagrangians[0].directions.push_back(concat(zero, e));
    t.lagrangians[1].directions.push_back(concat(-e, e));
    t.lagrangians[2].directions.push_back(concat(e, zero));
  }
  t.lagrangians[0].point = concat(zero, zero);
  t.lagrangians[1].point = concat(qa, zero);
  t.lagrangians[2].point = concat(zero, wx0);

  for (const AffineSubspace& l : t.lagrangians) {
    if (matrix_rank(columns(l.directions)) != r) throw InvariantViolation("Lagrangian direction space has wrong rank");
    for (const Vector& u : l.directions)
      for (const Vector& v : l.directions)
        if (symplectic_form(gram, u, v) != 0) throw InvariantViolation("direction space is not isotropic");
  }

  t.p12 = intersect(t.lagrangians[0], t.lagrangians[1]);
  t.p23 = intersect(t.lagrangians[1], t.lagrangians[2]);
  t.p13 = intersect(t.lagrangians[0], t.lagrangians[2]);
  if (!(t.p12 == concat(zero, qa)) || !(t.p23 == concat(qa - wx0, wx0)) || !(t.p13 == concat(zero, wx0)))
    throw InvariantViolation("intersection points disagree with the closed form");
  const auto& L = t.lagrangians;
  if (!contains(L[0], t.p12) || !contains(L[1], t.p12) || !contains(L[1], t.p23) || !contains(L[2], t.p23) ||
      !contains(L[0], t.p13) || !contains(L[2], t.p13))
    throw InvariantViolation("intersection point off its Lagrangians");
  return t;
}

PlaneModel plane_model(const AffineLagrangianTriple& t) {
  const std::size_t r = t.dim;
  const Vector zero = zero_vector(r);
  const Vector wx0(t.p13.begin() + r, t.p13.end());
  const Vector d(t.p23.begin(), t.p23.begin() + r);
  if (is_zero(d)) throw Degenerate("intersection points coincide");

  PlaneModel pm;
  pm.basepoint = t.p13;
  pm.u = concat(d, zero);
  pm.v = concat(zero, d);

  // Each L_k is cut out by N_k p = N_k point_k, with the rows of N_k spanning the
  // annihilator of its directions. Substituting p = base + x u + y v gives the
  // pulled-back equations, which must all be multiples of the expected line.
  const std::array<std::array<Rational, 3>, 3> expected{{{1, 0, 0}, {1, 1, 1}, {0, 1, 0}}};
  for (std::size_t k = 0; k < 3; ++k) {
    const AffineSubspace& l = t.lagrangians[k];
    const auto annihilator = null_space(columns(l.directions).transpose());
    bool found = false;
    for (const Vector& n : annihilator) {
      const Rational cx = dot(n, pm.u), cy = dot(n, pm.v), c = dot(n, l.point - pm.basepoint);
      const std::array<Rational, 3> row{cx, cy, c};
      Rational scale = 0;
      for (std::size_t j = 0; j < 3; ++j)
        if (expected[k][j] != 0) scale = row[j] / expected[k][j];
      for (std::size_t j = 0; j < 3; ++j)
        if (row[j] != scale * expected[k][j]) throw InvariantViolation("pulled-back line is not the expected one");
      if (scale != 0) found = true;
    }
    if (!found) throw Degenerate("plane lies inside a Lagrangian");
    pm.lines[k] = expected[k];
  }

  auto preimage = [&](const Vector& p) -> std::array<Rational, 2> {
    const Matrix m = columns({pm.u, pm.v});
    const Matrix mt = m.transpose();
    const Vector xy = solve(mt * m, mt * (p - pm.basepoint));
    if (!(pm.basepoint + xy[0] * pm.u + xy[1] * pm.v == p)) throw InvariantViolation("vertex is off the plane");
    return {xy[0], xy[1]};
  };
  pm.vertices = {preimage(t.p12), preimage(t.p23), preimage(t.p13)};
  const std::array<std::array<Rational, 2>, 3> expected_vertices{{{0, 1}, {1, 0}, {0, 0}}};
  if (pm.vertices != expected_vertices) throw InvariantViolation("plane model vertices are misplaced");
  return pm;
}

bool segment_in_closed_chamber(const IndexEngine& index, const LatticePoint& q, WeylIndex w, const MonotoneData& md) {
  const WeylGroup& weyl = index.weyl();
  const RootSystem& rs = weyl.roots();
  const Vector qa = index.lattice().to_vector(q) + index.shift().a();
  const Vector wx0 = weyl.act(w, md.x0);
  // The closed chamber is a convex cone, so checking both endpoints suffices.
  for (RootIndex r : weyl.positive_roots_of(w))
    if (rs.evaluate(r, qa) < 0 || rs.evaluate(r, wx0) < 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

void gauss_jacobi(int n, double a, double b, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi needs n >= 1");
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 1));
  const double ab = a + b;
  diag(0) = (b - a) / (ab + 2);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (b * b - a * a) / (s * (s + 2));
    double beta;
    if (k == 1)
      beta = 4 * (1 + a) * (1 + b) / ((2 + ab) * (2 + ab) * (3 + ab));
    else
      beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1) * (s - 1));
    sub(k - 1) = std::sqrt(beta);
  }
  const double mu0 = std::pow(2.0, ab + 1) * std::tgamma(a + 1) * std::tgamma(b + 1) / std::tgamma(ab + 2);
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  if (n == 1) {
    nodes[0] = diag(0);
    weights[0] = mu0;
    return;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw QuadratureNotConverged("Golub-Welsch eigensolver failed");
  for (int i = 0; i < n; ++i) {
    nodes[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    weights[i] = mu0 * v0 * v0;
  }
}

const std::array<std::complex<double>, 3>& TriangleMap::prevertices() {
  static const std::array<cd, 3> z{cd(1, 0), cd(0, 1), cd(0, -1)};
  return z;
}

const std::array<double, 3>& TriangleMap::exponents() {
  static const std::array<double, 3> beta{0.75, 0.75, 0.5};
  return beta;
}

const TriangleMap::Rule& TriangleMap::rule(int n, int end0, int end1) const {
  return rules_.at({n, end0, end1});
}

TriangleMap::TriangleMap(int nodes) : nodes_(nodes) {
  if (nodes < kMinNodes) throw std::invalid_argument("solve_triangle needs at least 16 quadrature nodes");
  const auto& beta = exponents();
  for (int n : {nodes, nodes / 2}) {
    for (int e0 = -1; e0 < 3; ++e0) {
      for (int e1 = -1; e1 < 3; ++e1) {
        if (e0 >= 0 && e1 >= 0) continue;
        Rule r;
        gauss_jacobi(n, e1 >= 0 ? -beta[e1] : 0.0, e0 >= 0 ? -beta[e0] : 0.0, r.nodes, r.weights);
        rules_.emplace(std::make_tuple(n, e0, e1), std::move(r));
      }
    }
  }
  certify();
}

std::complex<double> TriangleMap::integrand_regular(cd zeta, int skip0, int skip1) const {
  const auto& z = prevertices();
  const auto& beta = exponents();
  cd f = 1;
  for (int k = 0; k < 3; ++k)
    if (k != skip0 && k != skip1) f *= std::pow(1.0 - zeta / z[k], -beta[k]);
  return f;
}

std::complex<double> TriangleMap::segment(cd p0, cd p1, int sing0, int sing1, int n) const {
  const auto& z = prevertices();
  const auto& beta = exponents();
  const double len = std::abs(p1 - p0);
  if (len == 0) return 0;

  double clearance = INFINITY;
  for (int k = 0; k < 3; ++k) {
    if (k == sing0 || k == sing1) continue;
    const cd d = p1 - p0;
    const double t = std::clamp(std::real((z[k] - p0) * std::conj(d)) / std::norm(d), 0.0, 1.0);
    clearance = std::min(clearance, std::abs(z[k] - (p0 + t * d)));
  }
  // Pieces carry at most one singular end and stay at least their own length
  // away from every other prevertex.
  if ((sing0 >= 0 && sing1 >= 0) || len > clearance) {
    const cd mid = 0.5 * (p0 + p1);
    return segment(p0, mid, sing0, -1, n) + segment(mid, p1, -1, sing1, n);
  }

  const Rule& r = rule(n, sing0, sing1);
  const cd half = 0.5 * (p1 - p0);
  cd endpoint_factor = 1;
  if (sing0 >= 0) endpoint_factor = std::pow(-half / z[sing0], -beta[sing0]);
  if (sing1 >= 0) endpoint_factor = std::pow(half / z[sing1], -beta[sing1]);
  cd sum = 0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    const cd zeta = p0 + (r.nodes[i] + 1.0) * half;
    sum += r.weights[i] * integrand_regular(zeta, sing0, sing1);
  }
  return half * endpoint_factor * sum;
}

std::complex<double> TriangleMap::g(cd z) const {
  const auto& pv = prevertices();
  int k = 0;
  for (int j = 1; j < 3; ++j)
    if (std::abs(z - pv[j]) < std::abs(z - pv[k])) k = j;
  const cd start = k == 0 ? cd(1, 0) : k == 1 ? g_i_ : cd(0, 0);
  if (std::abs(z - pv[k]) == 0) return start;
  return start + segment(pv[k], z, k, -1, nodes_) / vertex_integrals_[0];
}

PlanePoint TriangleMap::evaluate(cd z) const {
  const cd w = g(z);
  return {w.imag(), w.real()};
}

void TriangleMap::certify() {
  const auto& pv = prevertices();
  vertex_integrals_[0] = segment(pv[2], pv[0], 2, 0, nodes_);
  vertex_integrals_[1] = segment(pv[2], pv[1], 2, 1, nodes_);
  g_i_ = vertex_integrals_[1] / vertex_integrals_[0];

  const cd coarse0 = segment(pv[2], pv[0], 2, 0, nodes_ / 2);
  const cd coarse1 = segment(pv[2], pv[1], 2, 1, nodes_ / 2);
  residuals_.quadrature =
      std::max(std::abs(coarse0 - vertex_integrals_[0]), std::abs(coarse1 - vertex_integrals_[1])) /
      std::abs(vertex_integrals_[0]);
  if (!(residuals_.quadrature <= kConvergenceTol))
    throw QuadratureNotConverged("vertex integrals change by " + fmt(residuals_.quadrature) + " between " +
                                 std::to_string(nodes_ / 2) + " and " + std::to_string(nodes_) + " nodes");

  // g(i) two ways: directly from -i, and through the vertex at 1.
  const cd via_one = (vertex_integrals_[0] + segment(pv[0], pv[1], 0, 1, nodes_)) / vertex_integrals_[0];
  const std::array<PlanePoint, 3> want{{{0, 1}, {1, 0}, {0, 0}}};
  residuals_.corner = std::abs(via_one - g_i_);
  for (int k = 0; k < 3; ++k) {
    const PlanePoint p = evaluate(pv[k]);
    residuals_.corner = std::max(residuals_.corner, std::hypot(p.x - want[k].x, p.y - want[k].y));
  }

  const double pi = std::acos(-1.0);
  residuals_.boundary = 0;
  for (std::size_t s = 0; s < kBoundarySamples; ++s) {
    const double theta = -pi / 2 + 2 * pi * (static_cast<double>(s) + 0.5) / kBoundarySamples;
    const PlanePoint p = evaluate(std::polar(1.0, theta));
    double dev;
    if (theta < 0)
      dev = std::abs(p.x);
    else if (theta < pi / 2)
      dev = std::abs(p.x + p.y - 1);
    else
      dev = std::abs(p.y);
    residuals_.boundary = std::max(residuals_.boundary, dev);
  }

  // Anti-conformal disk automorphism fixing -i and swapping 1 and i.
  auto cross = [](cd z, cd z1, cd z2, cd z3) { return ((z - z1) * (z2 - z3)) / ((z - z3) * (z2 - z1)); };
  auto sigma = [&](cd z) {
    const cd zb = std::conj(z);
    // Moebius M with M(1) = i, M(-i) = 1, M(i) = -i.
    const cd c = cross(zb, pv[0], pv[2], pv[1]);
    // Invert c = cross(m, i, 1, -i) for m.
    const cd w1 = pv[1], w2 = pv[0], w3 = pv[2];
    const cd k = (w2 - w3) / (w2 - w1);
    return (w1 * k - c * w3) / (k - c);
  };

  const double h = 0.5 / nodes_;
  residuals_.conformality = 0;
  residuals_.symmetry = 0;
  for (double radius : {0.2, 0.4, 0.6, 0.8}) {
    for (int j = 0; j < 16; ++j) {
      const cd z = std::polar(radius, 2 * pi * (j + 0.25) / 16);
      const cd ds = (g(z + h) - g(z - h)) / (2 * h);
      const cd dt = (g(z + cd(0, h)) - g(z - cd(0, h))) / (2 * h);
      residuals_.conformality = std::max(residuals_.conformality, std::abs(dt - cd(0, 1) * ds) / std::abs(ds));
      const cd mirrored = g(sigma(z));
      residuals_.symmetry = std::max(residuals_.symmetry, std::abs(mirrored - cd(0, 1) * std::conj(g(z))));
    }
  }
}

HullReport verify_hull(const TriangleMap& map, std::size_t samples, double tolerance) {
  HullReport rep;
  rep.samples = samples;
  rep.tolerance = tolerance;
  rep.max_violation = -INFINITY;
  const double golden = std::acos(-1.0) * (3.0 - std::sqrt(5.0));
  for (std::size_t k = 0; k < samples; ++k) {
    const double r = std::sqrt((static_cast<double>(k) + 0.5) / static_cast<double>(samples));
    const PlanePoint p = map.evaluate(std::polar(r, golden * static_cast<double>(k)));
    rep.max_violation = std::max({rep.max_violation, -p.x, -p.y, p.x + p.y - 1});
  }
  rep.center = map.evaluate(0);
  rep.center_interior = rep.center.x > 0 && rep.center.y > 0 && rep.center.x + rep.center.y < 1;
  return rep;
}

}  // namespace symflag
