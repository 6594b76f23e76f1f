#pragma once

// Model problem for degenerate quilts: three affine Lagrangians in T^*t = t x t,
// the plane through their pairwise intersections, and the conformal map of the
// disk onto the resulting right isosceles triangle.
//
// Everything up to plane_model is exact. solve_triangle and verify_hull work
// in binary64.

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <tuple>
#include <vector>

#include "symflag/index.hpp"
#include "symflag/rational.hpp"

namespace symflag {

/// point + span(directions) inside Q^{2r}; the first r coordinates are the
/// cotangent (eta) part and the last r the base (zeta) part.
struct AffineSubspace {
  Vector point;
  std::vector<Vector> directions;
};

struct AffineLagrangianTriple {
  std::size_t dim = 0;
  std::array<AffineSubspace, 3> lagrangians;  // L1 = {(0, z)}, L2 = {(q+a-z, z)}, L3 = {(eta, wX0)}
  Vector p12;                                 // L1 n L2 = (0, q+a)
  Vector p23;                                 // L2 n L3 = (q+a-wX0, wX0)
  Vector p13;                                 // L1 n L3 = (0, wX0)
};

/// omega((e1, z1), (e2, z2)) = <e1, z2> - <z1, e2>.
Rational symplectic_form(const Matrix& gram, const Vector& u, const Vector& v);

/// Builds the triple exactly and checks isotropy, pairwise transversality and
/// the three intersection points by exact linear solves. Throws Degenerate when q + a = wX0.
AffineLagrangianTriple build_triple(const IndexEngine& index, const LatticePoint& q, WeylIndex w,
                                    const MonotoneData& md);

/// Parametrization (x, y) -> (x d, wX0 + y d) with d = q + a - wX0.
struct PlaneModel {
  Vector basepoint;  // (0, wX0)
  Vector u;          // (d, 0)
  Vector v;          // (0, d)
  /// Pulled-back boundary lines as coefficients (c_x, c_y, c) of c_x x + c_y y = c.
  std::array<std::array<Rational, 3>, 3> lines;
  /// Preimages of p12, p23, p13.
  std::array<std::array<Rational, 2>, 3> vertices;
};

/// Verifies exactly that L1, L2, L3 pull back to x = 0, x + y = 1, y = 0 and that
/// the intersection points go to (0,1), (1,0), (0,0). Throws Degenerate.
PlaneModel plane_model(const AffineLagrangianTriple& t);

/// [q + a, wX0] lies in the closure of w(C). Equivalent to classify(q, w) == Bad.
bool segment_in_closed_chamber(const IndexEngine& index, const LatticePoint& q, WeylIndex w, const MonotoneData& md);

struct PlanePoint {
  double x = 0;
  double y = 0;
};

struct TriangleResiduals {
  double corner = 0;        // vertex images against (0,1), (1,0), (0,0)
  double boundary = 0;      // max line deviation over boundary samples
  double conformality = 0;  // discrete Cauchy-Riemann residual, interior samples
  double symmetry = 0;      // x <-> y reflection against the disk anti-automorphism
  double quadrature = 0;    // n versus n/2 nodes on the vertex integrals
};

/// Schwarz-Christoffel map of the unit disk onto {x, y >= 0, x + y <= 1} with
/// prevertices 1 -> (0,1), i -> (1,0), -i -> (0,0).
///
/// The map is holomorphic in W = y + i x (the triangle traversed in the disk
/// orientation), so evaluate returns (x, y) = (Im g, Re g).
class TriangleMap {
 public:
  static constexpr int kMinNodes = 16;
  static constexpr std::size_t kBoundarySamples = 500;
  static constexpr double kConvergenceTol = 1e-9;

  /// Throws std::invalid_argument for nodes < 16 and QuadratureNotConverged.
  explicit TriangleMap(int nodes);

  int nodes() const { return nodes_; }
  static const std::array<std::complex<double>, 3>& prevertices();
  static const std::array<double, 3>& exponents();
  /// F(1) - F(-i) and F(i) - F(-i) for the unnormalized integral F.
  std::complex<double> side_integral(std::size_t k) const { return vertex_integrals_[k]; }

  /// g(z) in the W coordinate; |z| <= 1.
  std::complex<double> g(std::complex<double> z) const;
  PlanePoint evaluate(std::complex<double> z) const;

  const TriangleResiduals& residuals() const { return residuals_; }

 private:
  struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
  };

  /// Integral of the SC integrand over the segment [p0, p1]; sing0 / sing1
  /// name the prevertex at that end (or -1).
  std::complex<double> segment(std::complex<double> p0, std::complex<double> p1, int sing0, int sing1,
                               int n) const;
  std::complex<double> integrand_regular(std::complex<double> zeta, int skip0, int skip1) const;
  const Rule& rule(int n, int end0, int end1) const;
  void certify();

  int nodes_;
  std::array<std::complex<double>, 2> vertex_integrals_{};
  std::complex<double> g_i_{};  // computed image of the prevertex i
  TriangleResiduals residuals_;
  std::map<std::tuple<int, int, int>, Rule> rules_;
};

/// Gauss-Jacobi rule for (1 - t)^a (1 + t)^b on [-1, 1] by Golub-Welsch.
void gauss_jacobi(int n, double a, double b, std::vector<double>& nodes, std::vector<double>& weights);

struct HullReport {
  std::size_t samples = 0;
  double max_violation = 0;  // max over samples of max(-x, -y, x + y - 1)
  double tolerance = 0;
  PlanePoint center;
  bool center_interior = false;
  bool passed() const { return max_violation <= tolerance && center_interior; }
};

/// Sunflower samples r = sqrt((k + 1/2) / N) in the open disk.
HullReport verify_hull(const TriangleMap& map, std::size_t samples, double tolerance);

}  // namespace symflag
