#include <doctest.h>

#include <cmath>

#include "oracles/oracles.hpp"
#include "support.hpp"
#include "symflag/errors.hpp"
#include "symflag/triangle.hpp"

using namespace symflag;
using testing::pt;

TEST_CASE("exact triple for group-A1, q = alpha, w = s") {
  const Session s = testing::session("group-A1");
  const WeylIndex refl = s.weyl().from_word({0});
  const auto t = build_triple(s.index(), pt({1}), refl, s.monotone());
  CHECK(t.dim == 1);
  // a = alpha/10, X0 = alpha/2, so q + a = 11/10 and wX0 = -1/2.
  CHECK(t.p12 == Vector{0, Rational(11, 10)});
  CHECK(t.p13 == Vector{0, Rational(-1, 2)});
  CHECK(t.p23 == Vector{Rational(8, 5), Rational(-1, 2)});
  for (const auto& l : t.lagrangians)
    for (const Vector& u : l.directions)
      for (const Vector& v : l.directions) CHECK(symplectic_form(s.model().roots().gram(), u, v) == 0);

  const PlaneModel pm = plane_model(t);
  using V = std::array<Rational, 2>;
  CHECK(pm.vertices[0] == V{0, 1});
  CHECK(pm.vertices[1] == V{1, 0});
  CHECK(pm.vertices[2] == V{0, 0});
}

TEST_CASE("plane model holds across the A2 window") {
  const Session s = testing::session("group-A2");
  for (const LatticePoint& p : s.lattice().points(2))
    for (WeylIndex w = 0; w < s.weyl().size(); ++w) CHECK_NOTHROW(plane_model(build_triple(s.index(), p, w, s.monotone())));
}

TEST_CASE("segment test agrees with the bad/ugly split") {
  const Session s = testing::session("group-A2");
  for (const LatticePoint& p : s.lattice().points(3))
    for (WeylIndex w = 0; w < s.weyl().size(); ++w)
      CHECK(segment_in_closed_chamber(s.index(), p, w, s.monotone()) ==
            (s.index().classify(p, w) == QuiltClass::Bad));
}

TEST_CASE("degenerate triple") {
  // tau = 21/80 puts X0 = 21/20 alpha exactly at q + a for q = alpha, a = alpha/20.
  const Session s = testing::session("group-A1", Rational(1, 20));
  const MonotoneData md = monotone_data(s.model().roots(), Rational(21, 80));
  CHECK_THROWS_AS(build_triple(s.index(), pt({1}), 0, md), Degenerate);
}

TEST_CASE("Gauss-Jacobi rules integrate polynomials exactly") {
  for (auto [a, b] : {std::pair{-0.75, 0.0}, std::pair{0.0, -0.5}, std::pair{0.0, 0.0}}) {
    std::vector<double> x, w;
    gauss_jacobi(8, a, b, x, w);
    for (int j = 0; j < 16; ++j) {
      double sum = 0;
      for (std::size_t k = 0; k < x.size(); ++k) sum += w[k] * std::pow(1 + x[k], j);
      const double ref = oracle::jacobi_moment(a, b, j);
      CHECK(std::abs(sum - ref) <= 1e-12 * std::abs(ref));
    }
  }
}

TEST_CASE("triangle map vertices, boundary and hull") {
  const TriangleMap map(256);
  const auto& z = TriangleMap::prevertices();
  const PlanePoint v0 = map.evaluate(z[0]), v1 = map.evaluate(z[1]), v2 = map.evaluate(z[2]);
  CHECK(v0.x == doctest::Approx(0).epsilon(1e-10));
  CHECK(v0.y == doctest::Approx(1).epsilon(1e-10));
  CHECK(v1.x == doctest::Approx(1).epsilon(1e-10));
  CHECK(v2.y == doctest::Approx(0).epsilon(1e-10));
  CHECK(map.residuals().corner <= 1e-8);
  CHECK(map.residuals().boundary < 1e-6);
  CHECK(map.residuals().symmetry <= 1e-8);
  CHECK(verify_hull(map, 500, 1e-9).passed());
}

TEST_CASE("shape of the map matches a direct ray integral") {
  const TriangleMap map(128);
  const std::complex<double> z1(0.3, 0.2), z2(-0.25, 0.1);
  const auto ref = oracle::sc_ray_integral(z1, 400) / oracle::sc_ray_integral(z2, 400);
  const auto got = (map.g(z1) - map.g(0)) / (map.g(z2) - map.g(0));
  CHECK(std::abs(got - ref) < 1e-9);
}

TEST_CASE("conformality residual shrinks with the node count") {
  double prev = INFINITY;
  for (int n : {64, 128, 256}) {
    const double r = TriangleMap(n).residuals().conformality;
    CHECK(r < prev);
    prev = r;
  }
}

TEST_CASE("too few nodes are refused") {
  CHECK_THROWS_AS(TriangleMap(8), std::invalid_argument);
  CHECK_NOTHROW(TriangleMap(TriangleMap::kMinNodes));
}
