// Acceptance run: one PASS/FAIL line per criterion, exit status = number of failures.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/oracles.hpp"
#include "symflag/catalog.hpp"
#include "symflag/errors.hpp"
#include "symflag/suite.hpp"
#include "symflag/triangle.hpp"

using namespace symflag;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += "FAILED " + what;
    }
  }
  void note(const std::string& s) {
    if (!detail.empty()) detail += "; ";
    detail += s;
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;  // 0 = no time limit
  std::function<void(Outcome&)> run;
};

const std::array<const char*, 4> kSweepEntries{"group-A1", "group-A2", "AI-A2", "AII-A1"};

std::unique_ptr<Session> open(const std::string& name, Rational radius,
                              std::optional<Rational> eps = std::nullopt) {
  SuiteOptions o;
  o.radius = std::move(radius);
  o.epsilon = std::move(eps);
  return std::make_unique<Session>(find_entry(builtin_catalog(), name), o);
}

void monotone(Outcome& out) {
  for (const CatalogEntry& e : builtin_catalog()) {
    const EntryModel m(e);
    const RootSystem& rs = m.roots();
    const MonotoneData md = monotone_data(rs, default_tau(rs));
    bool dominant = true;
    for (RootIndex s : rs.simple_roots()) dominant = dominant && rs.pairing(md.rho, rs.root(s)) > 0;
    out.require(dominant, e.name + " <rho, beta> > 0");
    out.require(monotone_identity_holds(rs, md, m.lattice().basis()), e.name + " identity on lattice basis");
  }
  out.note(std::to_string(builtin_catalog().size()) + " entries");
}

void bad_ugly(Outcome& out) {
  for (const char* name : kSweepEntries) {
    const auto s = open(name, 4);
    const IndexEngine& idx = s->index();
    std::size_t bad = 0, ugly = 0;
    bool ok = true;
    for (const LatticePoint& q : s->lattice().points(4)) {
      for (WeylIndex w = 0; w < s->weyl().size(); ++w) {
        const Integer qi = idx.quilt_index({q, w, q});
        if (idx.classify(q, w) == QuiltClass::Bad) {
          ++bad;
          ok = ok && qi == 0;
        } else {
          ++ugly;
          const Integer u = idx.ugly_index(q, w);
          ok = ok && u >= 1 && u == qi;
        }
      }
    }
    out.require(ok, name);
    out.note(std::string(name) + " bad=" + std::to_string(bad) + " ugly=" + std::to_string(ugly));
  }
}

void worked_values(Outcome& out) {
  // Hand evaluation: tau = 1/8, 2 alpha(a) = 1/5, m = 2, alpha(alpha) = 2.
  const Rational tau(1, 8), ell_e(2, 5), ell_s(8, 5), area(-1);
  const long ugly = 18, maslov = -8;

  const auto s = open("group-A1", 3, Rational(1, 20));
  const IndexEngine& idx = s->index();
  const RootSystem& rs = s->model().roots();
  const WeylIndex refl = s->weyl().from_word({0});
  const LatticePoint alpha{{1}};

  out.require(s->monotone().tau == tau, "tau");
  out.require(idx.two_alpha(rs.positive_roots().front(), s->lattice().origin()) == Rational(1, 5), "2 alpha(a)");
  out.require(s->monotone().x0 == Vector{Rational(1, 2)}, "X0 = alpha/2");
  out.require(idx.ell_prime(WeylGroup::identity()) == ell_e, "ell'(e)");
  out.require(idx.ell_prime(refl) == ell_s, "ell'(s)");
  out.require(idx.ugly_index(alpha, refl) == ugly, "ugly_index(alpha, s)");
  const Integer mu = capping_maslov(rs, s->lattice(), alpha);
  const Rational ar = capping_area(rs, s->lattice(), alpha, s->monotone());
  out.require(mu == maslov, "maslov");
  out.require(ar == area, "area");
  out.require(ar == tau * Rational(mu), "area = tau * maslov");
  out.note("ell'=" + to_string(idx.ell_prime(0)) + "," + to_string(idx.ell_prime(refl)) +
           " ugly=" + idx.ugly_index(alpha, refl).get_str() + " maslov=" + mu.get_str() + " area=" + to_string(ar));
}

void end2(Outcome& out) {
  for (const char* name : kSweepEntries) {
    const auto s = open(name, 3);
    const IndexEngine& idx = s->index();
    std::vector<EndTerms> terms;
    for (const LatticePoint& q : s->lattice().points(3))
      for (WeylIndex w = 0; w < s->weyl().size(); ++w) terms.push_back(idx.end_terms({q, w}, s->monotone()));
    std::size_t pairs = 0, antecedent = 0;
    bool ok = true;
    for (const EndTerms& a : terms) {
      for (const EndTerms& b : terms) {
        ++pairs;
        ok = ok && idx.end2_implication_check(a, b, s->monotone());
        if (a.floor_sum == b.floor_sum && a.pairing > b.pairing) ++antecedent;
      }
    }
    out.require(ok, name);
    out.note(std::string(name) + " pairs=" + std::to_string(pairs) + " antecedent=" + std::to_string(antecedent));
  }
}

void ell_minimum(Outcome& out) {
  for (const CatalogEntry& e : builtin_catalog()) {
    const auto s = open(e.name, 3);
    const Rational at_e = s->index().ell_prime(WeylGroup::identity());
    bool unique = true;
    for (WeylIndex w = 1; w < s->weyl().size(); ++w) unique = unique && s->index().ell_prime(w) > at_e;
    out.require(unique, e.name);
    if (e.name == "EIV-A2") {
      out.require(s->weyl().size() == 6, "EIV restricted Weyl group has 6 elements");
      out.note("EIV |W|=" + std::to_string(s->weyl().size()));
    }
  }
  const WeylGroup f4 = WeylGroup::generate(cartan_root_system("F4"));
  out.require(f4.size() == oracle::weyl_order("F4") && f4.size() == 1152, "F4 order");
  out.note("F4 |W|=" + std::to_string(f4.size()));
}

void poincare(Outcome& out) {
  for (const CatalogEntry& e : builtin_catalog()) {
    const auto s = open(e.name, 3);
    const auto p = s->index().poincare_polynomial();
    const int d = s->model().roots().positive_multiplicity_sum();
    out.require(std::equal(p.begin(), p.end(), p.rbegin()), e.name + " palindromic");
    out.require(static_cast<int>(p.size()) == d + 1 && p.back() > 0, e.name + " top degree");
    std::int64_t sum = 0;
    for (auto c : p) sum += c;
    out.require(static_cast<std::size_t>(sum) == s->weyl().size(), e.name + " sum = |W|");
    if (e.name == "group-A1") {
      out.require(p == std::vector<std::int64_t>{1, 0, 1}, "group-A1 is 1 + t^2");
    }
  }
}

void parity(Outcome& out) {
  for (const CatalogEntry& e : builtin_catalog()) {
    const auto s = open(e.name, 4);
    const ParityReport r = s->index().parity_report(false);
    if (r.all_multiplicities_even) {
      out.require(r.odd_count == 0 && r.differential_must_vanish == "true", e.name);
    } else if (e.name == "AI-A2") {
      out.require(r.differential_must_vanish == "undetermined", "AI-A2 undetermined");
      out.require(r.odd_count > 0 && r.even_count > 0, "AI-A2 mixed parities");
      out.note("AI-A2 even=" + std::to_string(r.even_count) + " odd=" + std::to_string(r.odd_count));
    }
  }
}

void ring(Outcome& out) {
  for (const CatalogEntry& e : builtin_catalog()) {
    const auto s = open(e.name, 3);
    const auto cert = s->ring().triangularity_certificate(3, 4);
    out.require(cert.complete() && cert.passed(), e.name + " certificate at radius 3");
    try {
      out.require(s->ring().finitely_generated_witness(3).all_reachable(), e.name + " witness at radius 3");
    } catch (const WindowTooSmall&) {
      out.require(false, e.name + " witness window at radius 3");
    }

    const auto s0 = open(e.name, 0);
    out.require(s0->ring().triangularity_certificate(0).passed(), e.name + " certificate at radius 0");
    try {
      out.require(s0->ring().finitely_generated_witness(0).all_reachable(), e.name + " witness at radius 0");
    } catch (const WindowTooSmall&) {
      // advisory at radius 0
    }
  }

  std::mt19937_64 rng(10000);
  std::size_t triples = 0;
  bool laws = true;
  for (const char* name : kSweepEntries) {
    const auto s = open(name, 3);
    const RingEngine& r = s->ring();
    const std::size_t rank = s->lattice().rank();
    std::uniform_int_distribution<std::int64_t> coord(-6, 6);
    std::uniform_int_distribution<WeylIndex> pick(0, s->weyl().size() - 1);
    auto point = [&] {
      LatticePoint p;
      for (std::size_t i = 0; i < rank; ++i) p.coords.push_back(coord(rng));
      return p;
    };
    for (int i = 0; i < 2500; ++i, ++triples) {
      const LatticePoint q1 = point(), q2 = point();
      const Generator g{pick(rng), point()};
      const auto y1 = RingElement::generator({0, q1}), y2 = RingElement::generator({0, q2});
      const auto y = RingElement::generator(g);
      laws = laws && r.star_unit_sector(s->lattice().origin(), g) == g;
      laws = laws && r.star_unit_sector(q1, r.star_unit_sector(q2, g)) == r.star_unit_sector(q1 + q2, g);
      laws = laws && r.multiply(y1, y2) == RingElement::generator({0, q1 + q2});
      laws = laws && r.multiply(r.multiply(y1, y2), y) == r.multiply(y1, r.multiply(y2, y));
    }
  }
  out.require(laws, "star laws");
  out.note(std::to_string(triples) + " random triples over z2");
}

void triangle(Outcome& out) {
  const auto s = open("group-A1", 3);
  const WeylIndex refl = s->weyl().from_word({0});
  const PlaneModel pm = plane_model(build_triple(s->index(), LatticePoint{{1}}, refl, s->monotone()));

  const TriangleMap map(256);
  double corner = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    const PlanePoint p = map.evaluate(TriangleMap::prevertices()[k]);
    corner = std::max({corner, std::abs(p.x - to_double(pm.vertices[k][0])),
                       std::abs(p.y - to_double(pm.vertices[k][1]))});
  }
  out.require(corner <= 1e-8, "corner");
  out.require(map.residuals().boundary < 1e-6, "boundary");
  const HullReport hull = verify_hull(map, 500, 1e-9);
  out.require(hull.passed(), "hull");

  // The conformality residual carries the discretization error; the others sit
  // at rounding level and only need to stay there.
  std::vector<TriangleResiduals> res;
  for (int n : {64, 128, 256}) res.push_back(TriangleMap(n).residuals());
  for (std::size_t i = 1; i < res.size(); ++i) {
    out.require(res[i].conformality <= 1.1 * res[i - 1].conformality, "conformality decreasing");
    for (double r : {res[i].corner, res[i].boundary, res[i].symmetry, res[i].quadrature})
      out.require(r <= 1e-12, "rounding-level residuals");
  }
  std::ostringstream d;
  d.precision(3);
  d << "corner=" << corner << " boundary=" << map.residuals().boundary << " hull=" << hull.max_violation
    << " cr=" << res[0].conformality << "/" << res[1].conformality << "/" << res[2].conformality;
  out.note(d.str());
}

std::string capture(const std::string& cmd, int& status) {
  std::string text;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return text;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) text.append(buf.data(), n);
  status = pclose(p);
  return text;
}

void determinism(Outcome& out) {
#ifdef SYMFLAG_CLI_PATH
  for (const char* name : {"group-A1", "AI-A2"}) {
    const std::string cmd = std::string("\"") + SYMFLAG_CLI_PATH + "\" --pair " + name + " --jobs 8 verify --triangle";
    int st1 = 0, st2 = 0;
    const std::string a = capture(cmd, st1), b = capture(cmd, st2);
    out.require(st1 == 0 && st2 == 0, std::string(name) + " exit status");
    out.require(!a.empty() && a == b, std::string(name) + " byte-identical");
    out.note(std::string(name) + " " + std::to_string(a.size()) + " bytes");
  }
#else
  out.note("cli not built; in-process only");
#endif
  SuiteOptions o;
  o.jobs = 8;
  o.triangle = true;
  const auto& e = find_entry(builtin_catalog(), "group-A2");
  out.require(emit(run_suite(e, o), ReportFormat::Json) == emit(run_suite(e, o), ReportFormat::Json),
              "group-A2 in-process");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "monotone data", 1, monotone},
      {2, "bad/ugly sweep, radius 4", 30, bad_ugly},
      {3, "worked exact values", 0, worked_values},
      {4, "end2 implication, radius 3", 60, end2},
      {5, "ell' unique minimum, F4 stress", 10, ell_minimum},
      {6, "Morse / Poincare", 0, poincare},
      {7, "parity, radius 4", 0, parity},
      {8, "ring certificates and star laws", 0, ring},
      {9, "triangle model", 5, triangle},
      {10, "determinism with --jobs 8", 0, determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs >= c.budget_s) out.require(false, "time budget " + std::to_string(c.budget_s) + " s");
    if (!out.ok) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << (out.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing << ") "
              << out.detail << "\n";
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << criteria.size() - static_cast<std::size_t>(failures) << "/"
            << criteria.size() << "\n";
  return failures;
}
