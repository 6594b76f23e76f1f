#include "symflag/ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <tuple>

#include "symflag/errors.hpp"
#include "symflag/parallel.hpp"

namespace symflag {

std::string to_string(CoefficientRing ring) { return ring == CoefficientRing::Z2 ? "z2" : "z"; }

CoefficientRing parse_coefficient_ring(const std::string& text) {
  if (text == "z2" || text == "Z2") return CoefficientRing::Z2;
  if (text == "z" || text == "Z") return CoefficientRing::Z;
  throw std::invalid_argument("unknown coefficient ring: " + text);
}

RingElement RingElement::generator(const Generator& g, CoefficientRing ring) {
  RingElement x(ring);
  x.add(g, 1);
  return x;
}

void RingElement::add(const Generator& g, const Integer& c) {
  Integer& slot = terms_[g];
  slot += c;
  if (ring_ == CoefficientRing::Z2) slot = slot % 2;
  if (slot == 0) terms_.erase(g);
}

bool TriangularityCertificate::passed() const {
  return leading_injective && leading_matches_classify &&
         std::all_of(rows.begin(), rows.end(), [](const TriangularityRow& r) { return r.verified; });
}

void TriangularityCertificate::require_complete(const WeylGroup& weyl) const {
  if (complete()) return;
  std::vector<std::string> names;
  for (const Generator& g : missing) names.push_back(to_string(weyl, g));
  throw WindowTooSmall(std::to_string(missing.size()) + " generator(s) have no chamber witness in the window",
                       std::move(names));
}

Generator RingEngine::star_unit_sector(const LatticePoint& q1, const Generator& g) const {
  return {g.w, index_.lattice().act(g.w, q1) + g.q};
}

RingElement RingEngine::multiply(const RingElement& a, const RingElement& b) const {
  if (a.ring() != b.ring()) throw std::invalid_argument("mixed coefficient rings");
  RingElement out(a.ring());
  for (const auto& [ga, ca] : a.terms()) {
    for (const auto& [gb, cb] : b.terms()) {
      Generator g;
      if (ga.w == WeylGroup::identity())
        g = star_unit_sector(ga.q, gb);
      else if (gb.w == WeylGroup::identity())
        g = star_unit_sector(gb.q, ga);
      else
        throw NotInImplementedSector(to_string(index_.weyl(), ga) + " * " + to_string(index_.weyl(), gb) +
                                     " has no e-sector factor");
      out.add(g, ca * cb);
    }
  }
  if (out.ring() == CoefficientRing::Z) out.mark_sign_untrusted();
  return out;
}

std::vector<FactorizationRow> RingEngine::r_module_basis_check(const Rational& radius) const {
  const WeylGroup& weyl = index_.weyl();
  const Lattice& lattice = index_.lattice();
  std::vector<FactorizationRow> rows;
  for (const Generator& g : generators(weyl, lattice, radius)) {
    FactorizationRow row;
    row.target = g;
    row.q1 = weyl_action(weyl, lattice, weyl.inverse(g.w), g.q);
    row.ok = star_unit_sector(row.q1, Generator{g.w, lattice.origin()}) == g;
    rows.push_back(std::move(row));
  }
  return rows;
}

LeadingTerm RingEngine::phi_leading(const LatticePoint& q) const {
  const WeylIndex w = index_.chamber_of(q);
  return {q, w, index_.ell_prime(w)};
}

MultiplicativeSet RingEngine::multiplicative_set(const Rational& radius) const {
  const Lattice& lattice = index_.lattice();
  MultiplicativeSet ms;
  for (const LatticePoint& q : lattice.points(radius))
    if (index_.chamber_of(q) == WeylGroup::identity()) ms.generators.push_back(q);

  const std::set<LatticePoint> members(ms.generators.begin(), ms.generators.end());
  const Rational r2 = radius * radius;
  ms.closed_in_window = true;
  for (const LatticePoint& a : ms.generators) {
    for (const LatticePoint& b : ms.generators) {
      const LatticePoint c = a + b;
      if (lattice.norm2(c) <= r2 && !members.count(c)) ms.closed_in_window = false;
    }
  }
  return ms;
}

std::vector<std::optional<LatticePoint>> RingEngine::chamber_witnesses(const std::vector<LatticePoint>& window) const {
  std::vector<std::optional<LatticePoint>> found(index_.weyl().size());
  for (const LatticePoint& q : window) {  // window is in graded lex order
    auto& slot = found[index_.chamber_of(q)];
    if (!slot) slot = q;
  }
  return found;
}

TriangularityCertificate RingEngine::triangularity_certificate(const Rational& radius, unsigned jobs) const {
  const WeylGroup& weyl = index_.weyl();
  const Lattice& lattice = index_.lattice();
  const auto window = lattice.points(radius);
  const auto witnesses = chamber_witnesses(window);
  const auto gens = generators(weyl, lattice, radius);

  std::vector<Rational> ell(weyl.size());
  for (WeylIndex w = 0; w < weyl.size(); ++w) ell[w] = index_.ell_prime(w);

  auto rows = parallel_map(gens.size(), jobs, [&](std::size_t i) -> std::optional<TriangularityRow> {
    const Generator& g = gens[i];
    const auto& witness = witnesses[g.w];
    if (!witness) return std::nullopt;
    TriangularityRow row;
    row.target = g;
    row.witness = *witness;
    row.s = weyl_action(weyl, lattice, weyl.inverse(g.w), g.q - *witness);
    row.filtration = ell[g.w];
    row.verified = index_.chamber_of(*witness) == g.w && star_unit_sector(row.s, Generator{g.w, *witness}) == g;
    return row;
  });

  TriangularityCertificate cert;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (rows[i])
      cert.rows.push_back(std::move(*rows[i]));
    else
      cert.missing.push_back(gens[i]);
  }
  std::stable_sort(cert.rows.begin(), cert.rows.end(), [](const TriangularityRow& a, const TriangularityRow& b) {
    return std::tie(a.filtration, a.target) < std::tie(b.filtration, b.target);
  });

  std::set<Generator> leading;
  cert.leading_matches_classify = true;
  for (const LatticePoint& q : window) {
    const LeadingTerm lt = phi_leading(q);
    leading.insert(Generator{lt.w_q, q});
    for (WeylIndex w = 0; w < weyl.size(); ++w) {
      const bool bad = index_.classify(q, w) == QuiltClass::Bad;
      if (bad != (w == lt.w_q)) cert.leading_matches_classify = false;
    }
  }
  cert.leading_injective = leading.size() == window.size();
  return cert;
}

FiniteGenerationWitness RingEngine::finitely_generated_witness(const Rational& radius) const {
  const WeylGroup& weyl = index_.weyl();
  const Lattice& lattice = index_.lattice();
  const auto window = lattice.points(radius);
  const auto witnesses = chamber_witnesses(window);

  std::vector<std::string> missing;
  for (WeylIndex w = 0; w < weyl.size(); ++w)
    if (!witnesses[w]) missing.push_back(weyl.label(w));
  if (!missing.empty())
    throw WindowTooSmall(std::to_string(missing.size()) + " Weyl element(s) have no chamber witness in the window",
                         std::move(missing));

  std::set<Generator> gens;
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    gens.insert({WeylGroup::identity(), lattice.basis_point(i, 1)});
    gens.insert({WeylGroup::identity(), lattice.basis_point(i, -1)});
  }
  for (WeylIndex w = 0; w < weyl.size(); ++w) gens.insert({w, *witnesses[w]});

  FiniteGenerationWitness out;
  out.generators.assign(gens.begin(), gens.end());
  for (const Generator& target : generators(weyl, lattice, radius)) {
    ++out.targets;
    // Exponent of the unit-sector factor, then one basis step at a time.
    const LatticePoint s = weyl_action(weyl, lattice, weyl.inverse(target.w), target.q - *witnesses[target.w]);
    Generator cur{target.w, *witnesses[target.w]};
    for (std::size_t i = 0; i < s.coords.size(); ++i) {
      const std::int64_t sign = s.coords[i] < 0 ? -1 : 1;
      const LatticePoint step = lattice.basis_point(i, sign);
      if (!gens.count({WeylGroup::identity(), step})) throw InvariantViolation("basis step missing from witness");
      for (std::int64_t k = 0; k < std::llabs(s.coords[i]); ++k) {
        cur = star_unit_sector(step, cur);
        ++out.star_steps;
      }
    }
    if (cur == target) ++out.reached;
  }
  return out;
}

std::vector<Generator> RingEngine::reachable_closure(const std::vector<Generator>& seeds, const Rational& radius) const {
  const Lattice& lattice = index_.lattice();
  const Rational r2 = radius * radius;
  std::set<Generator> reached;
  for (const Generator& g : seeds)
    if (lattice.norm2(g.q) <= r2) reached.insert(g);

  // Fixed point: every reached e-sector element acts on every reached generator.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<LatticePoint> units;
    for (const Generator& g : reached)
      if (g.w == WeylGroup::identity()) units.push_back(g.q);
    const std::vector<Generator> current(reached.begin(), reached.end());
    for (const LatticePoint& u : units) {
      for (const Generator& g : current) {
        const Generator h = star_unit_sector(u, g);
        if (lattice.norm2(h.q) <= r2 && reached.insert(h).second) grew = true;
      }
    }
  }
  return {reached.begin(), reached.end()};
}

}  // namespace symflag
