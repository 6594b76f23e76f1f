#include "symflag/suite.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "symflag/errors.hpp"
#include "symflag/parallel.hpp"
#include "symflag/triangle.hpp"

namespace symflag {

namespace {

constexpr double kCornerTol = 1e-8;
constexpr double kBoundaryTol = 1e-6;
constexpr double kSymmetryTol = 1e-8;
constexpr double kConformalityTol = 1e-3;

CheckStatus verdict(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

std::string str(const Integer& v) { return v.get_str(); }
template <typename T>
std::string str(const T& v) {
  return std::to_string(v);
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string generator_name(const WeylGroup& weyl, const Generator& g) { return to_string(weyl, g); }

WeylIndex resolve(const WeylGroup& weyl, const std::string& word) {
  const WeylIndex w = weyl.from_word(parse_word(word));
  return w;
}

/// Thrown internally to stop the suite after a hard failure has been recorded.
struct Abort {};

/// Shared triangle step: exact triple, plane model, then the numerical map.
void triangle_checks(const IndexEngine& index, const MonotoneData& md, const LatticePoint& q, WeylIndex w,
                     const TriangleMap& map, double tol, Report& rep, Table& table) {
  const WeylGroup& weyl = index.weyl();
  const std::string tag = "[" + to_string(q) + "," + weyl.label(w) + "]";
  auto row = [&](const std::string& metric, const std::string& value) {
    table.rows.push_back({to_string(q), weyl.label(w), metric, value});
  };

  const AffineLagrangianTriple t = build_triple(index, q, w, md);
  const PlaneModel pm = plane_model(t);
  row("p12", to_string(t.p12));
  row("p23", to_string(t.p23));
  row("p13", to_string(t.p13));
  const bool bad = index.classify(q, w) == QuiltClass::Bad;
  const bool in_chamber = segment_in_closed_chamber(index, q, w, md);
  row("class", to_string(index.classify(q, w)));
  row("segment_in_closed_chamber", in_chamber ? "true" : "false");
  row("plane_vertices", "(" + to_string(pm.vertices[0][0]) + "," + to_string(pm.vertices[0][1]) + ") (" +
                            to_string(pm.vertices[1][0]) + "," + to_string(pm.vertices[1][1]) + ") (" +
                            to_string(pm.vertices[2][0]) + "," + to_string(pm.vertices[2][1]) + ")");
  rep.check("triangle_exact" + tag, verdict(bad == in_chamber),
            "triple transverse and isotropic; plane model lines x=0, x+y=1, y=0; vertices (0,1),(1,0),(0,0)");

  const TriangleResiduals& res = map.residuals();
  const HullReport hull = verify_hull(map, 500, tol);
  row("quad_nodes", std::to_string(map.nodes()));
  row("corner_residual", format_decimal(res.corner));
  row("boundary_residual", format_decimal(res.boundary));
  row("conformality_residual", format_decimal(res.conformality));
  row("symmetry_residual", format_decimal(res.symmetry));
  row("quadrature_residual", format_decimal(res.quadrature));
  row("hull_max_violation", format_decimal(hull.max_violation));
  row("center_x", format_decimal(hull.center.x));
  row("center_y", format_decimal(hull.center.y));
  rep.check("triangle_corners" + tag, verdict(res.corner <= kCornerTol),
            "max corner error " + format_decimal(res.corner) + " <= " + format_decimal(kCornerTol));
  rep.check("triangle_boundary" + tag, verdict(res.boundary < kBoundaryTol),
            "max line deviation over 500 boundary samples " + format_decimal(res.boundary) + " < " +
                format_decimal(kBoundaryTol));
  rep.check("triangle_hull" + tag, verdict(hull.passed()),
            "max violation over 500 interior samples " + format_decimal(hull.max_violation) + " <= " +
                format_decimal(tol) + (hull.center_interior ? "; center interior" : "; center NOT interior"));
  rep.check("triangle_conformality" + tag, verdict(res.conformality < kConformalityTol),
            "discrete Cauchy-Riemann residual " + format_decimal(res.conformality));
  rep.check("triangle_symmetry" + tag, verdict(res.symmetry <= kSymmetryTol),
            "x<->y reflection residual " + format_decimal(res.symmetry));
}

Table triangle_table() { return Table{{"q", "w", "metric", "value"}, {}}; }

}  // namespace

// ---------------------------------------------------------------------------

Session::Session(const CatalogEntry& entry, const SuiteOptions& options) : options_(options) {
  model_ = std::make_unique<EntryModel>(entry);
  const RootSystem& rs = model_->roots();
  md_ = monotone_data(rs, options.tau ? *options.tau : default_tau(rs));
  epsilon_ = options.epsilon ? *options.epsilon : canonical_epsilon(weyl(), lattice(), options.radius);
  shift_ = std::make_unique<GenericShift>(
      validate_generic(weyl(), lattice(), epsilon_ * rho_coroot(rs), options.mode, options.radius));
  index_ = std::make_unique<IndexEngine>(weyl(), lattice(), *shift_);
  ring_ = std::make_unique<RingEngine>(*index_, options.ring);
}

void Session::describe(Report& report) const {
  report.param("tau", to_string(md_.tau));
  report.param("epsilon", to_string(epsilon_));
  report.param("a", to_string(shift_->a()));
  report.param("mode", to_string(shift_->mode()));
  report.param("radius", to_string(options_.radius));
  report.param("ring", to_string(options_.ring));
}

// ---------------------------------------------------------------------------

Report run_suite(const CatalogEntry& entry, const SuiteOptions& opt) {
  Report rep;
  rep.entry = entry.name;
  rep.operation = "verify";
  const unsigned jobs = std::max(1u, opt.jobs);

  std::string tau_s = "-", eps_s = "-", a_s = "-";
  std::unique_ptr<EntryModel> model;
  MonotoneData md;
  std::unique_ptr<GenericShift> shift;
  std::unique_ptr<IndexEngine> index;
  std::unique_ptr<RingEngine> ring;
  std::vector<LatticePoint> window;

  auto step = [&](const std::string& name, auto&& fn) {
    std::pair<CheckStatus, std::string> out;
    try {
      out = fn();
    } catch (const WindowTooSmall& e) {
      out = {CheckStatus::Advisory, e.what()};
    } catch (const std::exception& e) {
      out = {CheckStatus::Fail, e.what()};
    }
    rep.check(name, out.first, out.second);
    if (out.first == CheckStatus::Fail) throw Abort{};
  };

  try {
    step("catalog_entry", [&] {
      model = std::make_unique<EntryModel>(entry);
      const RootSystem& rs = model->roots();
      return std::pair{CheckStatus::Pass, "rank=" + str(rs.rank()) + " |W|=" + str(model->weyl().size()) +
                                              " D=" + str(rs.positive_multiplicity_sum()) +
                                              " dim=" + str(entry.space_dim)};
    });
    const WeylGroup& weyl = model->weyl();
    const Lattice& lattice = model->lattice();
    const RootSystem& rs = weyl.roots();

    step("monotone_data", [&] {
      md = monotone_data(rs, opt.tau ? *opt.tau : default_tau(rs));
      tau_s = to_string(md.tau);
      const bool ok = monotone_identity_holds(rs, md, lattice.basis());
      return std::pair{verdict(ok), "tau=" + tau_s + " X0=" + to_string(md.x0) +
                                        (ok ? "; identity exact on lattice basis" : "; identity FAILS on lattice basis")};
    });

    step("validate_generic", [&] {
      const Rational eps = opt.epsilon ? *opt.epsilon : canonical_epsilon(weyl, lattice, opt.radius);
      eps_s = to_string(eps);
      const Vector a = eps * rho_coroot(rs);
      a_s = to_string(a);
      shift = std::make_unique<GenericShift>(validate_generic(weyl, lattice, a, opt.mode, opt.radius));
      index = std::make_unique<IndexEngine>(weyl, lattice, *shift);
      ring = std::make_unique<RingEngine>(*index, opt.ring);
      return std::pair{CheckStatus::Pass, "epsilon=" + eps_s + " a=" + a_s + " mode=" + to_string(opt.mode) +
                                              " radius=" + to_string(opt.radius)};
    });
    const bool small = opt.mode == ShiftMode::SmallInChamber;

    step("generator_counts", [&] {
      window = lattice.points(opt.radius);
      const auto gens = generators(weyl, lattice, opt.radius);
      const auto ch = chords(lattice, opt.radius);
      const bool ok = gens.size() == weyl.size() * window.size() && ch.size() == window.size();
      return std::pair{verdict(ok), "|W|=" + str(weyl.size()) + " chords=" + str(ch.size()) +
                                        " generators=" + str(gens.size())};
    });

    step("bad_ugly_sweep", [&] {
      struct Tally {
        std::size_t bad = 0, ugly = 0;
        std::string failure;
      };
      const auto tallies = parallel_map(window.size(), jobs, [&](std::size_t i) {
        Tally t;
        const LatticePoint& q = window[i];
        for (WeylIndex w = 0; w < weyl.size() && t.failure.empty(); ++w) {
          const Integer idx = index->quilt_index({q, w, q});
          const bool bad = index->classify(q, w) == QuiltClass::Bad;
          if (bad != segment_in_closed_chamber(*index, q, w, md))
            t.failure = "segment test disagrees with classify at q=" + to_string(q) + " w=" + weyl.label(w);
          if (bad) {
            ++t.bad;
            if (idx != 0) t.failure = "bad datum with index " + str(idx) + " at q=" + to_string(q) + " w=" + weyl.label(w);
          } else {
            ++t.ugly;
            const Integer u = index->ugly_index(q, w);
            if (u < 1 || u != idx)
              t.failure = "ugly index " + str(u) + " vs quilt index " + str(idx) + " at q=" + to_string(q) +
                          " w=" + weyl.label(w);
          }
        }
        return t;
      });
      Tally total;
      for (const Tally& t : tallies) {
        total.bad += t.bad;
        total.ugly += t.ugly;
        if (total.failure.empty()) total.failure = t.failure;
      }
      if (!total.failure.empty()) return std::pair{CheckStatus::Fail, total.failure};
      return std::pair{CheckStatus::Pass, "bad=" + str(total.bad) + " (index 0) ugly=" + str(total.ugly) +
                                              " (index >= 1, equal to quilt index)"};
    });

    step("ell_prime_minimum", [&] {
      Table t{{"w", "length", "ell_prime"}, {}};
      const Rational at_e = index->ell_prime(WeylGroup::identity());
      std::size_t not_above = 0;
      for (WeylIndex w = 0; w < weyl.size(); ++w) {
        const Rational v = index->ell_prime(w);
        t.rows.push_back({weyl.label(w), str(weyl.length(w)), to_string(v)});
        if (w != WeylGroup::identity() && v <= at_e) ++not_above;
      }
      rep.sections.emplace_back("ell_prime", std::move(t));
      const std::string detail = "ell'(e)=" + to_string(at_e) + "; " + str(not_above) + " other element(s) at or below it";
      if (!small) return std::pair{CheckStatus::Advisory, detail + " (regular_only shift: no minimum required)"};
      return std::pair{verdict(not_above == 0), detail};
    });

    step("end2_sweep", [&] {
      const auto gens = generators(weyl, lattice, opt.radius);
      const auto terms = parallel_map(gens.size(), jobs, [&](std::size_t i) {
        return index->end_terms({gens[i].q, gens[i].w}, md);
      });
      struct Tally {
        std::size_t antecedent = 0, failures = 0;
      };
      const auto tallies = parallel_map(gens.size(), jobs, [&](std::size_t i) {
        Tally t;
        for (std::size_t j = 0; j < gens.size(); ++j) {
          if (!index->end2_implication_check(terms[i], terms[j], md)) ++t.failures;
          if (terms[i].floor_sum == terms[j].floor_sum && terms[i].pairing > terms[j].pairing) ++t.antecedent;
        }
        return t;
      });
      Tally total;
      for (const Tally& t : tallies) {
        total.antecedent += t.antecedent;
        total.failures += t.failures;
      }
      const std::size_t pairs = gens.size() * gens.size();
      return std::pair{verdict(total.failures == 0), "pairs=" + str(pairs) + " antecedent_true=" +
                                                         str(total.antecedent) + " failures=" + str(total.failures)};
    });

    step("area_maslov", [&] {
      std::size_t bad = 0;
      for (const LatticePoint& q : window)
        if (capping_area(rs, lattice, q, md) != md.tau * Rational(capping_maslov(rs, lattice, q))) ++bad;
      return std::pair{verdict(bad == 0), "area = tau * maslov on " + str(window.size()) + " classes; mismatches=" + str(bad)};
    });

    step("parity", [&] {
      const ParityReport p = index->parity_report(false);
      bool ok = true;
      if (p.all_multiplicities_even) ok = p.odd_count == 0 && p.differential_must_vanish == "true";
      std::string detail = "even=" + str(p.even_count) + " odd=" + str(p.odd_count) +
                           " differential_must_vanish=" + p.differential_must_vanish + " reason=" + p.reason;
      if (!p.all_multiplicities_even && opt.ring == CoefficientRing::Z2)
        detail += "; over z2 coefficients the differential vanishes independently of parity";
      return std::pair{verdict(ok), detail};
    });

    step("poincare", [&] {
      if (!small) return std::pair{CheckStatus::Advisory, std::string("requires a small_in_chamber shift")};
      const auto c = index->poincare_polynomial();
      const int d = rs.positive_multiplicity_sum();
      Table t{{"k", "c_k"}, {}};
      std::int64_t sum = 0;
      std::vector<std::string> terms;
      for (std::size_t k = 0; k < c.size(); ++k) {
        t.rows.push_back({str(k), str(c[k])});
        sum += c[k];
        if (c[k] != 0) terms.push_back(str(c[k]) + "t^" + str(k));
      }
      rep.sections.emplace_back("poincare", std::move(t));
      bool ok = c.size() == static_cast<std::size_t>(d) + 1 && c.front() == 1 && c.back() == 1 &&
                sum == static_cast<std::int64_t>(weyl.size());
      for (std::size_t k = 0; k < c.size(); ++k) ok = ok && c[k] == c[c.size() - 1 - k];
      for (WeylIndex w = 0; w < weyl.size(); ++w)
        ok = ok && index->morse_index(weyl.compose(weyl.longest(), w)) == d - index->morse_index(w);
      return std::pair{verdict(ok), join(terms, " + ") + "; palindromic of degree " + str(d) + ", sum " + str(sum)};
    });

    step("r_module_basis", [&] {
      const auto rows = ring->r_module_basis_check(opt.radius);
      const bool ok = std::all_of(rows.begin(), rows.end(), [](const FactorizationRow& r) { return r.ok; });
      return std::pair{verdict(ok), str(rows.size()) + " generators factor as y(e,w^-1 q) * y(w,0)"};
    });

    step("multiplicative_set", [&] {
      const MultiplicativeSet ms = ring->multiplicative_set(opt.radius);
      const std::string detail = str(ms.generators.size()) + " chords with q+a in C; closed under addition: " +
                                 (ms.closed_in_window ? "yes" : "no");
      if (!small && !ms.closed_in_window) return std::pair{CheckStatus::Advisory, detail};
      return std::pair{verdict(ms.closed_in_window), detail};
    });

    step("triangularity", [&] {
      const TriangularityCertificate cert = ring->triangularity_certificate(opt.radius, jobs);
      Table t{{"w", "q", "witness", "s", "filtration", "verified"}, {}};
      for (const TriangularityRow& r : cert.rows)
        t.rows.push_back({weyl.label(r.target.w), to_string(r.target.q), to_string(r.witness), to_string(r.s),
                          to_string(r.filtration), r.verified ? "true" : "false"});
      rep.sections.emplace_back("certificate", std::move(t));
      std::string detail = str(cert.rows.size()) + " rows certified; leading terms injective: " +
                           (cert.leading_injective ? "yes" : "no") + "; leading terms match classify: " +
                           (cert.leading_matches_classify ? "yes" : "no");
      if (!cert.passed()) return std::pair{CheckStatus::Fail, detail};
      if (!cert.complete()) {
        std::vector<std::string> names;
        for (const Generator& g : cert.missing) names.push_back(generator_name(weyl, g));
        return std::pair{CheckStatus::Advisory,
                         "WindowTooSmall: " + detail + "; no witness for " + join(names, " ")};
      }
      return std::pair{CheckStatus::Pass, detail};
    });

    step("finite_generation", [&] {
      const FiniteGenerationWitness fg = ring->finitely_generated_witness(opt.radius);
      Table t{{"generator"}, {}};
      for (const Generator& g : fg.generators) t.rows.push_back({generator_name(weyl, g)});
      rep.sections.emplace_back("fg_witness", std::move(t));
      return std::pair{verdict(fg.all_reachable()), str(fg.generators.size()) + " generators reach " + str(fg.reached) +
                                                        "/" + str(fg.targets) + " window generators in " +
                                                        str(fg.star_steps) + " star steps"};
    });

    if (opt.triangle) {
      std::vector<std::pair<LatticePoint, WeylIndex>> targets;
      for (const auto& [q, word] : opt.triangle_targets) targets.emplace_back(q, resolve(weyl, word));
      if (targets.empty()) targets.emplace_back(lattice.basis_point(0), weyl.longest());
      Table table = triangle_table();
      std::unique_ptr<TriangleMap> map;
      step("triangle_solve", [&] {
        map = std::make_unique<TriangleMap>(opt.quad_nodes);
        return std::pair{CheckStatus::Pass, "nodes=" + str(opt.quad_nodes) + " quadrature residual " +
                                                format_decimal(map->residuals().quadrature)};
      });
      for (const auto& [q, w] : targets) {
        step("triangle_model[" + to_string(q) + "," + weyl.label(w) + "]", [&] {
          triangle_checks(*index, md, q, w, *map, opt.tol, rep, table);
          return std::pair{CheckStatus::Pass, std::string("solved")};
        });
        for (const Check& c : rep.checks)
          if (c.status == CheckStatus::Fail) throw Abort{};
      }
      rep.sections.emplace_back("triangle", std::move(table));
    }
  } catch (const Abort&) {
  }

  rep.param("tau", tau_s);
  rep.param("epsilon", eps_s);
  rep.param("a", a_s);
  rep.param("mode", to_string(opt.mode));
  rep.param("radius", to_string(opt.radius));
  rep.param("ring", to_string(opt.ring));
  if (opt.triangle) {
    rep.param("quad_nodes", std::to_string(opt.quad_nodes));
    rep.param("tol", format_decimal(opt.tol));
  }
  rep.table.columns = {"check", "status", "detail"};
  for (const Check& c : rep.checks) rep.table.rows.push_back({c.name, to_string(c.status), c.detail});
  return rep;
}

// ---------------------------------------------------------------------------

Report info_report(const std::vector<CatalogEntry>& entries, const std::optional<std::string>& name) {
  Report rep;
  rep.entry = name ? *name : "*";
  rep.operation = "info";
  rep.table.columns = {"name",     "kind",      "space",           "cartan_type", "rank",
                       "weyl_order", "roots",   "positive_mult_sum", "space_dim", "multiplicities",
                       "lattice_basis", "base_point"};
  for (const CatalogEntry& e : entries) {
    if (name && e.name != *name) continue;
    try {
      const EntryModel m(e);
      std::vector<std::string> mult, basis;
      for (const MultiplicityRule& r : e.multiplicities) mult.push_back("|a|^2=" + to_string(r.norm2) + ":m=" + str(r.m));
      for (const Vector& b : e.lattice_basis) basis.push_back(to_string(b));
      rep.table.rows.push_back({e.name, e.kind, e.space, e.cartan_type, str(m.roots().rank()), str(m.weyl().size()),
                                str(m.roots().size()), str(m.roots().positive_multiplicity_sum()), str(e.space_dim),
                                join(mult, ";"), join(basis, ";"), to_string(e.base_point)});
      rep.check("entry[" + e.name + "]", CheckStatus::Pass, e.notes);
    } catch (const std::exception& ex) {
      rep.check("entry[" + e.name + "]", CheckStatus::Fail, ex.what());
    }
  }
  if (name && rep.checks.empty()) find_entry(entries, *name);
  return rep;
}

Report index_report(const Session& s, const std::optional<LatticePoint>& q, const std::optional<std::string>& w,
                    const std::optional<LatticePoint>& q_out) {
  const WeylGroup& weyl = s.weyl();
  const IndexEngine& index = s.index();
  Report rep;
  rep.entry = s.model().entry().name;
  rep.operation = "index";
  s.describe(rep);

  if (!q) {
    rep.table.columns = {"q", "w", "class", "quilt_index", "ugly_index", "segment_in_closed_chamber"};
    std::size_t failures = 0;
    for (const LatticePoint& p : s.lattice().points(s.options().radius)) {
      for (WeylIndex v = 0; v < weyl.size(); ++v) {
        const QuiltClass c = index.classify(p, v);
        const Integer idx = index.quilt_index({p, v, p});
        std::string ugly = "-";
        if (c == QuiltClass::Ugly) {
          const Integer u = index.ugly_index(p, v);
          ugly = str(u);
          if (u != idx || u < 1) ++failures;
        } else if (idx != 0) {
          ++failures;
        }
        const bool seg = segment_in_closed_chamber(index, p, v, s.monotone());
        if (seg != (c == QuiltClass::Bad)) ++failures;
        rep.table.rows.push_back({to_string(p), weyl.label(v), to_string(c), str(idx), ugly, seg ? "true" : "false"});
      }
    }
    rep.check("bad_zero_ugly_positive", verdict(failures == 0), str(rep.table.rows.size()) + " data, " + str(failures) + " failures");
    return rep;
  }

  const WeylIndex w_out = w ? resolve(weyl, *w) : index.chamber_of(*q);
  const LatticePoint qo = q_out ? *q_out : *q;
  rep.param("q", to_string(*q));
  rep.param("w_out", weyl.label(w_out));
  rep.param("q_out", to_string(qo));
  rep.table.columns = {"q_in", "w_in", "q_out", "w_out", "class", "quilt_index", "ugly_index"};
  const Integer idx = index.quilt_index({*q, w_out, qo});
  std::string cls = "-", ugly = "-";
  if (qo == *q) {
    const QuiltClass c = index.classify(*q, w_out);
    cls = to_string(c);
    if (c == QuiltClass::Ugly) ugly = str(index.ugly_index(*q, w_out));
    const bool ok = c == QuiltClass::Bad ? idx == 0 : ugly == str(idx);
    rep.check("index_consistency", verdict(ok), c == QuiltClass::Bad ? "bad datum has index 0" : "ugly index equals quilt index");
  }
  rep.table.rows.push_back({to_string(*q), weyl.label(index.chamber_of(*q)), to_string(qo), weyl.label(w_out), cls,
                            str(idx), ugly});
  return rep;
}

Report filtration_report(const Session& s) {
  const WeylGroup& weyl = s.weyl();
  const IndexEngine& index = s.index();
  const bool small = s.shift().mode() == ShiftMode::SmallInChamber;
  Report rep;
  rep.entry = s.model().entry().name;
  rep.operation = "filtration";
  s.describe(rep);
  rep.table.columns = {"w", "length", "ell_prime", "morse_index"};
  const Rational at_e = index.ell_prime(WeylGroup::identity());
  bool unique_min = true;
  for (WeylIndex w = 0; w < weyl.size(); ++w) {
    const Rational v = index.ell_prime(w);
    if (w != WeylGroup::identity() && v <= at_e) unique_min = false;
    rep.table.rows.push_back({weyl.label(w), str(weyl.length(w)), to_string(v), small ? str(index.morse_index(w)) : "-"});
  }
  rep.check("ell_prime_minimum", small ? verdict(unique_min) : CheckStatus::Advisory,
            unique_min ? "unique minimum at e" : "minimum at e is not unique");

  Table lead{{"q", "w_q", "filtration"}, {}};
  for (const LatticePoint& q : s.lattice().points(s.options().radius)) {
    const LeadingTerm lt = s.ring().phi_leading(q);
    lead.rows.push_back({to_string(q), weyl.label(lt.w_q), to_string(lt.filtration)});
  }
  rep.sections.emplace_back("leading_terms", std::move(lead));
  return rep;
}

Report product_report(const Session& s, const LatticePoint& q1, const std::string& w1, const LatticePoint& q,
                      const std::string& w) {
  const WeylGroup& weyl = s.weyl();
  const CoefficientRing cr = s.ring().ring();
  const Generator a{resolve(weyl, w1), q1};
  const Generator b{resolve(weyl, w), q};
  Report rep;
  rep.entry = s.model().entry().name;
  rep.operation = "product";
  s.describe(rep);
  rep.param("left", to_string(weyl, a));
  rep.param("right", to_string(weyl, b));
  const RingElement prod = s.ring().multiply(RingElement::generator(a, cr), RingElement::generator(b, cr));
  rep.table.columns = {"generator", "coefficient", "sign_trusted"};
  for (const auto& [g, c] : prod.terms())
    rep.table.rows.push_back({to_string(weyl, g), c.get_str(), prod.sign_trusted() ? "true" : "false"});
  rep.check("unit_sector", CheckStatus::Pass, cr == CoefficientRing::Z ? "sign not determined over z" : "exact over z2");
  return rep;
}

Report certify_report(const Session& s) {
  const WeylGroup& weyl = s.weyl();
  Report rep;
  rep.entry = s.model().entry().name;
  rep.operation = "certify";
  s.describe(rep);
  const TriangularityCertificate cert = s.ring().triangularity_certificate(s.options().radius, s.options().jobs);
  rep.table.columns = {"w", "q", "witness", "s", "filtration", "verified"};
  for (const TriangularityRow& r : cert.rows)
    rep.table.rows.push_back({weyl.label(r.target.w), to_string(r.target.q), to_string(r.witness), to_string(r.s),
                              to_string(r.filtration), r.verified ? "true" : "false"});
  std::vector<std::string> missing;
  for (const Generator& g : cert.missing) missing.push_back(to_string(weyl, g));
  const std::string detail = str(cert.rows.size()) + " rows; leading terms injective: " +
                             (cert.leading_injective ? "yes" : "no");
  if (!cert.passed())
    rep.check("triangularity", CheckStatus::Fail, detail);
  else if (!cert.complete())
    rep.check("triangularity", CheckStatus::Advisory, "WindowTooSmall: no witness for " + join(missing, " "));
  else
    rep.check("triangularity", CheckStatus::Pass, detail);

  try {
    const FiniteGenerationWitness fg = s.ring().finitely_generated_witness(s.options().radius);
    Table t{{"generator"}, {}};
    for (const Generator& g : fg.generators) t.rows.push_back({to_string(weyl, g)});
    rep.sections.emplace_back("fg_witness", std::move(t));
    rep.check("finite_generation", verdict(fg.all_reachable()),
              str(fg.reached) + "/" + str(fg.targets) + " window generators reached");
  } catch (const WindowTooSmall& e) {
    rep.check("finite_generation", CheckStatus::Advisory, e.what());
  }
  return rep;
}

Report triangle_report(const Session& s, const LatticePoint& q, const std::string& w) {
  const WeylIndex wi = resolve(s.weyl(), w);
  Report rep;
  rep.entry = s.model().entry().name;
  rep.operation = "triangle";
  s.describe(rep);
  rep.param("q", to_string(q));
  rep.param("w", s.weyl().label(wi));
  rep.param("quad_nodes", std::to_string(s.options().quad_nodes));
  rep.param("tol", format_decimal(s.options().tol));
  const TriangleMap map(s.options().quad_nodes);
  Table table = triangle_table();
  triangle_checks(s.index(), s.monotone(), q, wi, map, s.options().tol, rep, table);
  rep.table = std::move(table);
  return rep;
}

}  // namespace symflag
