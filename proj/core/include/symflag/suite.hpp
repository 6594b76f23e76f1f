#pragma once

// Drivers that turn a catalog entry plus parameters into Reports: the full
// verification suite and the single-operation views used by the CLI.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symflag/catalog.hpp"
#include "symflag/index.hpp"
#include "symflag/report.hpp"
#include "symflag/ring.hpp"

namespace symflag {

struct SuiteOptions {
  std::optional<Rational> tau;      // default: default_tau
  std::optional<Rational> epsilon;  // default: canonical_epsilon
  Rational radius = 3;
  ShiftMode mode = ShiftMode::SmallInChamber;
  CoefficientRing ring = CoefficientRing::Z2;
  unsigned jobs = 1;
  bool triangle = false;
  /// (q, Weyl word) pairs for the triangle step; empty means (b_1, w0).
  std::vector<std::pair<LatticePoint, std::string>> triangle_targets;
  int quad_nodes = 256;
  double tol = 1e-9;
};

/// Entry, monotone data and validated shift, wired into the engines.
class Session {
 public:
  /// Throws the first failing Error (NotDominant, NotRegular, FloorBoundary, ...).
  Session(const CatalogEntry& entry, const SuiteOptions& options);

  const EntryModel& model() const { return *model_; }
  const WeylGroup& weyl() const { return model_->weyl(); }
  const Lattice& lattice() const { return model_->lattice(); }
  const MonotoneData& monotone() const { return md_; }
  const Rational& epsilon() const { return epsilon_; }
  const GenericShift& shift() const { return *shift_; }
  const IndexEngine& index() const { return *index_; }
  const RingEngine& ring() const { return *ring_; }
  const SuiteOptions& options() const { return options_; }

  /// Common report parameters: tau, epsilon, a, mode, radius, ring.
  void describe(Report& report) const;

 private:
  SuiteOptions options_;
  std::unique_ptr<EntryModel> model_;
  MonotoneData md_;
  Rational epsilon_;
  std::unique_ptr<GenericShift> shift_;
  std::unique_ptr<IndexEngine> index_;
  std::unique_ptr<RingEngine> ring_;
};

/// Runs every check in order and stops at the first hard failure.
/// WindowTooSmall is recorded as an advisory.
Report run_suite(const CatalogEntry& entry, const SuiteOptions& options);

Report info_report(const std::vector<CatalogEntry>& entries, const std::optional<std::string>& name);

/// Without q: the classification and index of every (q, w) in the window.
/// With q (and optionally w / q_out): a single datum.
Report index_report(const Session& s, const std::optional<LatticePoint>& q, const std::optional<std::string>& w,
                    const std::optional<LatticePoint>& q_out);

/// ell' and Morse index per Weyl element, leading terms per chord.
Report filtration_report(const Session& s);

/// y_{w1,q1} * y_{w,q}.
Report product_report(const Session& s, const LatticePoint& q1, const std::string& w1, const LatticePoint& q,
                      const std::string& w);

/// Triangularity certificate and finite-generation witness.
Report certify_report(const Session& s);

/// Exact triple and plane model for (q, w), then the numerical triangle map.
Report triangle_report(const Session& s, const LatticePoint& q, const std::string& w);

}  // namespace symflag
