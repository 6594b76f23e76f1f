// symflag: command line front end for the catalog, index, ring and triangle checks.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "symflag/catalog.hpp"
#include "symflag/errors.hpp"
#include "symflag/report.hpp"
#include "symflag/suite.hpp"

namespace {

struct Args {
  std::string pair = "group-A1";
  std::string catalog;
  std::string tau, epsilon;
  std::string radius = "3";
  std::string mode = "small_in_chamber";
  std::string format = "json";
  std::string ring = "z2";
  double tol = 1e-9;
  int quad_nodes = 256;
  unsigned jobs = 1;
  bool triangle = false;
  std::string q, w, q1, w1 = "e", q_out;
};

symflag::SuiteOptions suite_options(const Args& a) {
  symflag::SuiteOptions o;
  if (!a.tau.empty()) o.tau = symflag::parse_rational(a.tau);
  if (!a.epsilon.empty()) o.epsilon = symflag::parse_rational(a.epsilon);
  o.radius = symflag::parse_rational(a.radius);
  o.mode = symflag::parse_shift_mode(a.mode);
  o.ring = symflag::parse_coefficient_ring(a.ring);
  o.jobs = a.jobs;
  o.triangle = a.triangle;
  o.quad_nodes = a.quad_nodes;
  o.tol = a.tol;
  if (!a.q.empty()) o.triangle_targets.emplace_back(symflag::parse_lattice_point(a.q), a.w.empty() ? "e" : a.w);
  return o;
}

std::optional<symflag::LatticePoint> point_arg(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return symflag::parse_lattice_point(s);
}

std::optional<std::string> word_arg(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

std::string require(const std::string& value, const char* flag) {
  if (value.empty()) throw CLI::ValidationError(std::string(flag) + " is required for this command");
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact index, filtration and localization checks for compact symmetric spaces"};
  app.require_subcommand(1);
  app.fallthrough();

  Args a;
  app.add_option("--pair", a.pair, "Catalog entry name")->capture_default_str();
  app.add_option("--catalog", a.catalog, "Catalog file (default: built-in entries)");
  app.add_option("--tau", a.tau, "Monotonicity constant (rational; default normalizes min alpha(X0) = 1)");
  app.add_option("--epsilon", a.epsilon, "Shift a = epsilon * rho_coroot (default: canonical epsilon)");
  app.add_option("--radius", a.radius, "Window radius (rational)")->capture_default_str();
  app.add_option("--mode", a.mode, "Shift mode")
      ->check(CLI::IsMember({"small_in_chamber", "regular_only"}))
      ->capture_default_str();
  app.add_option("--format", a.format, "Output format")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();
  app.add_option("--ring", a.ring, "Coefficient ring")->check(CLI::IsMember({"z2", "z"}))->capture_default_str();
  app.add_option("--tol", a.tol, "Hull tolerance for the triangle map")->capture_default_str();
  app.add_option("--quad-nodes", a.quad_nodes, "Quadrature nodes for the triangle map")
      ->check(CLI::Range(16, 1 << 14))
      ->capture_default_str();
  app.add_option("--jobs", a.jobs, "Worker threads for sweeps")->check(CLI::Range(1u, 1024u))->capture_default_str();

  auto* info = app.add_subcommand("info", "List catalog entries");
  auto* verify = app.add_subcommand("verify", "Run the full check suite on one entry");
  verify->add_flag("--triangle,--quilt", a.triangle, "Also solve the triangle model (default target q = b1, w = w0)");
  verify->add_option("--q", a.q, "Triangle target lattice point, e.g. [1,0]");
  verify->add_option("--w", a.w, "Triangle target Weyl word, e.g. s1s2");
  auto* index = app.add_subcommand("index", "Quilt indices: one datum, or the whole window");
  index->add_option("--q", a.q, "Input lattice point");
  index->add_option("--w", a.w, "Output Weyl word (default: chamber of q + a)");
  index->add_option("--q-out", a.q_out, "Output lattice point (default: q)");
  auto* filtration = app.add_subcommand("filtration", "ell' filtration, Morse indices and leading terms");
  auto* product = app.add_subcommand("product", "Unit-sector product y(w1,q1) * y(w,q)");
  product->add_option("--q1", a.q1, "Left factor lattice point")->required();
  product->add_option("--w1", a.w1, "Left factor Weyl word")->capture_default_str();
  product->add_option("--q", a.q, "Right factor lattice point")->required();
  product->add_option("--w", a.w, "Right factor Weyl word")->required();
  auto* certify = app.add_subcommand("certify", "Triangularity certificate and finite-generation witness");
  auto* triangle = app.add_subcommand("triangle", "Affine Lagrangian triple and triangle map for (q, w)");
  triangle->add_option("--q", a.q, "Lattice point")->required();
  triangle->add_option("--w", a.w, "Weyl word")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const auto entries = a.catalog.empty() ? symflag::builtin_catalog() : symflag::load_catalog(a.catalog);
    const auto format = symflag::parse_report_format(a.format);
    symflag::Report report;

    if (info->parsed()) {
      const bool named = app.count("--pair") > 0;
      report = symflag::info_report(entries, named ? std::optional<std::string>(a.pair) : std::nullopt);
    } else if (verify->parsed()) {
      report = symflag::run_suite(symflag::find_entry(entries, a.pair), suite_options(a));
    } else {
      const symflag::Session session(symflag::find_entry(entries, a.pair), suite_options(a));
      if (index->parsed())
        report = symflag::index_report(session, point_arg(a.q), word_arg(a.w), point_arg(a.q_out));
      else if (filtration->parsed())
        report = symflag::filtration_report(session);
      else if (product->parsed())
        report = symflag::product_report(session, *point_arg(a.q1), a.w1, *point_arg(a.q), a.w);
      else if (certify->parsed())
        report = symflag::certify_report(session);
      else if (triangle->parsed())
        report = symflag::triangle_report(session, *point_arg(require(a.q, "--q")), require(a.w, "--w"));
    }

    std::cout << symflag::emit(report, format);
    return report.passed() ? 0 : 1;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
