#include <benchmark/benchmark.h>

#include "symflag/catalog.hpp"
#include "symflag/suite.hpp"
#include "symflag/triangle.hpp"

using namespace symflag;

namespace {

const CatalogEntry& entry(const char* name) { return find_entry(builtin_catalog(), name); }

void BM_WeylF4(benchmark::State& state) {
  const RootSystem rs = cartan_root_system("F4");
  for (auto _ : state) benchmark::DoNotOptimize(WeylGroup::generate(rs).size());
}
BENCHMARK(BM_WeylF4)->Unit(benchmark::kMillisecond);

void BM_LatticePoints(benchmark::State& state) {
  const EntryModel m(entry("group-A2"));
  const Rational r(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(m.lattice().points(r).size());
}
BENCHMARK(BM_LatticePoints)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_End2Sweep(benchmark::State& state) {
  SuiteOptions o;
  const Session s(entry("group-A2"), o);
  const auto window = s.lattice().points(3);
  for (auto _ : state) {
    std::vector<EndTerms> terms;
    for (const LatticePoint& q : window)
      for (WeylIndex w = 0; w < s.weyl().size(); ++w) terms.push_back(s.index().end_terms({q, w}, s.monotone()));
    std::size_t ok = 0;
    for (const EndTerms& a : terms)
      for (const EndTerms& b : terms) ok += s.index().end2_implication_check(a, b, s.monotone());
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_End2Sweep)->Unit(benchmark::kMillisecond);

void BM_Certificate(benchmark::State& state) {
  SuiteOptions o;
  const Session s(entry("group-A2"), o);
  for (auto _ : state)
    benchmark::DoNotOptimize(s.ring().triangularity_certificate(4, static_cast<unsigned>(state.range(0))).rows.size());
}
BENCHMARK(BM_Certificate)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_TriangleSolve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(TriangleMap(static_cast<int>(state.range(0))).residuals().corner);
}
BENCHMARK(BM_TriangleSolve)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
