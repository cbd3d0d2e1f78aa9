// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.
// LEGWEB_THREADS caps the worker count of the parallel variants.

#include <benchmark/benchmark.h>

#include "legweb/abelian.hpp"
#include "legweb/numeric_webs.hpp"
#include "legweb/symbol.hpp"

using namespace legweb;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_RelationRank(benchmark::State& state) {
  const auto rels = build_relations(WebSpec::random(7, 0));
  const ExactMatrix m = relation_matrix(rels);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m, mode(state)));
  state.SetLabel("d = 7, " + std::to_string(m.rows()) + " x " + std::to_string(m.cols()));
}

void BM_VerifyRelations(benchmark::State& state) {
  const WebSpec w = WebSpec::standard(6);
  const auto rels = build_relations(w);
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations(rels, w, mode(state)));
}

void BM_SymbolTable(benchmark::State& state) {
  const WebSpec w = WebSpec::standard(8);
  for (auto _ : state) benchmark::DoNotOptimize(symbol_table(w, mode(state)));
}

void BM_RelationsSatisfySymbol(benchmark::State& state) {
  const WebSpec w = WebSpec::standard(5);
  const auto rels = build_relations(w);
  for (auto _ : state)
    benchmark::DoNotOptimize(relations_satisfy_symbol(w, rels, 7, mode(state)));
}

void BM_StructureResidual(benchmark::State& state) {
  const Coframe3 cf = normal_form_coframe(NormalCase::negative_disc, 1);
  const auto pts = sample_points(cf, 2000, 0);
  for (auto _ : state) benchmark::DoNotOptimize(max_structure_residual(cf, pts, mode(state)));
}

void BM_MaximalRank(benchmark::State& state) {
  const Web3Numeric w = normal_form_web(NormalCase::positive_disc, 1);
  const auto pts = sample_points(w, 100, 0);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_rank_report(w, pts, {}, mode(state)));
}

void BM_Darboux(benchmark::State& state) {
  const auto pts = darboux_samples(5000, 0);
  for (auto _ : state) benchmark::DoNotOptimize(darboux_check(1, 2, pts, 1e-9, mode(state)));
}

}  // namespace

BENCHMARK(BM_RelationRank)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyRelations)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymbolTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RelationsSatisfySymbol)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StructureResidual)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaximalRank)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Darboux)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
