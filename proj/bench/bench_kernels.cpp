// Serial vs OpenMP paths of the hot kernels. Arg 0 = serial, 1 = parallel.
#include <benchmark/benchmark.h>

#include "argonaut/engine.hpp"
#include "argonaut/generator.hpp"
#include "argonaut/kernels.hpp"

using namespace argonaut;
using kernels::Exec;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

FormulaSet bench_premises() {
  return make_set({parse_formula("p"), parse_formula("~p | q"), parse_formula("q -> r"),
                   parse_formula("~r"), parse_formula("p & s"), parse_formula("~s | t")});
}

std::vector<FormulaSet> all_supports(const FormulaSet& prem) {
  std::vector<FormulaSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << prem.size()); ++m)
    out.push_back(subset_by_mask(prem, m));
  return out;
}

void BM_CandidateTable(benchmark::State& st) {
  Setting s = make_setting(cl_core(), AttackRule::DiCoDef);
  FormulaSet prem = bench_premises();
  FormulaSet concl = relevant_conclusions(s, prem, {});
  auto sup = all_supports(prem);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::candidate_table(*s.core, sup, concl, exec_of(st)));
}

void BM_ContraryColumns(benchmark::State& st) {
  Setting s = make_setting(cl_core(), AttackRule::DiDef);
  FormulaSet prem = bench_premises();
  FormulaSet concl = relevant_conclusions(s, prem, {});
  FormulaSet pts = attack_points(prem, s.points);
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::contrary_columns(concl, pts, s.contrariness, exec_of(st)));
}

void BM_CompleteMasks(benchmark::State& st) {
  KBGenerator gen(GenConfig{.seed = kDefaultSeed});
  Digraph g = gen.graph(16, 15);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::complete_masks(g, exec_of(st)));
}

void BM_DirectInconsistency(benchmark::State& st) {
  FormulaSet prem = bench_premises();
  auto c = ContrarinessSpec::neg();
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::direct_inconsistency(*cl_core(), c, prem, exec_of(st)));
}

}  // namespace

BENCHMARK(BM_CandidateTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ContraryColumns)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CompleteMasks)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectInconsistency)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
