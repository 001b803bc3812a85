#include <benchmark/benchmark.h>

#include "galinv/engine/family.hpp"

namespace {

using namespace galinv;

struct Problem {
  Ansatz ansatz;
  std::vector<TransformContext> contexts;
  DerivedConstraints constraints;
};

const Problem& problem(int order) {
  static const Problem p[2] = {
      [] {
        const GeneratorSet g = calibrated_representation(4, 1, Exec::Serial).generators;
        Ansatz a(4, 1, false);
        auto ctx = generating_contexts(g, 1);
        auto dc = derive_constraints(a, ctx, Exec::Serial);
        return Problem{a, ctx, dc};
      }(),
      [] {
        const GeneratorSet g = calibrated_representation(4, 1, Exec::Serial).generators;
        Ansatz a(4, 2, true);
        auto ctx = generating_contexts(g, 1);
        auto dc = derive_constraints(a, ctx, Exec::Serial);
        return Problem{a, ctx, dc};
      }()};
  return p[order - 1];
}

Exec exec_of(const benchmark::State& s) { return s.range(1) ? Exec::Parallel : Exec::Serial; }

void BM_DeriveConstraints(benchmark::State& state) {
  const Problem& p = problem(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(derive_constraints(p.ansatz, p.contexts, exec_of(state)));
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

void BM_Nullspace(benchmark::State& state) {
  const Problem& p = problem(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(p.constraints.system, exec_of(state)));
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_DeriveConstraints)->ArgsProduct({{1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Nullspace)->ArgsProduct({{1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
