// Serial vs OpenMP kernels on the suspended torus. Arg 0 is serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "icsheaf/builtin.hpp"
#include "icsheaf/deligne.hpp"

using namespace icsheaf;

namespace {

using Q = Rational;

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

struct Fixture {
  Stratification strat = stratify(suspended_torus(), {{"a", 3}, {"b", 3}});
  ExtendedPerversity p = extend(Perversity({0, 1, 1}), 3);
  LocalSystem<Q> g = LocalSystem<Q>::constant(strat.open_part(1));
  CellSheafComplex<Q> deligne = build_deligne(strat, p, g, {true, false, Exec::parallel}).result;
};

const Fixture& fixture() {
  static Fixture f;
  return f;
}

void BM_build_deligne(benchmark::State& st) {
  const auto& f = fixture();
  for (auto _ : st) benchmark::DoNotOptimize(build_deligne(f.strat, f.p, f.g, {true, false, exec_of(st)}).result.total_dim());
}

void BM_full_pushforward(benchmark::State& st) {
  const auto& f = fixture();
  for (auto _ : st) benchmark::DoNotOptimize(full_pushforward(f.g, f.strat.complex_ptr(), exec_of(st)).total_dim());
}

void BM_stalk_table(benchmark::State& st) {
  const auto& f = fixture();
  for (auto _ : st) benchmark::DoNotOptimize(stalk_table(f.deligne, exec_of(st)).size());
}

void BM_costalk_table(benchmark::State& st) {
  const auto& f = fixture();
  for (auto _ : st) benchmark::DoNotOptimize(costalk_table(f.deligne, exec_of(st)).size());
}

}  // namespace

BENCHMARK(BM_build_deligne)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_full_pushforward)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_stalk_table)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_costalk_table)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
