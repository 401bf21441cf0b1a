#include <benchmark/benchmark.h>

#include "xmod/counter.hpp"
#include "xmod/fixtures.hpp"

namespace {

using namespace xmod;

void count_fixture(benchmark::State& state, const char* movie, const char* module, CountMethod method) {
  const CompiledComplement c = compile_movie(load_fixture_movie(movie));
  const FiniteCrossedModule cm = load_fixture_module(module);
  for (auto _ : state) benchmark::DoNotOptimize(compute_invariant(c.presentation, cm, c.one_handles, method));
}

void compile_fixture(benchmark::State& state, const char* movie) {
  const MovieScript script = load_fixture_movie(movie);
  for (auto _ : state) benchmark::DoNotOptimize(compile_movie(script));
}

BENCHMARK_CAPTURE(compile_fixture, spun_trefoil, "spun_trefoil");
BENCHMARK_CAPTURE(compile_fixture, two_tori, "two_tori");

BENCHMARK_CAPTURE(count_fixture, two_tori_s3_naive, "two_tori", "s3_conj", CountMethod::naive);
BENCHMARK_CAPTURE(count_fixture, two_tori_s3_backtracking, "two_tori", "s3_conj", CountMethod::backtracking);
BENCHMARK_CAPTURE(count_fixture, spun_hopf_z3_naive, "spun_hopf", "z3_f2", CountMethod::naive);
BENCHMARK_CAPTURE(count_fixture, spun_hopf_z3_backtracking, "spun_hopf", "z3_f2", CountMethod::backtracking);
BENCHMARK_CAPTURE(count_fixture, spun_hopf_z3_linear, "spun_hopf", "z3_f2", CountMethod::linear);
BENCHMARK_CAPTURE(count_fixture, spun_trefoil_z3_backtracking, "spun_trefoil", "z3_f2", CountMethod::backtracking);
BENCHMARK_CAPTURE(count_fixture, spun_trefoil_z3_linear, "spun_trefoil", "z3_f2", CountMethod::linear);

}  // namespace

BENCHMARK_MAIN();
