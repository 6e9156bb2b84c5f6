#include <benchmark/benchmark.h>

#include <random>

#include "imm5/fixtures.hpp"
#include "imm5/intlinalg.hpp"
#include "imm5/spin.hpp"
#include "imm5/surgery.hpp"
#include "imm5/verify.hpp"

using namespace imm5;

static void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix a = random_matrix(rng, n, 9);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(2, 12, 2);

static void BM_Signature(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const IntSymMatrix q = random_symmetric(rng, static_cast<std::size_t>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(signature(q));
}
BENCHMARK(BM_Signature)->DenseRange(2, 12, 2);

static void BM_SignatureE8(benchmark::State& state) {
  const auto e8 = fixtures::e8_form();
  for (auto _ : state) benchmark::DoNotOptimize(signature(e8));
}
BENCHMARK(BM_SignatureE8);

static void BM_SpinStructures(benchmark::State& state) {
  const SurgeryPresentation p{"zero", IntSymMatrix::zero(static_cast<std::size_t>(state.range(0)))};
  for (auto _ : state) benchmark::DoNotOptimize(spin_structures(p));
}
BENCHMARK(BM_SpinStructures)->DenseRange(2, 10, 2);

static void BM_WuCosets(benchmark::State& state) {
  const SurgeryPresentation p{"mixed", IntSymMatrix::diagonal({0, 0, 2, 4, 6, 8})};
  const auto spins = spin_structures(p);
  const WuCosetMap map(p);
  for (auto _ : state)
    for (const auto& s : spins) benchmark::DoNotOptimize(map.of_difference(s, spins.front()));
}
BENCHMARK(BM_WuCosets);

static void BM_HomologyProfile(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const SurgeryPresentation p{"random", random_even_nonsingular(rng, 6)};
  for (auto _ : state) benchmark::DoNotOptimize(homology_profile(p));
}
BENCHMARK(BM_HomologyProfile);
BENCHMARK_MAIN();
