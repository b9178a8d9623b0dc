#include <benchmark/benchmark.h>

#include "dser/identities.hpp"

using namespace dser;

namespace {

Matrix<PrimeField> random_matrix(const PrimeField& f, std::size_t n, Rng& rng) {
  Matrix<PrimeField> a(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = sample_element(f, rng);
  return a;
}

}  // namespace

static void BM_MatmulMod(benchmark::State& state) {
  PrimeField f(10007);
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  auto a = random_matrix(f, n, rng), b = random_matrix(f, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MatmulMod)->Arg(11)->Arg(32);

static void BM_CheckCase(benchmark::State& state) {
  PrimeField f(10007);
  const auto id = static_cast<LemmaId>(state.range(0));
  auto cases = enumerate_cases(4, 3, id);
  std::size_t t = 0;
  for (auto _ : state) {
    Rng rng(derive_seed(1, {t}));
    auto v = check_case(random_instance(cases[t++ % cases.size()], f, 4, 3, rng));
    benchmark::DoNotOptimize(v.status);
  }
  state.SetLabel(std::string(to_string(id)));
}
BENCHMARK(BM_CheckCase)
    ->Arg(static_cast<int>(LemmaId::L01))
    ->Arg(static_cast<int>(LemmaId::L04))
    ->Arg(static_cast<int>(LemmaId::L13));

static void BM_SymbolicTriple(benchmark::State& state) {
  auto cases = enumerate_cases(3, 2, LemmaId::L05);
  std::size_t t = 0;
  for (auto _ : state) {
    auto v = check_case(symbolic_instance(cases[t++ % cases.size()], 3, 2));
    benchmark::DoNotOptimize(v.status);
  }
}
BENCHMARK(BM_SymbolicTriple);
