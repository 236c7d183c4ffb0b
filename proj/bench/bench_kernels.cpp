#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "hopfmon/field_ops.hpp"
#include "hopfmon/kernels.hpp"

using namespace hopfmon;

namespace {

std::vector<std::uint32_t> random_residues(std::size_t n, std::uint32_t p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  std::vector<std::uint32_t> out(n);
  for (auto& v : out) v = dist(rng);
  return out;
}

std::vector<mpq_class> random_rationals(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  std::vector<mpq_class> out(n);
  for (auto& v : out) {
    v = mpq_class(num(rng), den(rng));
    v.canonicalize();
  }
  return out;
}

template <bool Parallel>
void matmul_modp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ModP ops{101};
  const auto a = random_residues(n * n, 101, 1);
  const auto b = random_residues(n * n, 101, 2);
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::parallel::matmul(ops, a, n, n, b, n));
    else
      benchmark::DoNotOptimize(kernels::serial::matmul(ops, a, n, n, b, n));
  }
  state.SetComplexityN(state.range(0));
}

template <bool Parallel>
void matmul_rational(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RationalOps ops;
  const auto a = random_rationals(n * n, 3);
  const auto b = random_rationals(n * n, 4);
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::parallel::matmul(ops, a, n, n, b, n));
    else
      benchmark::DoNotOptimize(kernels::serial::matmul(ops, a, n, n, b, n));
  }
}

// id_{d^2} (x) f (x) id_d applied to a (d^4 x d) matrix, the shape of one wiring step on four legs
template <bool Parallel>
void apply_local_modp(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const ModP ops{101};
  const auto f = random_residues(d * d * d, 101, 5);  // (d) -> (d, d) reshaped as d^2 x d
  const std::size_t m_rows = d * d * d * d;
  const auto m = random_residues(m_rows * d, 101, 6);
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::parallel::apply_local(ops, f, d * d, d, m, d * d, d, d));
    else
      benchmark::DoNotOptimize(kernels::serial::apply_local(ops, f, d * d, d, m, d * d, d, d));
  }
}

template <bool Parallel>
void kron_modp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ModP ops{101};
  const auto a = random_residues(n * n, 101, 7);
  const auto b = random_residues(n * n, 101, 8);
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::parallel::kron(ops, a, n, n, b, n, n));
    else
      benchmark::DoNotOptimize(kernels::serial::kron(ops, a, n, n, b, n, n));
  }
}

}  // namespace

BENCHMARK(matmul_modp<false>)->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(matmul_modp<true>)->RangeMultiplier(2)->Range(32, 256)->UseRealTime();
BENCHMARK(matmul_rational<false>)->RangeMultiplier(2)->Range(16, 64);
BENCHMARK(matmul_rational<true>)->RangeMultiplier(2)->Range(16, 64)->UseRealTime();
BENCHMARK(apply_local_modp<false>)->DenseRange(2, 4);
BENCHMARK(apply_local_modp<true>)->DenseRange(2, 4)->UseRealTime();
BENCHMARK(kron_modp<false>)->RangeMultiplier(2)->Range(8, 32);
BENCHMARK(kron_modp<true>)->RangeMultiplier(2)->Range(8, 32)->UseRealTime();

BENCHMARK_MAIN();
