#include "grk/abelian.hpp"
#include "grk/cartan.hpp"
#include "grk/excat.hpp"
#include "grk/io.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace grk;

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

void BM_Snf(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto m = random_matrix(rng, static_cast<std::size_t>(state.range(0)), -9, 9);
  for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_Snf)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Hnf(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto m = random_matrix(rng, static_cast<std::size_t>(state.range(0)), -9, 9);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(m));
}
BENCHMARK(BM_Hnf)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_EnumerateCyclic(benchmark::State& state) {
  const FgAbelianGroup g(1, IntMatrix{{static_cast<long>(state.range(0))}});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subgroups(g));
}
BENCHMARK(BM_EnumerateCyclic)->Arg(12)->Arg(360)->Arg(5040);

void BM_EnumerateElementary(benchmark::State& state) {
  // (Z/2)^k
  const auto k = static_cast<std::size_t>(state.range(0));
  IntMatrix rel(0, k);
  for (std::size_t i = 0; i < k; ++i) {
    IntVector row(k);
    row[i] = 2;
    rel.append_row(row);
  }
  const FgAbelianGroup g(k, rel);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subgroups(g));
}
BENCHMARK(BM_EnumerateElementary)->DenseRange(2, 5);

void BM_ClassifyA1(benchmark::State& state) {
  const auto p = presentation_from_json(read_json_file(GRK_DATA_DIR "/a1_cm.json"));
  for (auto _ : state) benchmark::DoNotOptimize(classify(p, Variant::resolving));
}
BENCHMARK(BM_ClassifyA1);

void BM_VerifyA1(benchmark::State& state) {
  const auto p = presentation_from_json(read_json_file(GRK_DATA_DIR "/a1_cm.json"));
  for (auto _ : state) benchmark::DoNotOptimize(verify_bijection(p, 4));
}
BENCHMARK(BM_VerifyA1);

void BM_CartanTruncatedLoop(benchmark::State& state) {
  QuiverAlgebra q{{"1"}, {{"x", "1", "1"}}, {}};
  q.relations.push_back(std::vector<std::string>(static_cast<std::size_t>(state.range(0)), "x"));
  for (auto _ : state) benchmark::DoNotOptimize(dense_resolving_count(q));
}
BENCHMARK(BM_CartanTruncatedLoop)->Arg(2)->Arg(12)->Arg(64);

void BM_CartanLinearQuiver(benchmark::State& state) {
  // 1 -> 2 -> ... -> n with every composite of two arrows zero.
  const auto n = static_cast<std::size_t>(state.range(0));
  QuiverAlgebra q;
  for (std::size_t i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
  for (std::size_t i = 1; i < n; ++i)
    q.arrows.push_back({"a" + std::to_string(i), std::to_string(i), std::to_string(i + 1)});
  for (std::size_t i = 1; i + 1 < n; ++i) q.relations.push_back({"a" + std::to_string(i), "a" + std::to_string(i + 1)});
  for (auto _ : state) benchmark::DoNotOptimize(dense_resolving_count(q));
}
BENCHMARK(BM_CartanLinearQuiver)->Arg(4)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
