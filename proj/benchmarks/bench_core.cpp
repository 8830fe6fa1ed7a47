#include <benchmark/benchmark.h>

#include "binomgroup/binomial.hpp"
#include "binomgroup/bsgs.hpp"
#include "binomgroup/classify.hpp"
#include "binomgroup/permgroup.hpp"
#include "binomgroup/sieve.hpp"

using namespace binomgroup;

static void BM_BuildField(benchmark::State& state) {
  const auto q = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_field_for(q));
}
BENCHMARK(BM_BuildField)->Arg(729)->Arg(4096)->Arg(4999)->Arg(65536);

static void BM_Classes(benchmark::State& state) {
  const FieldCtx f = build_field_for(static_cast<u64>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(permutation_classes(f));
}
BENCHMARK(BM_Classes)->Arg(421)->Arg(2521)->Arg(4621)->Unit(benchmark::kMillisecond);

static void BM_ReducedVsBrute(benchmark::State& state, bool reduced) {
  const FieldCtx f = build_field_for(4621);
  const Binomial b = make_binomial(f, f.from_log(5), 7, 7 + 1155);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduced ? is_perm_reduced(f, b) : is_perm_bruteforce(f, b.a, f.one(), b.m, b.n));
  }
}
BENCHMARK_CAPTURE(BM_ReducedVsBrute, reduced, true);
BENCHMARK_CAPTURE(BM_ReducedVsBrute, brute, false);

static void BM_Decide(benchmark::State& state) {
  const auto q = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decide_group(q));
}
BENCHMARK(BM_Decide)->Arg(25)->Arg(421)->Arg(2521)->Arg(4096)->Unit(benchmark::kMillisecond);

static void BM_BsgsSymmetric(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Perm::Point> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<Perm::Point>(i);
  std::swap(t[0], t[1]);
  const std::vector<Perm> gens{Perm(t), Perm::shift(n)};
  for (auto _ : state) benchmark::DoNotOptimize(bsgs_order(gens));
}
BENCHMARK(BM_BsgsSymmetric)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_Sieve(benchmark::State& state) {
  const auto bound = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qualifying_primes(bound));
}
BENCHMARK(BM_Sieve)->Arg(1'000'000'000'000LL)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
