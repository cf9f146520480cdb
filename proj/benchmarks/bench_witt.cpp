#include <benchmark/benchmark.h>

#include <random>

#include "witt/galois_ring.hpp"
#include "witt/isomorphism.hpp"
#include "witt/sampling.hpp"
#include "witt/witt_polynomials.hpp"

using namespace witt;

namespace {

MonoidAlgebraElement sample(const AlgebraPtr& desc, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_monoid_element(desc, rng);
}

void BM_delta(benchmark::State& state) {
  const auto desc = AlgebraDescriptor::make_field(static_cast<unsigned>(state.range(0)), 1);
  const auto x = sample(desc, 19);
  for (auto _ : state) benchmark::DoNotOptimize(delta(x));
}
BENCHMARK(BM_delta)->Arg(2)->Arg(5)->Arg(7);

void BM_delta_iterated(benchmark::State& state) {
  // coefficient growth is C^(p^k); this tracks the cost of the chain
  const auto desc = AlgebraDescriptor::make_field(5, 1);
  const auto x = sample(desc, 23);
  const auto iterations = state.range(0);
  for (auto _ : state) {
    MonoidAlgebraElement acc = x;
    for (long i = 0; i < iterations; ++i)
      acc = delta(acc - MonoidAlgebraElement::symbol(augmentation_pi(acc)));
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_delta_iterated)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void BM_alpha(benchmark::State& state) {
  const auto desc = AlgebraDescriptor::make_field(5, 1);
  const auto x = sample(desc, 29);
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(alpha(x, n));
}
BENCHMARK(BM_alpha)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void BM_canonical_map(benchmark::State& state) {
  const auto desc = AlgebraDescriptor::make_field(5, 1);
  const GaloisRing ring(desc, static_cast<unsigned>(state.range(0)));
  const auto x = sample(desc, 31);
  for (auto _ : state) benchmark::DoNotOptimize(ring.canonical_map(x));
}
BENCHMARK(BM_canonical_map)->Arg(2)->Arg(5);

void BM_teichmuller(benchmark::State& state) {
  const auto desc = AlgebraDescriptor::make_field(7, 2);
  std::mt19937_64 rng(37);
  const auto r = random_element(desc, rng);
  for (auto _ : state) {
    // fresh ring each round, otherwise the memo makes this a map lookup
    const GaloisRing ring(desc, static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(ring.teichmuller(r));
  }
}
BENCHMARK(BM_teichmuller)->Arg(3)->Arg(5);

void BM_witt_mul_oracle(benchmark::State& state) {
  const auto desc = AlgebraDescriptor::make_field(3, 2);
  const GaloisRing ring(desc, 3);
  std::mt19937_64 rng(41);
  const WittVector a(desc, {random_element(desc, rng), random_element(desc, rng),
                            random_element(desc, rng)});
  const WittVector b(desc, {random_element(desc, rng), random_element(desc, rng),
                            random_element(desc, rng)});
  for (auto _ : state) benchmark::DoNotOptimize(ring.witt_mul(a, b));
}
BENCHMARK(BM_witt_mul_oracle);

void BM_build_witt_polynomials(benchmark::State& state) {
  const unsigned p = static_cast<unsigned>(state.range(0));
  const unsigned n = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_witt_polynomials(p, n));
}
BENCHMARK(BM_build_witt_polynomials)->Args({2, 3})->Args({2, 4})->Args({3, 3})->Args({5, 2});

void BM_poly_backend_mul(benchmark::State& state) {
  const auto desc = AlgebraDescriptor::make_field(3, 1);
  const WittPolynomialSet set = build_witt_polynomials(3, 3);
  std::mt19937_64 rng(43);
  const WittVector a(desc, {random_element(desc, rng), random_element(desc, rng),
                            random_element(desc, rng)});
  const WittVector b(desc, {random_element(desc, rng), random_element(desc, rng),
                            random_element(desc, rng)});
  for (auto _ : state) benchmark::DoNotOptimize(poly_backend_mul(set, a, b));
}
BENCHMARK(BM_poly_backend_mul);

}  // namespace

BENCHMARK_MAIN();
