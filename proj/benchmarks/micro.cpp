// Microbenchmarks for the hot paths: chart evaluation, Clifford action,
// exhaustive enumeration, Groebner bases of linear sections, and the local
// arithmetic behind the form classification.

#include <benchmark/benchmark.h>

#include <random>

#include "spinten/clifford.hpp"
#include "spinten/fields.hpp"
#include "spinten/groebner.hpp"
#include "spinten/qforms.hpp"
#include "spinten/quadrics.hpp"
#include "spinten/variety.hpp"
#include "spinten/zmodels.hpp"

namespace {

using namespace spinten;

Matrix<PrimeField> random_skew(const PrimeField& f, std::mt19937_64& rng) {
  Matrix<PrimeField> skew(5, 5, f);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) {
      const std::uint64_t r = rng() % f.modulus();
      skew.at(i, j) = r;
      skew.at(j, i) = f.neg(r);
    }
  return skew;
}

void BM_PureSpinorChart(benchmark::State& state) {
  const PrimeField f(101);
  std::mt19937_64 rng(1);
  for (auto _ : state) {
    const auto s = pure_spinor(f, random_skew(f, rng), Parity::even);
    benchmark::DoNotOptimize(s.x.data());
  }
}
BENCHMARK(BM_PureSpinorChart);

void BM_GammaApplyVector(benchmark::State& state) {
  const PrimeField f(101);
  std::mt19937_64 rng(2);
  const auto s = pure_spinor(f, random_skew(f, rng), Parity::even);
  std::array<PrimeField::Elem, 10> v{};
  for (auto& c : v) c = rng() % 101;
  for (auto _ : state) {
    const auto t = gamma_apply_vector(f, v, s);
    benchmark::DoNotOptimize(t.x.data());
  }
}
BENCHMARK(BM_GammaApplyVector);

void BM_EnumerateF2(benchmark::State& state) {
  const auto sys = clifford_quadrics(Parity::even);
  for (auto _ : state) {
    const auto res = enumerate_points(sys, 2, false, false);
    benchmark::DoNotOptimize(res.count.get_mpz_t());
  }
}
BENCHMARK(BM_EnumerateF2)->Unit(benchmark::kMillisecond);

void BM_SliceGroebner(benchmark::State& state) {
  // Groebner basis plus Hilbert data of one transverse P^5 slice over F_3:
  // the unit of work behind degree checks and the secant experiment.
  const auto sys = clifford_quadrics(Parity::even);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const auto outcome = random_slice_multiplicity(sys, 3, seed++);
    benchmark::DoNotOptimize(outcome.degree.get_mpz_t());
  }
}
BENCHMARK(BM_SliceGroebner)->Unit(benchmark::kMillisecond);

void BM_SectionAuditF7(benchmark::State& state) {
  for (auto _ : state) {
    const auto rep = build_and_verify_section(5, 7, 8, 1);
    benchmark::DoNotOptimize(rep.pass);
  }
}
BENCHMARK(BM_SectionAuditF7)->Unit(benchmark::kMillisecond);

void BM_HilbertSymbol(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const mpz_class p = 2;
  for (auto _ : state) {
    const long a = static_cast<long>(rng() % 2001) - 1000;
    const long b = static_cast<long>(rng() % 2001) - 1000;
    if (a == 0 || b == 0) continue;
    benchmark::DoNotOptimize(hilbert_symbol(a, b, p));
  }
}
BENCHMARK(BM_HilbertSymbol);

}  // namespace

BENCHMARK_MAIN();
