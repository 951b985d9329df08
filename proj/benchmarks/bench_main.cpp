#include <benchmark/benchmark.h>

#include <numeric>

#include "seifinv/dedekind.hpp"
#include "seifinv/eta.hpp"
#include "seifinv/plumbing.hpp"
#include "seifinv/quadratic_form.hpp"
#include "seifinv/swfloer.hpp"
#include "seifinv/zeta.hpp"

using namespace seifinv;

// beta near 0.38 alpha, coprime to alpha
static long sample_beta(long alpha) {
  long b = alpha * 38 / 100;
  while (std::gcd(b, alpha) != 1) ++b;
  return b;
}

static void BM_DedekindDirect(benchmark::State& state) {
  const long alpha = state.range(0);
  const DRInput in(sample_beta(alpha), alpha, Rational(2, 7), Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(dr_sum_direct(in));
}
BENCHMARK(BM_DedekindDirect)->Arg(101)->Arg(1001)->Arg(10001);

static void BM_DedekindFast(benchmark::State& state) {
  const long alpha = state.range(0);
  const DRInput in(sample_beta(alpha), alpha, Rational(2, 7), Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(dr_sum_fast(in));
}
BENCHMARK(BM_DedekindFast)->Arg(101)->Arg(1001)->Arg(10001)->Arg(1000001);

static void BM_HurwitzZeta(benchmark::State& state) {
  const unsigned digits = static_cast<unsigned>(state.range(0));
  const BigFloat s = BigFloat::parse("2.5", digits);
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_zeta(s, Rational(1, 3), digits));
}
BENCHMARK(BM_HurwitzZeta)->Arg(30)->Arg(100)->Arg(300);

static void BM_EtaSeriesAtZero(benchmark::State& state) {
  const EtaContext ctx = EtaContext::trivial_class(brieskorn(5, 7, 9));
  const BigFloat zero(0L, 30);
  for (auto _ : state) benchmark::DoNotOptimize(eta_series(ctx, zero, 30));
}
BENCHMARK(BM_EtaSeriesAtZero);

static void BM_FroyshovF(benchmark::State& state) {
  const SeifertData N = brieskorn(2, 3, 6 * state.range(0) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(froyshov_F(N));
}
BENCHMARK(BM_FroyshovF)->Arg(1)->Arg(50)->Arg(1000);

static void BM_PoincarePolynomial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(poincare_polynomial(5, 7, 9));
}
BENCHMARK(BM_PoincarePolynomial);

static void BM_ThetaPlumbing(benchmark::State& state) {
  const auto q = plumbing_form(2, 3, 6 * state.range(0) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(theta_invariant(q));
}
BENCHMARK(BM_ThetaPlumbing)->Arg(1)->Arg(4)->Arg(8);

static void BM_HnkSplit(benchmark::State& state) {
  const auto q = plumbing_form(2, 3, 6 * state.range(0) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(hnk_split_diagonalize(q));
}
BENCHMARK(BM_HnkSplit)->Arg(1)->Arg(8);

BENCHMARK_MAIN();
