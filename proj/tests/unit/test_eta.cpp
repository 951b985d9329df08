#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "seifinv/dedekind.hpp"
#include "seifinv/eta.hpp"
#include "seifinv/zeta.hpp"

using namespace seifinv;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

Rational from_oracle(const mpq_class& q) { return Rational(Integer(q.get_num()), Integer(q.get_den())); }

long random_coprime(std::mt19937_64& rng, long a) {
  while (true) {
    const long b = std::uniform_int_distribution<long>(1, a - 1)(rng);
    if (std::gcd(a, b) == 1) return b;
  }
}

SeifertData random_fibration(std::mt19937_64& rng, bool odd_alphas = false) {
  while (true) {
    const int m = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<long> alphas, betas;
    for (int i = 0; i < m; ++i) {
      long a = std::uniform_int_distribution<long>(2, 30)(rng);
      if (odd_alphas && a % 2 == 0) ++a;
      alphas.push_back(a);
      betas.push_back(random_coprime(rng, a));
    }
    SeifertData N(Orbifold(0, alphas), std::uniform_int_distribution<long>(-4, 1)(rng), betas);
    if (degree_zero_guard(N)) return N;
  }
}

VLineBundle random_bundle(std::mt19937_64& rng, const Orbifold& S) {
  std::vector<long> gammas;
  for (long a : S.alphas()) gammas.push_back(std::uniform_int_distribution<long>(0, a - 1)(rng));
  return VLineBundle(S, std::uniform_int_distribution<long>(-3, 3)(rng), gammas);
}

mpq_class gmp(const Rational& r) { return r.gmp(); }

Rational oracle_pullback(const EtaContext& ctx) {
  const auto& N = ctx.seifert();
  return from_oracle(oracle::eta_pullback(gmp(N.ell()), N.alphas(), N.betas(), ctx.bundle().gammas()));
}

Rational oracle_flat(const EtaContext& ctx) {
  const auto& N = ctx.seifert();
  return from_oracle(oracle::eta_flat(gmp(N.ell()), N.alphas(), N.betas(), ctx.bundle().gammas(), gmp(ctx.rho())));
}

std::vector<long> coprime_triple(std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  while (true) {
    const long a = d(rng), b = d(rng), c = d(rng);
    if (std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(b, c) == 1) return {a, b, c};
  }
}

const BigFloat kZero(0L, 30);

}  // namespace

TEST(EtaContext, RhoAndGuards) {
  const SeifertData N = brieskorn(2, 3, 5);
  EXPECT_EQ(EtaContext::trivial_class(N).rho(), R(1, 2));
  EXPECT_TRUE(EtaContext::trivial_class(N).is_canonical());
  const SeifertData flat(Orbifold(0, {2, 2}), -1, {1, 1});
  EXPECT_THROW(EtaContext(flat, VLineBundle::trivial(flat.base())), std::domain_error);
  EXPECT_THROW(EtaContext(N, VLineBundle::trivial(Orbifold(0, {2, 3, 7}))), std::invalid_argument);
}

TEST(EtaPullback, Examples) {
  const SeifertData smooth(Orbifold(2, {}), 3, {});
  EXPECT_EQ(eta_zero_pullback(EtaContext(smooth, VLineBundle::trivial(smooth.base()))), R(1, 2));
  const SeifertData N = brieskorn(2, 3, 5);
  EXPECT_EQ(eta_zero_pullback(EtaContext(N, VLineBundle::trivial(N.base()))), R(91, 180));
  const VLineBundle L(N.base(), 0, {1, 0, 3});
  const VLineBundle dual = add_bundles(canonical_bundle(N.base()), negate_bundle(L));
  EXPECT_EQ(eta_zero_pullback(EtaContext(N, L)), eta_zero_pullback(EtaContext(N, dual)));
}

TEST(EtaPullback, MatchesCornerOracleAndSerreSymmetry) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 300; ++i) {
    const SeifertData N = random_fibration(rng);
    const VLineBundle L = random_bundle(rng, N.base());
    const EtaContext ctx(N, L);
    const Rational e = eta_zero_pullback(ctx);
    EXPECT_EQ(e, oracle_pullback(ctx));
    // Dedekind form, assembled here from the dedekind module
    const SingularData d{N.alphas(), N.betas(), L.gammas()};
    EXPECT_EQ(e, N.ell() / R(6) - R(2) * S_composite(d) - d_composite(d));
    const VLineBundle dual = add_bundles(canonical_bundle(N.base()), negate_bundle(L));
    EXPECT_EQ(e, eta_zero_pullback(EtaContext(N, dual)));
  }
}

TEST(EtaPullback, FiberTermsSumToPullback) {
  std::mt19937_64 rng(102);
  for (int i = 0; i < 100; ++i) {
    const SeifertData N = random_fibration(rng);
    const VLineBundle L = random_bundle(rng, N.base());
    Rational e = N.ell() / R(6);
    for (std::size_t j = 0; j < N.alphas().size(); ++j) {
      const long a = N.alphas()[j], b = N.betas()[j], g = L.gammas()[j];
      const Rational t = pullback_fiber_term(a, b, g);
      EXPECT_EQ(t, from_oracle(oracle::corner(a, b, g, 1) - oracle::corner(a, b, g, -1)));
      e -= t;
    }
    EXPECT_EQ(e, eta_zero_pullback(EtaContext(N, L)));
  }
}

TEST(EtaFlat, PoincareSphere) {
  const EtaContext ctx = EtaContext::trivial_class(brieskorn(2, 3, 5));
  EXPECT_EQ(eta_zero_flat(ctx), R(539, 360));
  EXPECT_EQ(R(4) * eta_zero_flat(ctx), R(539, 90));
  EXPECT_EQ(flat_double_sum(ctx), R(-269, 180));
}

TEST(EtaFlat, SmoothBase) {
  const SeifertData N(Orbifold(0, {}), -3, {});
  const EtaContext ctx = EtaContext::trivial_class(N);
  EXPECT_EQ(ctx.rho(), R(1, 3));
  const Rational rho = ctx.rho();
  EXPECT_EQ(eta_zero_flat(ctx), -N.ell() * rho * (R(1) - rho) + N.ell() / R(6));
  EXPECT_EQ(eta_zero_flat(ctx), R(1, 6));
}

TEST(EtaFlat, RejectsNonCanonicalContext) {
  const SeifertData N = brieskorn(2, 3, 5);
  const EtaContext shifted(N, add_bundles(VLineBundle::trivial(N.base()), N.l0()));
  EXPECT_FALSE(shifted.is_canonical());
  EXPECT_THROW(eta_zero_flat(shifted), std::invalid_argument);
}

TEST(EtaFlat, MatchesDoubleSumOracle) {
  std::mt19937_64 rng(202);
  int fractional = 0;
  for (int i = 0; i < 300; ++i) {
    const SeifertData N = random_fibration(rng);
    const EtaContext ctx = EtaContext::canonical(N, random_bundle(rng, N.base()));
    ASSERT_TRUE(ctx.is_canonical());
    if (ctx.rho() == R(0)) {
      EXPECT_EQ(eta_zero_flat(ctx), oracle_pullback(ctx));
    } else {
      ++fractional;
      // eta_zero_flat also compares the two closed forms internally
      EXPECT_EQ(eta_zero_flat(ctx), oracle_flat(ctx));
    }
  }
  EXPECT_GT(fractional, 200);
}

TEST(EtaFlat, DedekindFormAgrees) {
  std::mt19937_64 rng(203);
  for (int i = 0; i < 300; ++i) {
    const SeifertData N = random_fibration(rng);
    const EtaContext ctx = EtaContext::canonical(N, random_bundle(rng, N.base()));
    if (ctx.rho() == R(0)) continue;
    const SingularData d{N.alphas(), N.betas(), ctx.bundle().gammas()};
    Rational excess = 0;
    for (long a : N.alphas()) excess += R(1) - R(1, a);
    const Rational rho = ctx.rho();
    const Rational common = excess / R(2) * (R(1) - R(2) * rho) - N.ell() * rho * (R(1) - rho) + N.ell() / R(6);
    const Rational ro1 = common + R(static_cast<long>(N.alphas().size())) * rho - R(2) * S_rho(d, rho) - F_rho(d, rho);
    EXPECT_EQ(eta_zero_flat(ctx), ro1);
  }
}

TEST(EtaSeries, PoincareSphereAtZero) {
  const EtaContext ctx = EtaContext::trivial_class(brieskorn(2, 3, 5));
  EXPECT_LT(abs_diff(eta_series(ctx, kZero, 30), BigFloat(R(539, 360), 30)), 1e-26);
}

TEST(EtaSeries, SmoothBaseAtThree) {
  // genus 3, ell = 1, L = L(2): rho = (4 - 4)/2 = 0
  const SeifertData N(Orbifold(3, {}), 1, {});
  const EtaContext ctx(N, VLineBundle(N.base(), 2, {}));
  EXPECT_EQ(ctx.rho(), R(0));
  const BigFloat pi30 = pi(30);
  const BigFloat want = -(pi30 * pi30) / BigFloat(3L, 30);
  EXPECT_LT(abs_diff(eta_series(ctx, BigFloat(3L, 30), 30), want), 1e-26);
}

TEST(EtaSeries, MatchesExactValueAtZeroOnBothBranches) {
  std::mt19937_64 rng(303);
  int pullback_cases = 0, flat_cases = 0;
  while (pullback_cases < 10 || flat_cases < 10) {
    if (pullback_cases < 10) {
      // odd isotropies admit a square root of K, which has rho = 0
      const SeifertData N = random_fibration(rng, true);
      std::vector<long> half;
      for (long a : N.alphas()) half.push_back((a - 1) / 2);
      const EtaContext ctx(N, VLineBundle(N.base(), -1, half));
      ASSERT_EQ(ctx.rho(), R(0));
      EXPECT_LT(abs_diff(eta_series(ctx, kZero, 30), BigFloat(eta_zero_flat(ctx), 30)), 1e-26);
      ++pullback_cases;
    }
    const SeifertData N = random_fibration(rng);
    const EtaContext ctx = EtaContext::canonical(N, random_bundle(rng, N.base()));
    if (ctx.rho() == R(0) || flat_cases >= 10) continue;
    EXPECT_LT(abs_diff(eta_series(ctx, kZero, 30), BigFloat(eta_zero_flat(ctx), 30)), 1e-26);
    ++flat_cases;
  }
}

TEST(EtaSeries, PullbackSeriesAtZeroForAnyBundle) {
  std::mt19937_64 rng(304);
  for (int i = 0; i < 10; ++i) {
    const SeifertData N = random_fibration(rng);
    const EtaContext ctx(N, random_bundle(rng, N.base()));
    EXPECT_LT(abs_diff(eta_series_pullback(ctx, kZero, 30), BigFloat(eta_zero_pullback(ctx), 30)), 1e-26);
  }
}

TEST(LeviCivita, Examples) {
  const SeifertData N = brieskorn(2, 3, 5);
  EXPECT_EQ(eta_dirac_levicivita(N, R(1)), R(539, 360) + R(29, 162000));
  const SeifertData M = brieskorn(2, 3, 7);
  const Rational ell = M.ell(), chi = euler_characteristic(M.base());
  const Rational r(1, 2);
  EXPECT_EQ(eta_dirac_levicivita(M, r), R(-925, 504) + ell / R(6) * (ell * ell * r * r * r * r - chi * r * r));
  // the correction vanishes as r -> 0
  const Rational tiny(1, 1000000);
  EXPECT_LT(abs(eta_dirac_levicivita(N, tiny) - R(539, 360)), R(1, 1000000000));
}

TEST(LeviCivita, Guards) {
  const SeifertData N = brieskorn(2, 3, 5);
  EXPECT_THROW(eta_dirac_levicivita(N, R(0)), std::domain_error);
  EXPECT_THROW(eta_dirac_levicivita(N, R(3, 2)), std::domain_error);
  const SeifertData not_sphere(Orbifold(0, {2, 3, 5}), -1, {1, 2, 4});
  EXPECT_THROW(eta_dirac_levicivita(not_sphere, R(1, 2)), std::invalid_argument);
  const EtaContext other(N, VLineBundle(N.base(), 0, {1, 0, 0}));
  EXPECT_THROW(eta_dirac_levicivita(other, R(1, 2)), std::invalid_argument);
}

TEST(Signature, Examples) {
  const SeifertData N = brieskorn(2, 3, 5);
  EXPECT_EQ(eta_signature_constant(N), R(181, 90));
  const Rational r(1, 3), ell = N.ell(), chi = euler_characteristic(N.base());
  EXPECT_EQ(eta_signature(N, r), R(181, 90) - R(2, 3) * ell * (ell * ell * r * r * r * r - chi * r * r));
  EXPECT_EQ(brieskorn(5, 7, 9).ell().sign(), -1);
}

TEST(Signature, RadiusIndependence) {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 20; ++i) {
    const auto t = coprime_triple(rng, 2, 40);
    const SeifertData N = brieskorn(t[0], t[1], t[2]);
    const Rational half = R(4) * eta_dirac_levicivita(N, R(1, 2)) + eta_signature(N, R(1, 2));
    const Rational tenth = R(4) * eta_dirac_levicivita(N, R(1, 10)) + eta_signature(N, R(1, 10));
    EXPECT_EQ(half, tenth);
    EXPECT_EQ(half, froyshov_F(N));
  }
}

TEST(Froyshov, Examples) {
  EXPECT_EQ(froyshov_F(brieskorn(2, 3, 5)), R(8));
  EXPECT_EQ(froyshov_F(brieskorn(2, 3, 7)), R(-8));
  EXPECT_EQ(froyshov_F(brieskorn(5, 7, 9)), R(0));
  EXPECT_TRUE(rohlin_check(brieskorn(2, 3, 5)));
  EXPECT_TRUE(rohlin_check(brieskorn(2, 3, 13)));
  EXPECT_THROW(froyshov_F(SeifertData(Orbifold(0, {2, 3, 5}), -1, {1, 2, 4})), std::invalid_argument);
}

TEST(Froyshov, RohlinCongruenceOnRandomTriples) {
  std::mt19937_64 rng(505);
  for (int i = 0; i < 40; ++i) {
    const auto t = coprime_triple(rng, 2, 45);
    const Rational F = froyshov_F(brieskorn(t[0], t[1], t[2]));
    EXPECT_TRUE((F / R(8)).is_integer()) << t[0] << "," << t[1] << "," << t[2] << ": " << F;
  }
}
