#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "seifinv/plumbing.hpp"
#include "seifinv/quadratic_form.hpp"

using namespace seifinv;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

bool coprime3(long a, long b, long c) { return std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(b, c) == 1; }

IntMatrix transform(const IntMatrix& Q, const IntMatrix& U) {
  const std::size_t n = Q.size();
  IntMatrix out(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) out[i][j] += U[k][i] * Q[k][l] * U[l][j];
  return out;
}

// Product of `steps` elementary column operations with coefficient +-1.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
  IntMatrix U(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) U[i][i] = 1;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const long c = (rng() & 1) ? 1 : -1;
    for (std::size_t r = 0; r < n; ++r) U[r][j] += c * U[r][i];
  }
  return U;
}

long theta_by_box(const IntegerQuadraticForm& q, long B) {
  return static_cast<long>(q.rank()) - oracle::min_characteristic_norm_box(q.matrix(), B);
}

}  // namespace

TEST(HirzebruchJung, Examples) {
  EXPECT_EQ(hj_expand(7, 1), (std::vector<long>{7}));
  EXPECT_EQ(hj_expand(13, 2), (std::vector<long>{7, 2}));
  EXPECT_EQ(hj_expand(19, 3), (std::vector<long>{7, 2, 2}));
  EXPECT_THROW(hj_expand(6, 2), std::invalid_argument);
  EXPECT_THROW(hj_expand(5, 5), std::invalid_argument);
}

TEST(HirzebruchJung, ReconstructsFraction) {
  for (long a = 2; a <= 120; ++a)
    for (long b = 1; b < a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto e = hj_expand(a, b);
      for (long x : e) EXPECT_GE(x, 2);
      EXPECT_EQ(oracle::hj_value(e), oracle::q(a, b)) << a << "/" << b;
    }
}

TEST(Plumbing, MatrixAAndInverseB) {
  const IntMatrix A{{-1, 1, 1, 1}, {1, -2, 0, 0}, {1, 0, -3, 0}, {1, 0, 0, -7}};
  const auto q = plumbing_form(2, 3, 7);
  EXPECT_EQ(q.matrix(), A);
  const long B[4][4] = {{42, 21, 14, 6}, {21, 11, 7, 3}, {14, 7, 5, 2}, {6, 3, 2, 1}};
  const auto inv = q.inverse();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(inv[i][j], R(-B[i][j]));
}

TEST(Plumbing, RankDeterminantDefiniteness) {
  const auto q = plumbing_form(2, 3, 13);
  EXPECT_EQ(q.rank(), 5u);
  EXPECT_EQ(abs(Rational(q.determinant())), R(1));
  for (long k = 1; k <= 8; ++k) EXPECT_EQ(plumbing_form(2, 3, 6 * k + 1).rank(), static_cast<std::size_t>(4 + k - 1));
  for (long a = 2; a <= 7; ++a)
    for (long b = a + 1; b <= 13; ++b)
      for (long c = b + 1; c <= 25; ++c) {
        if (!coprime3(a, b, c)) continue;
        const auto g = plumbing_form(a, b, c);
        EXPECT_TRUE(g.is_negative_definite()) << a << "," << b << "," << c;
        EXPECT_TRUE(g.is_unimodular()) << a << "," << b << "," << c;
      }
}

TEST(Plumbing, GraphValidation) {
  PlumbingGraph cyc{{-2, -2, -2}, {{0, 1}, {1, 2}, {2, 0}}};
  EXPECT_THROW(plumbing_form(cyc), std::invalid_argument);
  PlumbingGraph disconnected{{-2, -2, -2, -2}, {{0, 1}, {0, 1}, {2, 3}}};
  EXPECT_THROW(plumbing_form(disconnected), std::invalid_argument);
  EXPECT_THROW(plumbing_graph(SeifertData(Orbifold(1, {2, 3}), -1, {1, 1})), std::invalid_argument);
}

TEST(QuadraticForm, Basics) {
  EXPECT_THROW(IntegerQuadraticForm(IntMatrix{{1, 2}, {3, 1}}), std::invalid_argument);
  EXPECT_THROW(IntegerQuadraticForm(IntMatrix{{1, 2}}), std::invalid_argument);
  const auto e8 = IntegerQuadraticForm::minus_e8();
  EXPECT_TRUE(is_even(e8));
  EXPECT_TRUE(e8.is_negative_definite());
  EXPECT_EQ(e8.determinant(), 1);
  EXPECT_FALSE(is_even(plumbing_form(2, 3, 7)));
  const auto sum = direct_sum(IntegerQuadraticForm::diagonal(1, -1), e8);
  EXPECT_EQ(sum.rank(), 9u);
  EXPECT_EQ(sum.at(0, 0), -1);
  EXPECT_EQ(sum.at(0, 1), 0);
  EXPECT_EQ(sum.at(1, 1), -2);
  EXPECT_FALSE(IntegerQuadraticForm(IntMatrix{{-1, 0}, {0, 1}}).is_negative_definite());
  EXPECT_TRUE(IntegerQuadraticForm(IntMatrix{{2, 1}, {1, 2}}).is_positive_definite());
}

TEST(Theta, Examples) {
  EXPECT_EQ(theta_invariant(IntegerQuadraticForm::diagonal(1, -1)), 0);
  EXPECT_EQ(theta_invariant(IntegerQuadraticForm::minus_e8()), 8);
  EXPECT_EQ(theta_invariant(plumbing_form(2, 3, 7)), 0);
  EXPECT_EQ(theta_invariant(direct_sum(IntegerQuadraticForm::diagonal(1, -1), IntegerQuadraticForm::minus_e8())), 8);
}

TEST(Theta, RejectsBadForms) {
  EXPECT_THROW(theta_invariant(IntegerQuadraticForm(IntMatrix{{-1, 0}, {0, 1}})), std::invalid_argument);
  EXPECT_THROW(theta_invariant(IntegerQuadraticForm::diagonal(2, -2)), std::invalid_argument);
  EXPECT_THROW(hnk_split_diagonalize(IntegerQuadraticForm::diagonal(2, -3)), std::invalid_argument);
}

TEST(Theta, MatchesBoxEnumeration) {
  EXPECT_EQ(theta_invariant(IntegerQuadraticForm::minus_e8()), theta_by_box(IntegerQuadraticForm::minus_e8(), 1));
  EXPECT_EQ(theta_invariant(plumbing_form(2, 3, 7)), theta_by_box(plumbing_form(2, 3, 7), 7));
  std::mt19937_64 rng(77);
  for (int i = 0; i < 25; ++i) {
    const std::size_t n = 2 + i % 3;
    const IntMatrix Q = transform(IntegerQuadraticForm::diagonal(static_cast<long>(n), -1).matrix(),
                                  random_unimodular(rng, n, 3));
    const IntegerQuadraticForm q(Q);
    EXPECT_EQ(theta_invariant(q), theta_by_box(q, 8));
  }
}

TEST(Theta, PropertiesOnRandomForms) {
  // P1, P2, P3 on 50 random negative definite unimodular forms: diagonal or
  // diagonal + (-E8), conjugated by a random unimodular change of basis.
  std::mt19937_64 rng(78);
  for (int i = 0; i < 50; ++i) {
    const long d = 1 + i % 6;
    const bool with_e8 = i % 2;
    IntegerQuadraticForm base = IntegerQuadraticForm::diagonal(d, -1);
    if (with_e8) base = direct_sum(base, IntegerQuadraticForm::minus_e8());
    const IntegerQuadraticForm q(transform(base.matrix(), random_unimodular(rng, base.rank(), 12)));
    ASSERT_TRUE(q.is_negative_definite());
    ASSERT_TRUE(q.is_unimodular());
    const long theta = theta_invariant(q);
    EXPECT_EQ(theta % 8, 0);
    EXPECT_GE(theta, 0);
    EXPECT_LE(theta, static_cast<long>(q.rank()));
    EXPECT_EQ(theta == static_cast<long>(q.rank()), is_even(q));
    EXPECT_EQ(theta, with_e8 ? 8 : 0);
    const DiagonalSplit s = hnk_split_diagonalize(q);
    EXPECT_EQ(theta == 0, s.residual.rank() == 0);
    EXPECT_EQ(s.diagonal_rank, d);
    if (with_e8) EXPECT_TRUE(looks_like_minus_e8(s.residual));
  }
}

TEST(Theta, DirectSumAddsRank) {
  std::mt19937_64 rng(79);
  const auto e8 = IntegerQuadraticForm::minus_e8();
  const auto e8e8 = direct_sum(e8, e8);
  for (int i = 0; i < 8; ++i) {
    const long d = 1 + i % 4;
    IntegerQuadraticForm q1 = IntegerQuadraticForm::diagonal(d, -1);
    if (i % 3 == 0) q1 = direct_sum(q1, e8);
    q1 = IntegerQuadraticForm(transform(q1.matrix(), random_unimodular(rng, q1.rank(), 6)));
    const long t1 = theta_invariant(q1);
    EXPECT_EQ(theta_invariant(direct_sum(q1, e8)), t1 + 8);
    if (i < 3) EXPECT_EQ(theta_invariant(direct_sum(q1, e8e8)), t1 + 16);
  }
}

TEST(Theta, MaximalVectorIsCharacteristic) {
  for (const auto& q : {plumbing_form(2, 3, 11), plumbing_form(2, 3, 13), IntegerQuadraticForm::minus_e8()}) {
    const auto xi = maximal_characteristic_vector(q);
    ASSERT_EQ(xi.size(), q.rank());
    for (std::size_t i = 0; i < q.rank(); ++i) {
      std::vector<Integer> e(q.rank(), 0);
      e[i] = 1;
      const Integer diff = q.pair(xi, e) - q.at(i, i);
      EXPECT_TRUE(mpz_even_p(diff.get_mpz_t()));
    }
    EXPECT_EQ(Integer(static_cast<long>(q.rank())) + q.pair(xi, xi), theta_invariant(q));
  }
}

TEST(Hnk, Examples) {
  for (long n = 1; n <= 6; ++n) {
    const DiagonalSplit s = hnk_split_diagonalize(IntegerQuadraticForm::diagonal(n, -1));
    EXPECT_EQ(s.diagonal_rank, n);
    EXPECT_EQ(s.residual.rank(), 0u);
  }
  const DiagonalSplit e = hnk_split_diagonalize(IntegerQuadraticForm::minus_e8());
  EXPECT_EQ(e.diagonal_rank, 0);
  EXPECT_TRUE(looks_like_minus_e8(e.residual));
}

TEST(Hnk, SixKFamilies) {
  for (long k = 1; k <= 8; ++k) {
    const auto plus = plumbing_form(2, 3, 6 * k + 1);
    EXPECT_EQ(theta_invariant(plus), 0);
    const DiagonalSplit sp = hnk_split_diagonalize(plus);
    EXPECT_EQ(sp.residual.rank(), 0u);
    EXPECT_EQ(sp.diagonal_rank, static_cast<long>(plus.rank()));

    const auto minus = plumbing_form(2, 3, 6 * k - 1);
    EXPECT_EQ(theta_invariant(minus), 8);
    const DiagonalSplit sm = hnk_split_diagonalize(minus);
    EXPECT_EQ(sm.residual.rank(), 8u);
    EXPECT_TRUE(is_even(sm.residual));
    EXPECT_TRUE(looks_like_minus_e8(sm.residual));
    EXPECT_EQ(sm.diagonal_rank + 8, static_cast<long>(minus.rank()));
  }
}

TEST(Hnk, MinusE8Recognition) {
  EXPECT_TRUE(looks_like_minus_e8(IntegerQuadraticForm::minus_e8()));
  EXPECT_FALSE(looks_like_minus_e8(IntegerQuadraticForm::diagonal(8, -1)));
  EXPECT_FALSE(looks_like_minus_e8(IntegerQuadraticForm::diagonal(8, -2)));
}
