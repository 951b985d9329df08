#pragma once

#include <array>
#include <vector>

#include "seifinv/laurent.hpp"
#include "seifinv/orbifold.hpp"
#include "seifinv/rational.hpp"
#include "seifinv/seifert.hpp"

namespace seifinv {

struct DeltaPoint {
  long x = 0;
  long y = 0;
  long z = 0;
  friend bool operator==(const DeltaPoint&, const DeltaPoint&) = default;
  friend auto operator<=>(const DeltaPoint&, const DeltaPoint&) = default;
};

/// x/a + y/b + z/c < kappa/2 with kappa = 1 - (1/a + 1/b + 1/c), plus the box bounds.
bool in_delta(const DeltaPoint& p, long a, long b, long c);

/// All points of Delta(a,b,c) in lexicographic order.
std::vector<DeltaPoint> enumerate_delta(long a, long b, long c);

/// Floer-side data of the Brieskorn sphere Sigma(a,b,c).
///
/// The eta invariant of the trivial class is computed once; each point p of
/// Delta then gets its vortex bundle L_p = L(0; x, y, z), its energy
/// E(p) = nu^2/ell with nu = deg L_p - deg K / 2, and the grading
///   n_+(p) = eta(D0) - eta(L_p) - E(p),
/// where eta(L_p) is the pullback eta invariant of L_p. n_-(p) = n_+(p) + 1.
/// eta(L_p) = ell/6 - sum of per-fiber terms; the terms for every coordinate
/// value occurring in Delta are computed once, on construction.
class BrieskornFloer {
 public:
  BrieskornFloer(long a, long b, long c);

  long a() const { return a_; }
  long b() const { return b_; }
  long c() const { return c_; }
  const SeifertData& seifert() const { return N_; }
  const std::vector<DeltaPoint>& delta() const { return delta_; }
  const Rational& eta_trivial() const { return eta_trivial_; }

  /// Throws std::invalid_argument when p is not in Delta.
  VLineBundle vortex_bundle(const DeltaPoint& p) const;
  Rational energy(const DeltaPoint& p) const;
  long grading_plus(const DeltaPoint& p) const;
  long grading_minus(const DeltaPoint& p) const;

  /// sum_p T^{n_+(p)}; with sign = -1, sum_p T^{n_-(p)}.
  LaurentPolynomial poincare_polynomial(int sign = +1) const;

  Rational froyshov_F() const;
  long gap_m() const;
  Rational froyshov_Z() const;

 private:
  void require_member(const DeltaPoint& p) const;

  long a_, b_, c_;
  SeifertData N_;
  std::vector<DeltaPoint> delta_;
  Rational eta_trivial_;
  std::array<std::vector<Rational>, 3> fiber_terms_;  // indexed by coordinate value
};

VLineBundle vortex_bundle(const DeltaPoint& p, long a, long b, long c);
Rational energy(const DeltaPoint& p, long a, long b, long c);
long grading_plus(const DeltaPoint& p, long a, long b, long c);
long grading_minus(const DeltaPoint& p, long a, long b, long c);
LaurentPolynomial poincare_polynomial(long a, long b, long c);

/// Least m >= 0 with zero coefficient at T^{-(2m+1)}.
long gap_m(const LaurentPolynomial& P);

/// 8 m(P_{a,b,c}) + F(Sigma(a,b,c)).
Rational froyshov_Z(long a, long b, long c);

}  // namespace seifinv
