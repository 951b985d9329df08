#pragma once

#include <span>

#include "seifinv/bigfloat.hpp"
#include "seifinv/rational.hpp"

namespace seifinv {

/// Hurwitz zeta zeta(s, a) = sum_{n>=0} (n + a)^-s for real s != 1, a > 0.
///
/// Evaluated by Euler-Maclaurin summation: N = max(digits, 2|s|) + 8 terms
/// are summed directly, then Bernoulli corrections are added until the next
/// one drops below 10^-(digits+3). The first omitted correction becomes the
/// result's error estimate. At s = 0 and s = -1 the exact closed forms
///   zeta(0, a) = 1/2 - a,   zeta(-1, a) = -1/12 + a(1 - a)/2
/// are returned instead of the series.
///
/// Throws std::domain_error for a <= 0 or |s - 1| < 10^-digits.
BigFloat hurwitz_zeta(const BigFloat& s, const Rational& a, unsigned digits = kDefaultDigits);

/// Riemann zeta, i.e. hurwitz_zeta(s, 1).
BigFloat riemann_zeta(const BigFloat& s, unsigned digits = kDefaultDigits);

/// Dirichlet series of a p-periodic f, split into Hurwitz zetas:
///   sum_{n>=1} f(n) n^-s = sum_{r=1}^{p} f(r) p^-s zeta(s, r/p).
/// `f[r - 1]` holds f(r); p = f.size().
BigFloat periodic_dirichlet_split(std::span<const Rational> f, const BigFloat& s,
                                  unsigned digits = kDefaultDigits);

/// Signed series over rho + Z of a p-periodic f:
///   sum_{mu in rho+Z} sign(mu) f(mu - rho) |mu|^-s
///     = sum_{k=0}^{p-1} f(k) p^-s (zeta(s, {(k+rho)/p}) - zeta(s, 1 - {(k+rho)/p})).
/// `f[k]` holds f(k); requires 0 < rho < 1.
BigFloat signed_periodic_split(std::span<const Rational> f, const Rational& rho, const BigFloat& s,
                               unsigned digits = kDefaultDigits);

}  // namespace seifinv
