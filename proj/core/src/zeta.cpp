#include "seifinv/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace seifinv {

namespace {

// Extra decimal digits carried internally so the final rounding dominates.
constexpr unsigned kGuardDigits = 10;

Rational factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

BigFloat euler_maclaurin(const BigFloat& s, const Rational& a, unsigned digits) {
  const unsigned work = digits + kGuardDigits;
  const double s_abs = std::fabs(s.to_double());
  const long shift = static_cast<long>(std::max<double>(digits, std::ceil(2.0 * s_abs))) + 8;

  const BigFloat one(1L, work);
  const BigFloat neg_s = -s.rounded(work);

  BigFloat sum(work);
  for (long n = 0; n < shift; ++n) {
    sum += pow(BigFloat(Rational(n) + a, work), neg_s);
  }

  const BigFloat x(Rational(shift) + a, work);
  const BigFloat x_neg_s = pow(x, neg_s);
  sum += x * x_neg_s / (s.rounded(work) - one);  // x^(1-s)/(s-1)
  sum += x_neg_s * BigFloat(Rational(1, 2), work);

  // t_k = B_2k/(2k)! * s(s+1)...(s+2k-2) * x^(-s-2k+1)
  const BigFloat inv_x2 = one / (x * x);
  BigFloat poch = s.rounded(work);
  BigFloat power = x_neg_s / x;
  const double tol = BigFloat::ulp_for(digits + 3);
  const unsigned max_terms = 4 * digits + 40;
  double truncation = -1.0;
  for (unsigned k = 1; k <= max_terms; ++k) {
    const Rational coeff = bernoulli(2 * k) / factorial(2 * k);
    const BigFloat term = BigFloat(coeff, work) * poch * power;
    const double mag = std::fabs(term.to_double());
    if (term.is_zero() || mag < tol) {
      truncation = mag;
      break;
    }
    sum += term;
    const BigFloat s_work = s.rounded(work);
    poch = poch * (s_work + BigFloat(static_cast<long>(2 * k - 1), work)) *
           (s_work + BigFloat(static_cast<long>(2 * k), work));
    power = power * inv_x2;
  }
  if (truncation < 0.0) {
    throw std::runtime_error("hurwitz_zeta: Euler-Maclaurin corrections did not converge");
  }
  return sum.with_error(sum.error() + truncation).rounded(digits);
}

}  // namespace

BigFloat hurwitz_zeta(const BigFloat& s, const Rational& a, unsigned digits) {
  if (a.sign() <= 0) {
    throw std::domain_error("hurwitz_zeta: parameter a must be positive, got " + a.str());
  }
  const BigFloat dist = abs(s - BigFloat(1L, digits));
  if (dist.to_double() < BigFloat::ulp_for(digits)) {
    throw std::domain_error("hurwitz_zeta: s is within 10^-" + std::to_string(digits) +
                            " of the pole at s = 1");
  }
  if (s.equals(Rational(0))) return BigFloat(Rational(1, 2) - a, digits);
  if (s.equals(Rational(-1))) {
    return BigFloat(Rational(-1, 12) + a * (Rational(1) - a) / Rational(2), digits);
  }
  return euler_maclaurin(s, a, digits);
}

BigFloat riemann_zeta(const BigFloat& s, unsigned digits) { return hurwitz_zeta(s, Rational(1), digits); }

BigFloat periodic_dirichlet_split(std::span<const Rational> f, const BigFloat& s, unsigned digits) {
  if (f.empty()) throw std::invalid_argument("periodic_dirichlet_split: period must be >= 1");
  const long p = static_cast<long>(f.size());
  const BigFloat p_neg_s = pow(BigFloat(p, digits), -s);
  BigFloat total(digits);
  for (long r = 1; r <= p; ++r) {
    const Rational& fr = f[static_cast<std::size_t>(r - 1)];
    if (fr.sign() == 0) continue;
    total += BigFloat(fr, digits) * hurwitz_zeta(s, Rational(r, p), digits);
  }
  return total * p_neg_s;
}

BigFloat signed_periodic_split(std::span<const Rational> f, const Rational& rho, const BigFloat& s,
                               unsigned digits) {
  if (rho.sign() <= 0 || rho >= Rational(1)) {
    throw std::domain_error("signed_periodic_split: rho must lie in (0,1), got " + rho.str());
  }
  if (f.empty()) throw std::invalid_argument("signed_periodic_split: period must be >= 1");
  const long p = static_cast<long>(f.size());
  const BigFloat p_neg_s = pow(BigFloat(p, digits), -s);
  BigFloat total(digits);
  for (long k = 0; k < p; ++k) {
    const Rational& fk = f[static_cast<std::size_t>(k)];
    if (fk.sign() == 0) continue;
    const Rational u = frac((Rational(k) + rho) / Rational(p));
    total += BigFloat(fk, digits) *
             (hurwitz_zeta(s, u, digits) - hurwitz_zeta(s, Rational(1) - u, digits));
  }
  return total * p_neg_s;
}

}  // namespace seifinv
