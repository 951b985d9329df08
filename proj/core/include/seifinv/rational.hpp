#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace seifinv {

using Integer = mpz_class;

/// Exact fraction with arbitrary-precision numerator and denominator.
///
/// Always stored reduced with a positive denominator, so equality is
/// structural. Division by zero throws std::domain_error; everything else
/// is total.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : q_(n) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& n) : q_(n) {}
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den);

  /// Parses "p/q" or "p" (optional leading sign, surrounding blanks ignored).
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Integer floor() const;
  Integer ceil() const;
  double to_double() const { return q_.get_d(); }
  const mpq_class& gmp() const { return q_; }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& x);

/// Fractional part {x} in [0,1).
Rational frac(const Rational& x);

/// Sawtooth ((x)): {x} - 1/2 off the integers, 0 on them. Odd and 1-periodic.
Rational sawtooth(const Rational& x);

/// psi_2(x) = B_2({x}) with B_2(z) = z^2 - z + 1/6.
Rational psi2(const Rational& x);

/// Exact Bernoulli number B_n (B_1 = -1/2). Results are memoized.
Rational bernoulli(unsigned n);

/// Inverse of b modulo a (a >= 1), in [0, a). Throws if gcd(a, b) != 1.
long mod_inverse(long b, long a);

/// Least non-negative residue of x modulo m > 0.
inline long mod_floor(long x, long m) {
  const long r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace seifinv
