#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "seifinv/rational.hpp"

namespace seifinv {

/// Default working precision, in decimal digits, for every numeric entry point.
inline constexpr unsigned kDefaultDigits = 30;

/// Arbitrary-precision binary float with an explicit decimal precision and a
/// running absolute error estimate.
///
/// Precision is a per-value property: binary operations produce a result at
/// the larger of the two operand precisions. The error estimate is first
/// order (|a|·err_b + |b|·err_a for products) plus one rounding unit, which
/// is what the zeta series needs to report convergence honestly.
class BigFloat {
 public:
  explicit BigFloat(unsigned digits = kDefaultDigits);
  BigFloat(long value, unsigned digits);
  BigFloat(const Rational& value, unsigned digits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  /// Parses decimal text ("1.5", "-2e-3", "1/3"); "@d" suffixes are ignored
  /// in favour of the explicit `digits` argument.
  static BigFloat parse(std::string_view text, unsigned digits);

  unsigned digits() const { return digits_; }
  double error() const { return error_; }
  BigFloat with_error(double err) const;
  /// Same value re-rounded to `digits` decimal digits.
  BigFloat rounded(unsigned digits) const;

  double to_double() const;
  bool is_zero() const;
  int sign() const;
  /// True when the value equals `r` exactly (compared as binary fractions).
  bool equals(const Rational& r) const;

  /// Scientific notation with `digits()` significant digits and a precision
  /// tag, e.g. "1.64493406684822643647241516665e+00@30".
  std::string str() const;
  /// Same as str() but with a caller-chosen number of significant digits.
  std::string str(unsigned shown_digits) const;

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }

  friend int compare(const BigFloat& a, const BigFloat& b);
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw() { return value_; }

  /// Bits of binary precision used for `digits` decimal digits (with guard bits).
  static mpfr_prec_t bits_for(unsigned digits);
  /// One unit in the last requested decimal place: 10^-digits.
  static double ulp_for(unsigned digits);

 private:
  unsigned digits_;
  double error_ = 0.0;
  mpfr_t value_;
};

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

BigFloat abs(const BigFloat& x);
/// x^y for x > 0.
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat pi(unsigned digits);
/// |a - b| as a double (for tolerance checks).
double abs_diff(const BigFloat& a, const BigFloat& b);

}  // namespace seifinv
