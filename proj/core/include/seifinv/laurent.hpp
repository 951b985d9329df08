#pragma once

#include <map>
#include <string>
#include <string_view>

namespace seifinv {

/// Integer Laurent polynomial in T. Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  /// c T^e.
  static LaurentPolynomial monomial(long exponent, long coefficient = 1);

  /// Parses the output format of str(): "0", "T^-1", "2T + T^3 - 4", ...
  static LaurentPolynomial parse(std::string_view text);

  long coefficient(long exponent) const;
  const std::map<long, long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Sum of coefficients.
  long value_at_one() const;

  void add_term(long exponent, long coefficient);
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  /// T^k * this.
  LaurentPolynomial shifted(long k) const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Ascending exponents, e.g. "T^-1 + 2T + T^3"; "0" for the zero polynomial.
  std::string str() const;

  /// Same ordering with TeX exponents: "T^{-1}+2T+T^{3}".
  std::string latex() const;

 private:
  std::map<long, long> terms_;
};

}  // namespace seifinv
