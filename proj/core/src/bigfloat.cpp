#include "seifinv/bigfloat.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace seifinv {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

double rounding_unit(const BigFloat& x) {
  if (x.is_zero()) return 0.0;
  return std::fabs(x.to_double()) * std::ldexp(1.0, -static_cast<int>(mpfr_get_prec(x.raw())));
}

}  // namespace

mpfr_prec_t BigFloat::bits_for(unsigned digits) {
  // log2(10) ~ 3.3219; 32 guard bits absorb accumulated rounding in the series.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 32;
}

double BigFloat::ulp_for(unsigned digits) { return std::pow(10.0, -static_cast<double>(digits)); }

BigFloat::BigFloat(unsigned digits) : digits_(digits) {
  if (digits == 0) throw std::invalid_argument("BigFloat: precision must be positive");
  mpfr_init2(value_, bits_for(digits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, unsigned digits) : BigFloat(digits) { mpfr_set_si(value_, value, kRnd); }

BigFloat::BigFloat(const Rational& value, unsigned digits) : BigFloat(digits) {
  const int inexact = mpfr_set_q(value_, value.gmp().get_mpq_t(), kRnd);
  error_ = inexact ? rounding_unit(*this) : 0.0;
}

BigFloat::BigFloat(const BigFloat& other) : digits_(other.digits_), error_(other.error_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRnd);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : digits_(other.digits_), error_(other.error_) {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this == &other) return *this;
  digits_ = other.digits_;
  error_ = other.error_;
  mpfr_set_prec(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRnd);
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) {
    digits_ = other.digits_;
    error_ = other.error_;
    mpfr_swap(value_, other.value_);
  }
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::parse(std::string_view text, unsigned digits) {
  std::string t(text.substr(0, text.find('@')));
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
  if (t.find('/') != std::string::npos) return BigFloat(Rational::parse(t), digits);
  BigFloat out(digits);
  char* end = nullptr;
  int inexact = 0;
  if (!t.empty()) inexact = mpfr_strtofr(out.value_, t.c_str(), &end, 10, kRnd);
  if (t.empty() || end == t.c_str() || *end != '\0') {
    throw std::invalid_argument("BigFloat: cannot parse '" + std::string(text) + "'");
  }
  out.error_ = inexact ? rounding_unit(out) : 0.0;
  return out;
}

BigFloat BigFloat::with_error(double err) const {
  BigFloat out(*this);
  out.error_ = err;
  return out;
}

BigFloat BigFloat::rounded(unsigned digits) const {
  BigFloat out(digits);
  const int inexact = mpfr_set(out.value_, value_, kRnd);
  out.error_ = error_ + (inexact ? rounding_unit(out) : 0.0);
  return out;
}

double BigFloat::to_double() const { return mpfr_get_d(value_, kRnd); }
bool BigFloat::is_zero() const { return mpfr_zero_p(value_) != 0; }
int BigFloat::sign() const { return mpfr_sgn(value_); }

bool BigFloat::equals(const Rational& r) const {
  return mpfr_cmp_q(value_, r.gmp().get_mpq_t()) == 0;
}

std::string BigFloat::str() const { return str(digits_); }

std::string BigFloat::str(unsigned shown_digits) const {
  std::vector<char> buf(shown_digits + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(shown_digits - 1), value_);
  return std::string(buf.data()) + "@" + std::to_string(digits_);
}

BigFloat BigFloat::operator-() const {
  BigFloat out(*this);
  mpfr_neg(out.value_, out.value_, kRnd);
  return out;
}

namespace {

BigFloat make_result(const BigFloat& a, const BigFloat& b) {
  return BigFloat(std::max(a.digits(), b.digits()));
}

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat out = make_result(a, b);
  const int inexact = mpfr_add(out.value_, a.value_, b.value_, kRnd);
  out.error_ = a.error_ + b.error_ + (inexact ? rounding_unit(out) : 0.0);
  return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat out = make_result(a, b);
  const int inexact = mpfr_sub(out.value_, a.value_, b.value_, kRnd);
  out.error_ = a.error_ + b.error_ + (inexact ? rounding_unit(out) : 0.0);
  return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat out = make_result(a, b);
  const int inexact = mpfr_mul(out.value_, a.value_, b.value_, kRnd);
  out.error_ = std::fabs(a.to_double()) * b.error_ + std::fabs(b.to_double()) * a.error_ +
               a.error_ * b.error_ + (inexact ? rounding_unit(out) : 0.0);
  return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.is_zero()) throw std::domain_error("BigFloat: division by zero");
  BigFloat out = make_result(a, b);
  const int inexact = mpfr_div(out.value_, a.value_, b.value_, kRnd);
  const double bd = std::fabs(b.to_double());
  out.error_ = (a.error_ + std::fabs(out.to_double()) * b.error_) / bd + (inexact ? rounding_unit(out) : 0.0);
  return out;
}

int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.value_, b.value_); }

std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(); }

BigFloat abs(const BigFloat& x) { return x.sign() < 0 ? -x : x; }

BigFloat pow(const BigFloat& x, const BigFloat& y) {
  if (x.sign() <= 0) throw std::domain_error("BigFloat pow: base must be positive");
  BigFloat out(std::max(x.digits(), y.digits()));
  const int inexact = mpfr_pow(out.raw(), x.raw(), y.raw(), kRnd);
  // d(x^y) = y x^(y-1) dx + x^y ln(x) dy
  const double v = std::fabs(out.to_double());
  const double xd = x.to_double();
  const double err = v * (std::fabs(y.to_double() / xd) * x.error() + std::fabs(std::log(xd)) * y.error());
  return out.with_error(err + (inexact ? rounding_unit(out) : 0.0));
}

BigFloat pi(unsigned digits) {
  BigFloat out(digits);
  mpfr_const_pi(out.raw(), kRnd);
  return out.with_error(rounding_unit(out));
}

double abs_diff(const BigFloat& a, const BigFloat& b) { return std::fabs((a - b).to_double()); }

}  // namespace seifinv
