#include "seifinv/rational.hpp"

#include <cctype>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace seifinv {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [](std::string_view s, std::string_view whole) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) {
      throw std::invalid_argument("Rational: expected an integer in '" + std::string(whole) + "'");
    }
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
        throw std::invalid_argument("Rational: unexpected character '" + std::string(1, s[j]) +
                                    "' in '" + std::string(whole) + "'");
      }
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits);
  };
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(t, text));
  const Integer den = parse_int(trim(t.substr(slash + 1)), text);
  if (den == 0) throw std::domain_error("Rational: zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(trim(t.substr(0, slash)), text), den);
}

Integer Rational::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Integer Rational::ceil() const {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational frac(const Rational& x) { return x - Rational(x.floor()); }

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return frac(x) - Rational(1, 2);
}

Rational psi2(const Rational& x) {
  const Rational z = frac(x);
  return z * z - z + Rational(1, 6);
}

Rational bernoulli(unsigned n) {
  // Recurrence sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1.
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard lock(mu);
  while (cache.size() <= n) {
    const unsigned m = static_cast<unsigned>(cache.size());
    Rational acc;
    Integer binom = 1;  // C(m+1, k)
    for (unsigned k = 0; k < m; ++k) {
      acc += Rational(binom) * cache[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    cache.push_back(-acc / Rational(Integer(m + 1)));
  }
  return cache[n];
}

long mod_inverse(long b, long a) {
  if (a <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
  if (a == 1) return 0;
  long r0 = a, r1 = mod_floor(b, a);
  long t0 = 0, t1 = 1;
  while (r1 != 0) {
    const long q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  if (r0 != 1) {
    throw std::invalid_argument("mod_inverse: " + std::to_string(b) + " is not invertible mod " +
                                std::to_string(a));
  }
  return mod_floor(t0, a);
}

}  // namespace seifinv
