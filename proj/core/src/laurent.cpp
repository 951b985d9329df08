#include "seifinv/laurent.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace seifinv {

namespace {

std::string render(const std::map<long, long>& terms, bool tex) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    long mag = c;
    if (first) {
      if (c < 0) {
        out += "-";
        mag = -c;
      }
    } else {
      out += tex ? (c < 0 ? "-" : "+") : (c < 0 ? " - " : " + ");
      mag = c < 0 ? -c : c;
    }
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "T";
    if (e != 1) out += tex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LaurentPolynomial run() {
    LaurentPolynomial p;
    skip_blanks();
    if (pos_ < text_.size() && text_[pos_] == '0' && rest_is_blank(pos_ + 1)) return p;
    bool first = true;
    while (true) {
      skip_blanks();
      if (pos_ >= text_.size()) {
        if (first) fail("empty polynomial");
        break;
      }
      long sign = 1;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_blanks();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      long coeff = 1;
      bool have_coeff = false;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        coeff = read_long();
        have_coeff = true;
      }
      long exponent = 0;
      if (pos_ < text_.size() && text_[pos_] == 'T') {
        ++pos_;
        exponent = 1;
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          const bool braced = pos_ < text_.size() && text_[pos_] == '{';
          if (braced) ++pos_;
          exponent = read_long();
          if (braced) {
            if (pos_ >= text_.size() || text_[pos_] != '}') fail("expected '}'");
            ++pos_;
          }
        }
      } else if (!have_coeff) {
        fail("expected a coefficient or 'T'");
      }
      p.add_term(exponent, sign * coeff);
    }
    return p;
  }

 private:
  void skip_blanks() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool rest_is_blank(std::size_t from) const {
    for (std::size_t i = from; i < text_.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text_[i]))) return false;
    }
    return true;
  }
  long read_long() {
    long v = 0;
    const char* begin = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), v);
    if (ec != std::errc() || ptr == begin) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("Laurent polynomial parse error at position " + std::to_string(pos_) + ": " +
                                what + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial LaurentPolynomial::monomial(long exponent, long coefficient) {
  LaurentPolynomial p;
  p.add_term(exponent, coefficient);
  return p;
}

LaurentPolynomial LaurentPolynomial::parse(std::string_view text) { return Parser(text).run(); }

long LaurentPolynomial::coefficient(long exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

long LaurentPolynomial::value_at_one() const {
  long total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

void LaurentPolynomial::add_term(long exponent, long coefficient) {
  if (coefficient == 0) return;
  const long updated = (terms_[exponent] += coefficient);
  if (updated == 0) terms_.erase(exponent);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(long k) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

std::string LaurentPolynomial::str() const { return render(terms_, false); }

std::string LaurentPolynomial::latex() const { return render(terms_, true); }

}  // namespace seifinv
