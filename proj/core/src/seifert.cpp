#include "seifinv/seifert.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string>

namespace seifinv {

namespace {

Rational compute_ell(const Orbifold& base, long b, const std::vector<long>& betas) {
  Rational ell(b);
  for (std::size_t i = 0; i < betas.size(); ++i) ell += Rational(betas[i], base.alphas()[i]);
  return ell;
}

long parse_long(std::string_view text, std::size_t offset, std::string_view whole) {
  long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw std::invalid_argument("expected an integer at position " + std::to_string(offset) + " of '" +
                                std::string(whole) + "'");
  }
  return value;
}

}  // namespace

SeifertData::SeifertData(Orbifold base, long smooth_degree, std::vector<long> betas)
    : base_(std::move(base)), smooth_degree_(smooth_degree), betas_(std::move(betas)) {
  if (betas_.size() != base_.num_cone_points()) {
    throw std::invalid_argument("SeifertData: need one beta per singular fiber");
  }
  for (std::size_t i = 0; i < betas_.size(); ++i) {
    const long a = base_.alphas()[i];
    if (betas_[i] <= 0 || betas_[i] >= a || std::gcd(a, betas_[i]) != 1) {
      throw std::invalid_argument("SeifertData: invalid pair " + std::to_string(a) + "/" +
                                  std::to_string(betas_[i]) + " (need 0 < beta < alpha, coprime)");
    }
  }
  ell_ = compute_ell(base_, smooth_degree_, betas_);
}

void require_brieskorn_triple(long a, long b, long c) {
  for (long x : {a, b, c}) {
    if (x < 2) throw std::invalid_argument("Brieskorn exponents must be >= 2, got " + std::to_string(x));
  }
  if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) {
    throw std::invalid_argument("Brieskorn exponents must be pairwise coprime: " + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c));
  }
}

SeifertData brieskorn(long a, long b, long c) {
  require_brieskorn_triple(a, b, c);
  const std::vector<long> alphas{a, b, c};
  std::vector<long> betas;
  for (std::size_t i = 0; i < 3; ++i) {
    long others = 1;
    for (std::size_t j = 0; j < 3; ++j) {
      if (j != i) others = (others * (alphas[j] % alphas[i])) % alphas[i];
    }
    betas.push_back(mod_floor(-mod_inverse(others, alphas[i]), alphas[i]));
  }
  Orbifold base(0, alphas);
  const Rational ell(Integer(-1), Integer(a) * b * c);
  Rational rest = ell;
  for (std::size_t i = 0; i < 3; ++i) rest -= Rational(betas[i], alphas[i]);
  if (!rest.is_integer() || !rest.num().fits_slong_p()) {
    throw std::logic_error("brieskorn: smooth degree is not an integer");
  }
  return SeifertData(std::move(base), rest.num().get_si(), std::move(betas));
}

bool is_homology_sphere(const SeifertData& N) {
  const auto& al = N.alphas();
  for (std::size_t i = 0; i < al.size(); ++i) {
    for (std::size_t j = i + 1; j < al.size(); ++j) {
      if (std::gcd(al[i], al[j]) != 1) return false;
    }
  }
  if (N.genus() != 0) return false;
  Integer prod = 1;
  for (long a : al) prod *= a;
  return abs(N.ell()) * Rational(prod) == Rational(1);
}

bool degree_zero_guard(const SeifertData& N) { return N.ell().sign() != 0; }

std::vector<long> parse_triple(std::string_view text) {
  std::vector<long> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_long(text.substr(start, end - start), start, text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() != 3) {
    throw std::invalid_argument("expected three comma-separated integers, got '" + std::string(text) + "'");
  }
  return out;
}

SeifertData parse_seifert(std::string_view text) {
  const std::size_t c1 = text.find(':');
  const std::size_t c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) {
    throw std::invalid_argument("expected g:b:a1/b1,..., got '" + std::string(text) + "'");
  }
  const long g = parse_long(text.substr(0, c1), 0, text);
  const long b = parse_long(text.substr(c1 + 1, c2 - c1 - 1), c1 + 1, text);
  std::vector<long> alphas, betas;
  std::size_t start = c2 + 1;
  while (start < text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    const std::string_view item = text.substr(start, end - start);
    const std::size_t slash = item.find('/');
    if (slash == std::string_view::npos) {
      throw std::invalid_argument("expected alpha/beta at position " + std::to_string(start) + " of '" +
                                  std::string(text) + "'");
    }
    alphas.push_back(parse_long(item.substr(0, slash), start, text));
    betas.push_back(parse_long(item.substr(slash + 1), start + slash + 1, text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return SeifertData(Orbifold(g, std::move(alphas)), b, std::move(betas));
}

}  // namespace seifinv
