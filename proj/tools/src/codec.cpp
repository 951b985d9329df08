#include "codec.hpp"

#include <stdexcept>
#include <string>

namespace seifinv::cli {

json encode(const Rational& r) { return r.str(); }

Rational decode_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("expected a rational string \"p/q\"");
  return Rational::parse(j.get<std::string>());
}

json encode(const VLineBundle& L) {
  return json{{"genus", L.base().genus()},
              {"alphas", L.base().alphas()},
              {"bundle", {{"smooth_degree", L.smooth_degree()}, {"gammas", L.gammas()}}}};
}

VLineBundle decode_bundle(const json& j) {
  Orbifold base(j.at("genus").get<long>(), j.at("alphas").get<std::vector<long>>());
  const json& b = j.at("bundle");
  return VLineBundle(std::move(base), b.at("smooth_degree").get<long>(), b.at("gammas").get<std::vector<long>>());
}

json encode(const SeifertData& N) {
  return json{{"genus", N.genus()},
              {"smooth_degree", N.smooth_degree()},
              {"alphas", N.alphas()},
              {"betas", N.betas()},
              {"ell", encode(N.ell())}};
}

json encode(const LaurentPolynomial& P) {
  json terms = json::object();
  for (const auto& [e, c] : P.terms()) terms[std::to_string(e)] = c;
  return json{{"text", P.str()}, {"terms", terms}};
}

LaurentPolynomial decode_polynomial(const json& j) {
  if (j.is_string()) return LaurentPolynomial::parse(j.get<std::string>());
  LaurentPolynomial P;
  for (const auto& [key, value] : j.at("terms").items()) P.add_term(std::stol(key), value.get<long>());
  return P;
}

json encode(const IntegerQuadraticForm& q) { return q.matrix(); }

}  // namespace seifinv::cli
