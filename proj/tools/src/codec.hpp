#pragma once

#include "json.hpp"

#include "seifinv/laurent.hpp"
#include "seifinv/orbifold.hpp"
#include "seifinv/quadratic_form.hpp"
#include "seifinv/rational.hpp"
#include "seifinv/seifert.hpp"

namespace seifinv::cli {

using nlohmann::json;

/// "p/q", or "p" when q = 1.
json encode(const Rational& r);
Rational decode_rational(const json& j);

/// {"genus": g, "alphas": [...], "bundle": {"smooth_degree": b, "gammas": [...]}}
json encode(const VLineBundle& L);
VLineBundle decode_bundle(const json& j);

/// {"genus", "smooth_degree", "alphas", "betas", "ell"}
json encode(const SeifertData& N);

/// {"text": "T^-1 + T", "terms": {"-1": 1, "1": 1}}
json encode(const LaurentPolynomial& P);
LaurentPolynomial decode_polynomial(const json& j);

/// Array of integer rows.
json encode(const IntegerQuadraticForm& q);

}  // namespace seifinv::cli
