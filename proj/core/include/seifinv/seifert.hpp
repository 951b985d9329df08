#pragma once

#include <string_view>
#include <vector>

#include "seifinv/orbifold.hpp"
#include "seifinv/rational.hpp"

namespace seifinv {

/// Normalized Seifert invariant N(g; b; alpha_i/beta_i) of the circle bundle
/// of a line V-bundle L0 with deg|L0| = b and singularity data beta.
class SeifertData {
 public:
  /// Requires 0 < beta_i < alpha_i and gcd(alpha_i, beta_i) = 1.
  SeifertData(Orbifold base, long smooth_degree, std::vector<long> betas);

  const Orbifold& base() const { return base_; }
  long genus() const { return base_.genus(); }
  const std::vector<long>& alphas() const { return base_.alphas(); }
  const std::vector<long>& betas() const { return betas_; }
  long smooth_degree() const { return smooth_degree_; }

  /// ell = b + sum beta_i/alpha_i.
  const Rational& ell() const { return ell_; }

  /// The line V-bundle L0 whose circle bundle is N.
  VLineBundle l0() const { return VLineBundle(base_, smooth_degree_, betas_); }

  friend bool operator==(const SeifertData&, const SeifertData&) = default;

 private:
  Orbifold base_;
  long smooth_degree_;
  std::vector<long> betas_;
  Rational ell_;
};

/// Sigma(a,b,c) oriented as a singularity link: ell = -1/(abc) and
/// beta_i prod_{j != i} alpha_j = -1 mod alpha_i.
SeifertData brieskorn(long a, long b, long c);

/// Throws std::invalid_argument unless a, b, c >= 2 are pairwise coprime.
void require_brieskorn_triple(long a, long b, long c);

/// Pairwise coprime isotropies and |ell| prod alpha_i = 1.
bool is_homology_sphere(const SeifertData& N);

/// ell != 0.
bool degree_zero_guard(const SeifertData& N);

/// "a,b,c" -> {a, b, c}. Throws std::invalid_argument with the offending position.
std::vector<long> parse_triple(std::string_view text);

/// "g:b:a1/b1,a2/b2,..." (the list may be empty: "g:b:").
SeifertData parse_seifert(std::string_view text);

}  // namespace seifinv
