#pragma once

#include <vector>

#include "seifinv/rational.hpp"

namespace seifinv {

/// Closed oriented 2-orbifold: a genus-g surface with cone points of orders
/// alpha_i >= 2. Cone point locations are not modelled; nothing computed
/// here depends on them.
class Orbifold {
 public:
  Orbifold(long genus, std::vector<long> alphas);

  long genus() const { return genus_; }
  const std::vector<long>& alphas() const { return alphas_; }
  std::size_t num_cone_points() const { return alphas_.size(); }

  friend bool operator==(const Orbifold&, const Orbifold&) = default;

 private:
  long genus_;
  std::vector<long> alphas_;
};

/// Line V-bundle L over an orbifold, stored as (deg|L|, gamma) with
/// 0 <= gamma_i < alpha_i. The rational degree is derived:
///   deg L = deg|L| + sum_i gamma_i / alpha_i.
class VLineBundle {
 public:
  VLineBundle(Orbifold base, long smooth_degree, std::vector<long> gammas);

  /// Trivial bundle (0; 0, ..., 0).
  static VLineBundle trivial(const Orbifold& base);

  /// Normalizes an arbitrary representative (b; g_1, ..., g_m): residues are
  /// reduced mod alpha_i and the integer carries absorbed into deg|L|.
  static VLineBundle normalized(const Orbifold& base, long smooth_degree, std::vector<long> gammas);

  const Orbifold& base() const { return base_; }
  long smooth_degree() const { return smooth_degree_; }
  const std::vector<long>& gammas() const { return gammas_; }

  friend bool operator==(const VLineBundle&, const VLineBundle&) = default;

 private:
  Orbifold base_;
  long smooth_degree_;
  std::vector<long> gammas_;
};

Rational rational_degree(const VLineBundle& L);

/// K: deg|K| = 2g - 2, singularity data (alpha_i - 1).
VLineBundle canonical_bundle(const Orbifold& S);

/// chi = 2 - 2g - sum (1 - 1/alpha_i) = -deg K.
Rational euler_characteristic(const Orbifold& S);

/// Tensor product. Throws std::invalid_argument when the bases differ.
VLineBundle add_bundles(const VLineBundle& a, const VLineBundle& b);
VLineBundle scale_bundle(const VLineBundle& L, long k);
inline VLineBundle negate_bundle(const VLineBundle& L) { return scale_bundle(L, -1); }

/// True iff the pair (c, gamma) comes from a line V-bundle, i.e.
/// c - sum gamma_i/alpha_i is an integer.
bool is_realizable(const Orbifold& base, const Rational& degree, const std::vector<long>& gammas);

/// Riemann-Roch-Kawasaki index h0(L) - h0(K - L) = 1 - g + deg|L|.
long rrk_index(const VLineBundle& L);

/// Fiber holonomy theta = {c/ell} with c = deg L, ell = deg L0 != 0.
Rational holonomy_theta(const VLineBundle& L, const VLineBundle& L0);

/// rho(L) = (deg K - 2 deg L) / (2 ell).
Rational rho_invariant(const VLineBundle& L, const VLineBundle& L0);

struct CanonicalRepresentative {
  VLineBundle bundle;
  long shift;   // k with bundle = class_rep + k L0
  Rational rho; // in [0,1)
};

/// Unique L' = class_rep + k L0 with rho(L') in [0,1).
/// Throws std::domain_error when deg L0 = 0.
CanonicalRepresentative canonical_representative(const VLineBundle& class_rep, const VLineBundle& L0);

}  // namespace seifinv
