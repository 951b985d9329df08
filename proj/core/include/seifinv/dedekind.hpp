#pragma once

#include <span>

#include "seifinv/rational.hpp"

namespace seifinv {

/// Arguments of a Dedekind-Rademacher sum s(beta, alpha; x, y).
///
/// Construction validates gcd(beta, alpha) = 1 and alpha > 0. The sum only
/// depends on x and y modulo 1.
class DRInput {
 public:
  DRInput(long beta, long alpha, Rational x = Rational(0), Rational y = Rational(0));

  long beta() const { return beta_; }
  long alpha() const { return alpha_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  /// The pair with roles exchanged: (alpha, beta; y, x). Requires beta > 0.
  DRInput swapped() const;

 private:
  long beta_;
  long alpha_;
  Rational x_;
  Rational y_;
};

/// s(beta, alpha; x, y) = sum_{r=1}^{alpha} ((x + beta (r+y)/alpha)) (((r+y)/alpha)),
/// evaluated term by term in O(alpha).
Rational dr_sum_direct(const DRInput& in);

/// Right-hand side R(beta, alpha; x, y) of the reciprocity law
///   s(beta, alpha; x, y) + s(alpha, beta; y, x) = R(beta, alpha; x, y).
/// Uses the integer-argument branch when both x and y are integers
/// (decided exactly), the psi_2 branch otherwise. Requires beta > 0.
Rational reciprocity_R(const DRInput& in);

/// Same value as dr_sum_direct, computed Euclid-style in O(log alpha) steps:
/// shift beta into (-alpha/2, alpha/2], fold its sign through parity, swap
/// with reciprocity, stop at alpha = 1.
Rational dr_sum_fast(const DRInput& in);

/// S^{sign} = sum_{r=1}^{alpha} {(gamma + sign r beta)/alpha} ((r/alpha)).
///
/// The direct sum is cross-checked against
///   s(sign beta, alpha; gamma/alpha, 0) + sign/2 ((q gamma/alpha)),  q = beta^-1 mod alpha,
/// and std::logic_error is raised on disagreement.
Rational corner_sum(long alpha, long beta, long gamma, int sign);

/// Componentwise data (alpha_i, beta_i, gamma_i) for the composite sums below.
struct SingularData {
  std::span<const long> alphas;
  std::span<const long> betas;
  std::span<const long> gammas;
};

/// S(beta, alpha; gamma) = sum_i s(beta_i, alpha_i; gamma_i/alpha_i, 0).
Rational S_composite(const SingularData& d);

/// d(beta, alpha; gamma) = sum_i ((q_i gamma_i / alpha_i)), q_i beta_i = 1 mod alpha_i.
Rational d_composite(const SingularData& d);

/// S_rho(beta, alpha; gamma) = sum_i s(beta_i, alpha_i; (gamma_i + beta_i rho)/alpha_i, -rho).
Rational S_rho(const SingularData& d, const Rational& rho);

/// F_rho(alpha, beta, gamma) = {(q gamma + rho)/alpha}, q beta = 1 mod alpha.
Rational F_rho(long alpha, long beta, long gamma, const Rational& rho);

/// sum_i F_rho(alpha_i, beta_i, gamma_i).
Rational F_rho(const SingularData& d, const Rational& rho);

}  // namespace seifinv
