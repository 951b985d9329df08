#pragma once

#include "seifinv/bigfloat.hpp"
#include "seifinv/orbifold.hpp"
#include "seifinv/rational.hpp"
#include "seifinv/seifert.hpp"

namespace seifinv {

/// A Seifert fibration N together with the coupling bundle L(c; gamma) on its
/// base. rho = (deg K - 2c)/(2 ell) is computed on construction; ell = 0 is
/// rejected with std::domain_error.
class EtaContext {
 public:
  EtaContext(SeifertData N, VLineBundle L);

  /// Context for the canonical representative of the class of `class_rep`.
  static EtaContext canonical(const SeifertData& N, const VLineBundle& class_rep);

  /// Canonical representative of the trivial class.
  static EtaContext trivial_class(const SeifertData& N);

  const SeifertData& seifert() const { return N_; }
  const VLineBundle& bundle() const { return L_; }
  const Rational& rho() const { return rho_; }
  const Rational& ell() const { return N_.ell(); }

  /// rho in [0,1), i.e. L is the canonical representative of its class.
  bool is_canonical() const;

 private:
  SeifertData N_;
  VLineBundle L_;
  Rational rho_;
};

/// eta(0) of the Dirac operator coupled to the pullback of L:
///   ell/6 - sum_i (S_i^+ - S_i^-)  =  ell/6 - 2 S(beta, alpha; gamma) - d(beta, alpha; gamma).
/// Both forms are evaluated; std::logic_error if they disagree.
Rational eta_zero_pullback(const EtaContext& ctx);

/// One fiber's share S^+ - S^- of the pullback sum, for gamma mod alpha.
/// Also evaluated as 2 s(beta, alpha; gamma/alpha, 0) + ((q gamma/alpha)),
/// q beta = 1 mod alpha; std::logic_error if the two differ.
Rational pullback_fiber_term(long alpha, long beta, long gamma);

/// sum_i sum_{k=0}^{alpha_i-1} {(gamma_i - k beta_i)/alpha_i} (1 - 2{(k + rho)/alpha_i}).
Rational flat_double_sum(const EtaContext& ctx);

/// eta(0) for the determinant-flat connection on the canonical representative.
/// rho = 0 reduces to eta_zero_pullback. For 0 < rho < 1 the value
///   (deg K - deg|K|)/2 (1 - 2 rho) - flat_double_sum - ell rho (1 - rho) + ell/6
/// is cross-checked against the Dedekind-Rademacher form
///   (...) + m rho - 2 S_rho - F_rho.
/// Throws std::invalid_argument when the context is not canonical.
Rational eta_zero_flat(const EtaContext& ctx);

/// Eta function at real s, numerically. Canonical contexts with 0 < rho < 1 use
/// the signed Hurwitz splitting; rho = 0 uses the pullback series.
BigFloat eta_series(const EtaContext& ctx, const BigFloat& s, unsigned digits = kDefaultDigits);

/// Pullback series -2 ell zeta(s-1) + sum_i alpha_i^-s sum_r ({(g+r b)/a} - {(g-r b)/a}) zeta(s, r/a),
/// valid for any coupling bundle.
BigFloat eta_series_pullback(const EtaContext& ctx, const BigFloat& s, unsigned digits = kDefaultDigits);

/// Levi-Civita Dirac operator of the rescaled metric:
///   eta(D0) + (ell/6)(ell^2 r^4 - chi r^2),  chi = -deg K.
/// Requires a homology sphere and r in (0, 1].
Rational eta_dirac_levicivita(const SeifertData& N, const Rational& r);

/// Same, given the trivial-class context explicitly (it is checked).
Rational eta_dirac_levicivita(const EtaContext& ctx, const Rational& r);

/// ell/3 - sign(ell) - 4 S(beta, alpha; 0).
Rational eta_signature_constant(const SeifertData& N);

/// -(2 ell/3)(ell^2 r^4 - chi r^2) + ell/3 - sign(ell) - 4 S(beta, alpha; 0).
Rational eta_signature(const SeifertData& N, const Rational& r);

/// F(N) = 4 eta(D0) + ell/3 - sign(ell) - 4 S(beta, alpha; 0). Homology spheres only.
Rational froyshov_F(const SeifertData& N);

/// F(N) is divisible by 8.
bool rohlin_check(const SeifertData& N);

}  // namespace seifinv
