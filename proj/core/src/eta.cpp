#include "seifinv/eta.hpp"

#include <stdexcept>
#include <vector>

#include "seifinv/dedekind.hpp"
#include "seifinv/zeta.hpp"

namespace seifinv {

namespace {

SingularData singular_data(const EtaContext& ctx) {
  return SingularData{ctx.seifert().alphas(), ctx.seifert().betas(), ctx.bundle().gammas()};
}

// (deg K - deg|K|) / 2 = sum (1 - 1/alpha_i) / 2
Rational half_orbifold_excess(const Orbifold& S) {
  Rational t;
  for (long a : S.alphas()) t += Rational(1) - Rational(1, a);
  return t / Rational(2);
}

void require_homology_sphere(const SeifertData& N, const char* who) {
  if (!is_homology_sphere(N)) throw std::invalid_argument(std::string(who) + ": not a homology sphere");
}

void require_unit_interval(const Rational& r) {
  if (r.sign() <= 0 || r > Rational(1)) {
    throw std::domain_error("scale r must lie in (0,1], got " + r.str());
  }
}

Rational levi_civita_shift(const SeifertData& N, const Rational& r) {
  const Rational& ell = N.ell();
  const Rational chi = euler_characteristic(N.base());
  const Rational r2 = r * r;
  return ell * ell * r2 * r2 - chi * r2;
}

Rational signature_S(const SeifertData& N) {
  const std::vector<long> zeros(N.alphas().size(), 0);
  return S_composite(SingularData{N.alphas(), N.betas(), zeros});
}

}  // namespace

EtaContext::EtaContext(SeifertData N, VLineBundle L) : N_(std::move(N)), L_(std::move(L)) {
  if (!(L_.base() == N_.base())) throw std::invalid_argument("EtaContext: bundle lives on a different base");
  if (!degree_zero_guard(N_)) throw std::domain_error("EtaContext: the fibration has ell = 0");
  rho_ = rho_invariant(L_, N_.l0());
}

EtaContext EtaContext::canonical(const SeifertData& N, const VLineBundle& class_rep) {
  if (!degree_zero_guard(N)) throw std::domain_error("EtaContext: the fibration has ell = 0");
  auto rep = canonical_representative(class_rep, N.l0());
  return EtaContext(N, std::move(rep.bundle));
}

EtaContext EtaContext::trivial_class(const SeifertData& N) {
  return canonical(N, VLineBundle::trivial(N.base()));
}

bool EtaContext::is_canonical() const { return rho_.sign() >= 0 && rho_ < Rational(1); }

Rational eta_zero_pullback(const EtaContext& ctx) {
  const auto& al = ctx.seifert().alphas();
  const auto& be = ctx.seifert().betas();
  const auto& ga = ctx.bundle().gammas();
  Rational corner;
  for (std::size_t i = 0; i < al.size(); ++i) {
    corner += corner_sum(al[i], be[i], ga[i], +1) - corner_sum(al[i], be[i], ga[i], -1);
  }
  const Rational sixth = ctx.ell() / Rational(6);
  const Rational via_corner = sixth - corner;
  const SingularData d = singular_data(ctx);
  const Rational via_dedekind = sixth - Rational(2) * S_composite(d) - d_composite(d);
  if (via_corner != via_dedekind) {
    throw std::logic_error("eta_zero_pullback: corner form " + via_corner.str() + " != Dedekind form " +
                           via_dedekind.str());
  }
  return via_corner;
}

Rational pullback_fiber_term(long alpha, long beta, long gamma) {
  const Rational corner = corner_sum(alpha, beta, gamma, +1) - corner_sum(alpha, beta, gamma, -1);
  const long q = mod_inverse(mod_floor(beta, alpha), alpha);
  const Rational a(alpha);
  const Rational dedekind = Rational(2) * dr_sum_fast(DRInput(beta, alpha, Rational(gamma) / a)) +
                            sawtooth(Rational(q * mod_floor(gamma, alpha)) / a);
  if (corner != dedekind) {
    throw std::logic_error("pullback_fiber_term: corner form " + corner.str() + " != Dedekind form " +
                           dedekind.str());
  }
  return corner;
}

Rational flat_double_sum(const EtaContext& ctx) {
  const auto& al = ctx.seifert().alphas();
  const auto& be = ctx.seifert().betas();
  const auto& ga = ctx.bundle().gammas();
  const Rational& rho = ctx.rho();
  Rational total;
  if (rho.sign() < 0 || rho >= Rational(1)) {
    for (std::size_t i = 0; i < al.size(); ++i) {
      const Rational a(al[i]);
      for (long k = 0; k < al[i]; ++k) {
        total += frac(Rational(ga[i] - k * be[i]) / a) * (Rational(1) - Rational(2) * frac((Rational(k) + rho) / a));
      }
    }
    return total;
  }
  // rho = p/q in [0,1): {(k + rho)/alpha} = (kq + p)/(alpha q) for 0 <= k < alpha, so with
  // m_k = (gamma - k beta) mod alpha the i-th sum is
  //   (sum m_k ((alpha q - 2p) - 2kq)) / (alpha^2 q).
  const Integer p = rho.num(), q = rho.den();
  for (std::size_t i = 0; i < al.size(); ++i) {
    const long alpha = al[i];
    const long step = mod_floor(-be[i], alpha);
    long m = mod_floor(ga[i], alpha);
    Integer s1 = 0, s2 = 0;  // sum m_k, sum k m_k
    for (long k = 0; k < alpha; ++k) {
      s1 += static_cast<unsigned long>(m);
      s2 += static_cast<unsigned long>(k) * static_cast<unsigned long>(m);
      m += step;
      if (m >= alpha) m -= alpha;
    }
    const Integer c = Integer(alpha) * q - 2 * p;
    total += Rational(c * s1 - 2 * q * s2, Integer(alpha) * Integer(alpha) * q);
  }
  return total;
}

Rational eta_zero_flat(const EtaContext& ctx) {
  if (!ctx.is_canonical()) {
    throw std::invalid_argument("eta_zero_flat: context is not a canonical representative (rho = " +
                                ctx.rho().str() + ")");
  }
  const Rational& rho = ctx.rho();
  if (rho.sign() == 0) return eta_zero_pullback(ctx);

  const Rational& ell = ctx.ell();
  const Rational common = half_orbifold_excess(ctx.seifert().base()) * (Rational(1) - Rational(2) * rho) -
                          ell * rho * (Rational(1) - rho) + ell / Rational(6);
  const Rational direct = common - flat_double_sum(ctx);

  const SingularData d = singular_data(ctx);
  const long m = static_cast<long>(ctx.seifert().alphas().size());
  const Rational dedekind = common + Rational(m) * rho - Rational(2) * S_rho(d, rho) - F_rho(d, rho);
  if (direct != dedekind) {
    throw std::logic_error("eta_zero_flat: direct form " + direct.str() + " != Dedekind form " +
                           dedekind.str());
  }
  return direct;
}

BigFloat eta_series_pullback(const EtaContext& ctx, const BigFloat& s, unsigned digits) {
  const BigFloat one(1L, digits);
  const BigFloat s_minus_1 = s - one;
  BigFloat total = BigFloat(Rational(-2) * ctx.ell(), digits) * riemann_zeta(s_minus_1, digits);
  const auto& al = ctx.seifert().alphas();
  const auto& be = ctx.seifert().betas();
  const auto& ga = ctx.bundle().gammas();
  for (std::size_t i = 0; i < al.size(); ++i) {
    const Rational a(al[i]);
    std::vector<Rational> f;
    f.reserve(static_cast<std::size_t>(al[i]));
    for (long r = 1; r <= al[i]; ++r) {
      f.push_back(frac(Rational(ga[i] + r * be[i]) / a) - frac(Rational(ga[i] - r * be[i]) / a));
    }
    total += periodic_dirichlet_split(f, s, digits);
  }
  return total;
}

BigFloat eta_series(const EtaContext& ctx, const BigFloat& s, unsigned digits) {
  if (!ctx.is_canonical()) {
    throw std::invalid_argument("eta_series: context is not a canonical representative");
  }
  const Rational& rho = ctx.rho();
  if (rho.sign() == 0) return eta_series_pullback(ctx, s, digits);

  const std::vector<Rational> unit{Rational(1)};
  BigFloat total = BigFloat(half_orbifold_excess(ctx.seifert().base()), digits) *
                   signed_periodic_split(unit, rho, s, digits);

  const auto& al = ctx.seifert().alphas();
  const auto& be = ctx.seifert().betas();
  const auto& ga = ctx.bundle().gammas();
  for (std::size_t i = 0; i < al.size(); ++i) {
    const Rational a(al[i]);
    std::vector<Rational> g;
    g.reserve(static_cast<std::size_t>(al[i]));
    for (long k = 0; k < al[i]; ++k) g.push_back(-frac(Rational(ga[i] - k * be[i]) / a));
    total += signed_periodic_split(g, rho, s, digits);
  }

  const BigFloat s_minus_1 = s - BigFloat(1L, digits);
  const BigFloat zeta_pair = hurwitz_zeta(s_minus_1, rho, digits) + hurwitz_zeta(s_minus_1, Rational(1) - rho, digits);
  total -= BigFloat(ctx.ell(), digits) * zeta_pair;
  return total;
}

Rational eta_dirac_levicivita(const SeifertData& N, const Rational& r) {
  return eta_dirac_levicivita(EtaContext::trivial_class(N), r);
}

Rational eta_dirac_levicivita(const EtaContext& ctx, const Rational& r) {
  const SeifertData& N = ctx.seifert();
  require_homology_sphere(N, "eta_dirac_levicivita");
  require_unit_interval(r);
  if (!(ctx.bundle() == EtaContext::trivial_class(N).bundle())) {
    throw std::invalid_argument("eta_dirac_levicivita: context must be the trivial class");
  }
  return eta_zero_flat(ctx) + N.ell() / Rational(6) * levi_civita_shift(N, r);
}

Rational eta_signature_constant(const SeifertData& N) {
  if (!degree_zero_guard(N)) throw std::domain_error("eta_signature: the fibration has ell = 0");
  return N.ell() / Rational(3) - Rational(N.ell().sign()) - Rational(4) * signature_S(N);
}

Rational eta_signature(const SeifertData& N, const Rational& r) {
  require_unit_interval(r);
  return Rational(-2) * N.ell() / Rational(3) * levi_civita_shift(N, r) + eta_signature_constant(N);
}

Rational froyshov_F(const SeifertData& N) {
  require_homology_sphere(N, "froyshov_F");
  return Rational(4) * eta_zero_flat(EtaContext::trivial_class(N)) + eta_signature_constant(N);
}

bool rohlin_check(const SeifertData& N) { return (froyshov_F(N) / Rational(8)).is_integer(); }

}  // namespace seifinv
