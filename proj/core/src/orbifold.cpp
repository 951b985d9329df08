#include "seifinv/orbifold.hpp"

#include <stdexcept>
#include <string>

namespace seifinv {

namespace {

void require_same_base(const VLineBundle& a, const VLineBundle& b) {
  if (!(a.base() == b.base())) throw std::invalid_argument("line V-bundles live on different orbifolds");
}

Rational nonzero_degree(const VLineBundle& L0) {
  const Rational ell = rational_degree(L0);
  if (ell.sign() == 0) {
    throw std::domain_error("degree of the Seifert bundle is zero; no canonical fiber holonomy");
  }
  return ell;
}

}  // namespace

Orbifold::Orbifold(long genus, std::vector<long> alphas) : genus_(genus), alphas_(std::move(alphas)) {
  if (genus_ < 0) throw std::invalid_argument("Orbifold: genus must be non-negative");
  for (long a : alphas_) {
    if (a < 2) {
      throw std::invalid_argument("Orbifold: isotropy orders must be >= 2, got " + std::to_string(a));
    }
  }
}

VLineBundle::VLineBundle(Orbifold base, long smooth_degree, std::vector<long> gammas)
    : base_(std::move(base)), smooth_degree_(smooth_degree), gammas_(std::move(gammas)) {
  if (gammas_.size() != base_.num_cone_points()) {
    throw std::invalid_argument("VLineBundle: need one singularity datum per cone point");
  }
  for (std::size_t i = 0; i < gammas_.size(); ++i) {
    if (gammas_[i] < 0 || gammas_[i] >= base_.alphas()[i]) {
      throw std::invalid_argument("VLineBundle: singularity datum " + std::to_string(gammas_[i]) +
                                  " outside [0, " + std::to_string(base_.alphas()[i]) + ")");
    }
  }
}

VLineBundle VLineBundle::trivial(const Orbifold& base) {
  return VLineBundle(base, 0, std::vector<long>(base.num_cone_points(), 0));
}

VLineBundle VLineBundle::normalized(const Orbifold& base, long smooth_degree, std::vector<long> gammas) {
  if (gammas.size() != base.num_cone_points()) {
    throw std::invalid_argument("VLineBundle: need one singularity datum per cone point");
  }
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    const long a = base.alphas()[i];
    const long r = mod_floor(gammas[i], a);
    smooth_degree += (gammas[i] - r) / a;
    gammas[i] = r;
  }
  return VLineBundle(base, smooth_degree, std::move(gammas));
}

Rational rational_degree(const VLineBundle& L) {
  Rational deg(L.smooth_degree());
  for (std::size_t i = 0; i < L.gammas().size(); ++i) deg += Rational(L.gammas()[i], L.base().alphas()[i]);
  return deg;
}

VLineBundle canonical_bundle(const Orbifold& S) {
  std::vector<long> gammas;
  gammas.reserve(S.num_cone_points());
  for (long a : S.alphas()) gammas.push_back(a - 1);
  return VLineBundle(S, 2 * S.genus() - 2, std::move(gammas));
}

Rational euler_characteristic(const Orbifold& S) {
  Rational chi(2 - 2 * S.genus());
  for (long a : S.alphas()) chi -= Rational(1) - Rational(1, a);
  return chi;
}

VLineBundle add_bundles(const VLineBundle& a, const VLineBundle& b) {
  require_same_base(a, b);
  std::vector<long> gammas(a.gammas());
  for (std::size_t i = 0; i < gammas.size(); ++i) gammas[i] += b.gammas()[i];
  return VLineBundle::normalized(a.base(), a.smooth_degree() + b.smooth_degree(), std::move(gammas));
}

VLineBundle scale_bundle(const VLineBundle& L, long k) {
  std::vector<long> gammas(L.gammas());
  long smooth = L.smooth_degree() * k;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    // k * gamma can be large; split it before it reaches normalized().
    const long a = L.base().alphas()[i];
    const long kg = k * gammas[i];
    const long r = mod_floor(kg, a);
    smooth += (kg - r) / a;
    gammas[i] = r;
  }
  return VLineBundle(L.base(), smooth, std::move(gammas));
}

bool is_realizable(const Orbifold& base, const Rational& degree, const std::vector<long>& gammas) {
  if (gammas.size() != base.num_cone_points()) return false;
  Rational rest = degree;
  for (std::size_t i = 0; i < gammas.size(); ++i) rest -= Rational(gammas[i], base.alphas()[i]);
  return rest.is_integer();
}

long rrk_index(const VLineBundle& L) { return 1 - L.base().genus() + L.smooth_degree(); }

Rational holonomy_theta(const VLineBundle& L, const VLineBundle& L0) {
  require_same_base(L, L0);
  return frac(rational_degree(L) / nonzero_degree(L0));
}

Rational rho_invariant(const VLineBundle& L, const VLineBundle& L0) {
  require_same_base(L, L0);
  const Rational ell = nonzero_degree(L0);
  const Rational deg_k = rational_degree(canonical_bundle(L.base()));
  return (deg_k - Rational(2) * rational_degree(L)) / (Rational(2) * ell);
}

CanonicalRepresentative canonical_representative(const VLineBundle& class_rep, const VLineBundle& L0) {
  // rho(L + k L0) = rho(L) - k
  const Rational rho = rho_invariant(class_rep, L0);
  const Integer k = rho.floor();
  if (!k.fits_slong_p()) throw std::overflow_error("canonical_representative: shift out of range");
  const long shift = k.get_si();
  VLineBundle rep = add_bundles(class_rep, scale_bundle(L0, shift));
  return CanonicalRepresentative{std::move(rep), shift, rho - Rational(shift)};
}

}  // namespace seifinv
