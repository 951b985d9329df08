#include "seifinv/swfloer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "seifinv/eta.hpp"

namespace seifinv {

namespace {

// Delta membership scaled by 2abc:  2(x bc + y ac + z ab) < abc - (bc + ac + ab).
struct ScaledSimplex {
  long bc, ac, ab, rhs;
  ScaledSimplex(long a, long b, long c)
      : bc(b * c),
        ac(a * c),
        ab(a * b),
        rhs(a * b * c - (bc + ac + ab)) {}
  long lhs(long x, long y, long z) const { return 2 * (x * bc + y * ac + z * ab); }
};

}  // namespace

bool in_delta(const DeltaPoint& p, long a, long b, long c) {
  if (p.x < 0 || p.y < 0 || p.z < 0 || p.x >= a || p.y >= b || p.z >= c) return false;
  const ScaledSimplex sx(a, b, c);
  return sx.lhs(p.x, p.y, p.z) < sx.rhs;
}

std::vector<DeltaPoint> enumerate_delta(long a, long b, long c) {
  require_brieskorn_triple(a, b, c);
  const ScaledSimplex sx(a, b, c);
  std::vector<DeltaPoint> out;
  for (long x = 0; x < a && sx.lhs(x, 0, 0) < sx.rhs; ++x) {
    for (long y = 0; y < b && sx.lhs(x, y, 0) < sx.rhs; ++y) {
      for (long z = 0; z < c && sx.lhs(x, y, z) < sx.rhs; ++z) out.push_back({x, y, z});
    }
  }
  return out;
}

BrieskornFloer::BrieskornFloer(long a, long b, long c)
    : a_(a), b_(b), c_(c), N_(brieskorn(a, b, c)), delta_(enumerate_delta(a, b, c)) {
  eta_trivial_ = eta_zero_flat(EtaContext::trivial_class(N_));
  std::array<long, 3> top{-1, -1, -1};
  for (const auto& p : delta_) {
    top[0] = std::max(top[0], p.x);
    top[1] = std::max(top[1], p.y);
    top[2] = std::max(top[2], p.z);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (long g = 0; g <= top[i]; ++g) {
      fiber_terms_[i].push_back(pullback_fiber_term(N_.alphas()[i], N_.betas()[i], g));
    }
  }
}

void BrieskornFloer::require_member(const DeltaPoint& p) const {
  if (!in_delta(p, a_, b_, c_)) {
    throw std::invalid_argument("point (" + std::to_string(p.x) + "," + std::to_string(p.y) + "," +
                                std::to_string(p.z) + ") is not in Delta(" + std::to_string(a_) + "," +
                                std::to_string(b_) + "," + std::to_string(c_) + ")");
  }
}

VLineBundle BrieskornFloer::vortex_bundle(const DeltaPoint& p) const {
  require_member(p);
  return VLineBundle(N_.base(), 0, {p.x, p.y, p.z});
}

Rational BrieskornFloer::energy(const DeltaPoint& p) const {
  const Rational nu = rational_degree(vortex_bundle(p)) - rational_degree(canonical_bundle(N_.base())) / Rational(2);
  return nu * nu / N_.ell();
}

long BrieskornFloer::grading_plus(const DeltaPoint& p) const {
  require_member(p);
  const Rational eta_p = N_.ell() / Rational(6) - fiber_terms_[0][static_cast<std::size_t>(p.x)] -
                         fiber_terms_[1][static_cast<std::size_t>(p.y)] -
                         fiber_terms_[2][static_cast<std::size_t>(p.z)];
  const Rational n = eta_trivial_ - eta_p - energy(p);
  if (!n.is_integer() || !n.num().fits_slong_p()) {
    throw std::logic_error("grading_plus: non-integral grading " + n.str());
  }
  return n.num().get_si();
}

long BrieskornFloer::grading_minus(const DeltaPoint& p) const { return grading_plus(p) + 1; }

LaurentPolynomial BrieskornFloer::poincare_polynomial(int sign) const {
  LaurentPolynomial P;
  for (const auto& p : delta_) P.add_term(sign > 0 ? grading_plus(p) : grading_minus(p), 1);
  return P;
}

Rational BrieskornFloer::froyshov_F() const {
  return Rational(4) * eta_trivial_ + eta_signature_constant(N_);
}

long BrieskornFloer::gap_m() const { return seifinv::gap_m(poincare_polynomial()); }

Rational BrieskornFloer::froyshov_Z() const { return Rational(8 * gap_m()) + froyshov_F(); }

VLineBundle vortex_bundle(const DeltaPoint& p, long a, long b, long c) {
  return BrieskornFloer(a, b, c).vortex_bundle(p);
}
Rational energy(const DeltaPoint& p, long a, long b, long c) { return BrieskornFloer(a, b, c).energy(p); }
long grading_plus(const DeltaPoint& p, long a, long b, long c) {
  return BrieskornFloer(a, b, c).grading_plus(p);
}
long grading_minus(const DeltaPoint& p, long a, long b, long c) {
  return BrieskornFloer(a, b, c).grading_minus(p);
}
LaurentPolynomial poincare_polynomial(long a, long b, long c) {
  return BrieskornFloer(a, b, c).poincare_polynomial();
}

long gap_m(const LaurentPolynomial& P) {
  long m = 0;
  while (P.coefficient(-(2 * m + 1)) != 0) ++m;
  return m;
}

Rational froyshov_Z(long a, long b, long c) { return BrieskornFloer(a, b, c).froyshov_Z(); }

}  // namespace seifinv
