#include "seifinv/dedekind.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace seifinv {

namespace {

void require_pair(long beta, long alpha) {
  if (alpha <= 0) {
    throw std::invalid_argument("Dedekind-Rademacher sum: alpha must be positive, got " +
                                std::to_string(alpha));
  }
  if (std::gcd(beta, alpha) != 1) {
    throw std::invalid_argument("Dedekind-Rademacher sum: gcd(" + std::to_string(beta) + ", " +
                                std::to_string(alpha) + ") != 1");
  }
}

void require_same_length(const SingularData& d) {
  if (d.alphas.size() != d.betas.size() || d.alphas.size() != d.gammas.size()) {
    throw std::invalid_argument("singular data vectors must have equal length");
  }
}

}  // namespace

DRInput::DRInput(long beta, long alpha, Rational x, Rational y)
    : beta_(beta), alpha_(alpha), x_(std::move(x)), y_(std::move(y)) {
  require_pair(beta_, alpha_);
}

DRInput DRInput::swapped() const {
  if (beta_ <= 0) throw std::invalid_argument("DRInput::swapped: beta must be positive");
  return DRInput(alpha_, beta_, y_, x_);
}

Rational dr_sum_direct(const DRInput& in) {
  const Rational a(in.alpha());
  Rational total;
  for (long r = 1; r <= in.alpha(); ++r) {
    const Rational t = (Rational(r) + in.y()) / a;
    total += sawtooth(in.x() + Rational(in.beta()) * t) * sawtooth(t);
  }
  return total;
}

Rational reciprocity_R(const DRInput& in) {
  const long beta = in.beta();
  const long alpha = in.alpha();
  if (beta <= 0) {
    throw std::invalid_argument("reciprocity_R: beta must be positive, got " + std::to_string(beta));
  }
  const Rational a(alpha), b(beta);
  if (in.x().is_integer() && in.y().is_integer()) {
    return Rational(-1, 4) + (a * a + b * b + Rational(1)) / (Rational(12) * a * b);
  }
  const Rational& x = in.x();
  const Rational& y = in.y();
  return sawtooth(x) * sawtooth(y) +
         (b * b * psi2(y) + psi2(b * y + a * x) + a * a * psi2(x)) / (Rational(2) * a * b);
}

Rational dr_sum_fast(const DRInput& in) {
  long beta = in.beta();
  long alpha = in.alpha();
  Rational x = frac(in.x());
  Rational y = frac(in.y());
  Rational acc;
  int sign = 1;
  while (true) {
    if (alpha == 1) {
      // s(beta, 1; x, y) = ((beta y + x)) ((y))
      const Rational base = sawtooth(Rational(beta) * y + x) * sawtooth(y);
      return sign > 0 ? acc + base : acc - base;
    }
    // Balanced residue: s(beta, alpha; x, y) = s(beta - m alpha, alpha; x + m y, y).
    long r = mod_floor(beta, alpha);
    if (2 * r > alpha) r -= alpha;
    const long m = (beta - r) / alpha;
    beta = r;
    x = frac(x + Rational(m) * y);
    if (beta < 0) {
      // s(-b, alpha; x, y) = -s(b, alpha; -x, y)
      beta = -beta;
      x = frac(-x);
      sign = -sign;
    }
    const Rational rec = reciprocity_R(DRInput(beta, alpha, x, y));
    acc = sign > 0 ? acc + rec : acc - rec;
    sign = -sign;
    // continue with s(alpha, beta; y, x)
    const long next_alpha = beta;
    beta = alpha;
    alpha = next_alpha;
    std::swap(x, y);
  }
}

Rational corner_sum(long alpha, long beta, long gamma, int sign) {
  require_pair(beta, alpha);
  if (sign != 1 && sign != -1) throw std::invalid_argument("corner_sum: sign must be +1 or -1");
  const Rational a(alpha);
  // term r is m_r (2r - alpha) / (2 alpha^2) with m_r = (gamma + sign r beta) mod alpha;
  // r = alpha contributes nothing
  const long step = mod_floor(sign * beta, alpha);
  long m = mod_floor(gamma, alpha);
  Integer acc = 0;
  for (long r = 1; r < alpha; ++r) {
    m += step;
    if (m >= alpha) m -= alpha;
    const long w = 2 * r - alpha;
    if (w >= 0) acc += static_cast<unsigned long>(m) * static_cast<unsigned long>(w);
    else acc -= static_cast<unsigned long>(m) * static_cast<unsigned long>(-w);
  }
  const Rational direct(acc, Integer(2) * Integer(alpha) * Integer(alpha));
  const long q = mod_inverse(beta, alpha);
  const Rational half_d = sawtooth(Rational(q * mod_floor(gamma, alpha)) / a) / Rational(2);
  const Rational split = dr_sum_fast(DRInput(sign * beta, alpha, Rational(gamma) / a, Rational(0))) +
                         (sign > 0 ? half_d : -half_d);
  if (split != direct) {
    throw std::logic_error("corner_sum: decomposition mismatch for (alpha, beta, gamma) = (" +
                           std::to_string(alpha) + ", " + std::to_string(beta) + ", " +
                           std::to_string(gamma) + ")");
  }
  return direct;
}

Rational S_composite(const SingularData& d) {
  require_same_length(d);
  Rational total;
  for (std::size_t i = 0; i < d.alphas.size(); ++i) {
    const long alpha = d.alphas[i];
    require_pair(d.betas[i], alpha);
    const long gamma = mod_floor(d.gammas[i], alpha);
    total += dr_sum_fast(DRInput(d.betas[i], alpha, Rational(gamma, alpha)));
  }
  return total;
}

Rational d_composite(const SingularData& d) {
  require_same_length(d);
  Rational total;
  for (std::size_t i = 0; i < d.alphas.size(); ++i) {
    const long alpha = d.alphas[i];
    require_pair(d.betas[i], alpha);
    const long q = mod_inverse(d.betas[i], alpha);
    total += sawtooth(Rational(mod_floor(q * mod_floor(d.gammas[i], alpha), alpha), alpha));
  }
  return total;
}

namespace {

void require_open_unit(const Rational& rho) {
  if (rho.sign() <= 0 || rho >= Rational(1)) {
    throw std::domain_error("rho must lie in (0,1), got " + rho.str());
  }
}

}  // namespace

Rational S_rho(const SingularData& d, const Rational& rho) {
  require_same_length(d);
  require_open_unit(rho);
  Rational total;
  for (std::size_t i = 0; i < d.alphas.size(); ++i) {
    const long alpha = d.alphas[i];
    const long beta = d.betas[i];
    require_pair(beta, alpha);
    const long gamma = mod_floor(d.gammas[i], alpha);
    const Rational x = (Rational(gamma) + Rational(beta) * rho) / Rational(alpha);
    total += dr_sum_fast(DRInput(beta, alpha, x, -rho));
  }
  return total;
}

Rational F_rho(long alpha, long beta, long gamma, const Rational& rho) {
  require_pair(beta, alpha);
  require_open_unit(rho);
  const long q = mod_inverse(beta, alpha);
  return frac((Rational(q * mod_floor(gamma, alpha)) + rho) / Rational(alpha));
}

Rational F_rho(const SingularData& d, const Rational& rho) {
  require_same_length(d);
  Rational total;
  for (std::size_t i = 0; i < d.alphas.size(); ++i) {
    total += F_rho(d.alphas[i], d.betas[i], d.gammas[i], rho);
  }
  return total;
}

}  // namespace seifinv
