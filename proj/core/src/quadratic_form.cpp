#include "seifinv/quadratic_form.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace seifinv {

namespace {

using ZMatrix = std::vector<std::vector<Integer>>;
using ZVector = std::vector<Integer>;

ZMatrix to_z(const IntMatrix& m) {
  ZMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].reserve(m[i].size());
    for (long x : m[i]) out[i].emplace_back(x);
  }
  return out;
}

IntMatrix to_long(const ZMatrix& m) {
  IntMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (const Integer& x : m[i]) {
      if (!x.fits_slong_p()) throw std::overflow_error("quadratic form entry does not fit in a long");
      out[i].push_back(x.get_si());
    }
  }
  return out;
}

ZMatrix negated(const ZMatrix& m) {
  ZMatrix out = m;
  for (auto& row : out)
    for (auto& x : row) x = -x;
  return out;
}

Integer quad(const ZMatrix& g, const ZVector& v) {
  Integer total = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < v.size(); ++j) row += g[i][j] * v[j];
    total += v[i] * row;
  }
  return total;
}

// Gram-Schmidt data of a positive definite Gram matrix: mu[i][j] (j < i) and
// the squared lengths b[i] of the orthogonalized vectors.
struct GramSchmidt {
  std::vector<std::vector<Rational>> mu;
  std::vector<Rational> b;
};

GramSchmidt gram_schmidt(const ZMatrix& g) {
  const std::size_t n = g.size();
  GramSchmidt gs{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)), std::vector<Rational>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational r(g[i][j]);
      for (std::size_t k = 0; k < j; ++k) r -= gs.mu[j][k] * gs.mu[i][k] * gs.b[k];
      gs.mu[i][j] = r / gs.b[j];
    }
    Rational r(g[i][i]);
    for (std::size_t k = 0; k < i; ++k) r -= gs.mu[i][k] * gs.mu[i][k] * gs.b[k];
    if (r.sign() <= 0) throw std::domain_error("Gram-Schmidt: form is not positive definite");
    gs.b[i] = r;
  }
  return gs;
}

Integer round_nearest(const Rational& x) { return (x + Rational(1, 2)).floor(); }

// b_k <- b_k - r b_j on a Gram matrix and on the basis columns of h.
void column_op(ZMatrix& g, ZMatrix& h, std::size_t k, std::size_t j, const Integer& r) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) g[k][i] -= r * g[j][i];
  for (std::size_t i = 0; i < n; ++i) g[i][k] = (i == k) ? g[k][k] - r * g[k][j] : g[k][i];
  for (auto& row : h) row[k] -= r * row[j];
}

void swap_basis(ZMatrix& g, ZMatrix& h, std::size_t a, std::size_t b) {
  std::swap(g[a], g[b]);
  for (auto& row : g) std::swap(row[a], row[b]);
  for (auto& row : h) std::swap(row[a], row[b]);
}

struct Reduction {
  ZMatrix gram;   // H^T G H
  ZMatrix basis;  // H, columns are the new basis vectors
};

// LLL with delta = 3/4, exact arithmetic, working on the Gram matrix only.
Reduction lll(const ZMatrix& g0) {
  const std::size_t n = g0.size();
  Reduction red{g0, ZMatrix(n, ZVector(n, Integer(0)))};
  for (std::size_t i = 0; i < n; ++i) red.basis[i][i] = 1;
  std::size_t k = 1;
  while (k < n) {
    GramSchmidt gs = gram_schmidt(red.gram);
    for (std::size_t jj = k; jj-- > 0;) {
      const Integer r = round_nearest(gs.mu[k][jj]);
      if (r == 0) continue;
      column_op(red.gram, red.basis, k, jj, r);
      for (std::size_t i = 0; i < jj; ++i) gs.mu[k][i] -= Rational(r) * gs.mu[jj][i];
      gs.mu[k][jj] -= Rational(r);
    }
    const Rational& m = gs.mu[k][k - 1];
    if (gs.b[k] < (Rational(3, 4) - m * m) * gs.b[k - 1]) {
      swap_basis(red.gram, red.basis, k, k - 1);
      k = k > 1 ? k - 1 : 1;
    } else {
      ++k;
    }
  }
  return red;
}

// Exact solve of m x = rhs for square invertible m.
std::vector<Rational> solve(const ZMatrix& m, const std::vector<Rational>& rhs) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    a[i][n] = rhs[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].sign() == 0) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    std::swap(a[piv], a[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col].sign() == 0) continue;
      const Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

// Fincke-Pohst enumeration of u in Z^n with (u + t)^T G (u + t) <= bound, G
// positive definite (LLL-reduced for efficiency). The visitor receives each
// candidate and returns the (possibly tightened) bound. Floating point is used
// only for pruning; a small slack keeps boundary points in play and visitors
// re-check exactly.
class Enumerator {
 public:
  Enumerator(const ZMatrix& g, std::vector<Rational> t) : n_(g.size()), t_(std::move(t)) {
    const GramSchmidt gs = gram_schmidt(g);
    mu_.assign(n_, std::vector<double>(n_, 0.0));
    b_.resize(n_);
    td_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      b_[i] = gs.b[i].to_double();
      td_[i] = t_[i].to_double();
      for (std::size_t j = 0; j < i; ++j) mu_[i][j] = gs.mu[i][j].to_double();
    }
  }

  void run(double bound, const std::function<double(const ZVector&)>& visit) {
    bound_ = bound;
    visit_ = &visit;
    u_.assign(n_, 0);
    y_.assign(n_, 0.0);
    if (n_ == 0) {
      bound_ = visit(ZVector());
      return;
    }
    descend(n_ - 1, 0.0);
  }

 private:
  void descend(std::size_t i, double partial) {
    // y_i + sum_{j>i} mu_ji y_j with y = u + t
    double center = -td_[i];
    for (std::size_t j = i + 1; j < n_; ++j) center -= mu_[j][i] * y_[j];
    const double slack = 1e-9 * (1.0 + bound_);
    const double room = bound_ - partial + slack;
    if (room < 0) return;
    const double radius = std::sqrt(room / b_[i]);
    const long lo = static_cast<long>(std::ceil(center - radius));
    const long hi = static_cast<long>(std::floor(center + radius));
    for (long u = lo; u <= hi; ++u) {
      const double yi = static_cast<double>(u) + td_[i];
      double s = yi;
      for (std::size_t j = i + 1; j < n_; ++j) s += mu_[j][i] * y_[j];
      const double next = partial + b_[i] * s * s;
      if (next > bound_ + 1e-9 * (1.0 + bound_)) continue;
      u_[i] = u;
      y_[i] = yi;
      if (i == 0) {
        ZVector cand(n_);
        for (std::size_t k = 0; k < n_; ++k) cand[k] = u_[k];
        bound_ = (*visit_)(cand);
      } else {
        descend(i - 1, next);
      }
    }
  }

  std::size_t n_;
  std::vector<Rational> t_;
  std::vector<std::vector<double>> mu_;
  std::vector<double> b_;
  std::vector<double> td_;
  std::vector<long> u_;
  std::vector<double> y_;
  double bound_ = 0.0;
  const std::function<double(const ZVector&)>* visit_ = nullptr;
};

ZVector basis_times(const ZMatrix& h, const ZVector& u) {
  ZVector out(h.size(), Integer(0));
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) out[i] += h[i][j] * u[j];
  return out;
}

// Solves Q w = diag(Q) over F_2.
std::vector<int> characteristic_mod2(const IntMatrix& q) {
  const std::size_t n = q.size();
  std::vector<std::vector<int>> a(n, std::vector<int>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<int>(mod_floor(q[i][j], 2));
    a[i][n] = static_cast<int>(mod_floor(q[i][i], 2));
  }
  std::vector<std::size_t> pivot_col(n);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[row]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != row && a[i][col]) {
        for (std::size_t j = col; j <= n; ++j) a[i][j] ^= a[row][j];
      }
    }
    pivot_col[row] = col;
    ++row;
  }
  if (row != n) throw std::domain_error("form is not unimodular modulo 2");
  std::vector<int> w(n, 0);
  for (std::size_t r = 0; r < n; ++r) w[pivot_col[r]] = a[r][n];
  return w;
}

void require_theta_input(const IntegerQuadraticForm& q, const char* who) {
  if (!q.is_negative_definite()) throw std::invalid_argument(std::string(who) + ": form is not negative definite");
  if (!q.is_unimodular()) throw std::invalid_argument(std::string(who) + ": form is not unimodular");
}

struct CharacteristicMinimum {
  ZVector vector;
  Integer norm;  // (-q)(xi, xi)
};

CharacteristicMinimum characteristic_minimum(const IntegerQuadraticForm& q) {
  const std::size_t n = q.rank();
  const ZMatrix a = negated(to_z(q.matrix()));
  const std::vector<int> w = characteristic_mod2(q.matrix());
  if (n == 0) return {ZVector(), Integer(0)};

  const Reduction red = lll(a);
  std::vector<Rational> half_w(n);
  for (std::size_t i = 0; i < n; ++i) half_w[i] = Rational(w[i], 2);
  const std::vector<Rational> t = solve(red.basis, half_w);

  auto lift = [&](const ZVector& u) {
    ZVector v = basis_times(red.basis, u);
    for (std::size_t i = 0; i < n; ++i) v[i] = Integer(w[i]) + 2 * v[i];
    return v;
  };

  // Babai rounding gives the starting bound.
  ZVector u0(n);
  for (std::size_t i = 0; i < n; ++i) u0[i] = round_nearest(-t[i]);
  CharacteristicMinimum best{lift(u0), Integer(0)};
  best.norm = quad(a, best.vector);

  Enumerator en(red.gram, t);
  en.run(best.norm.get_d() / 4.0, [&](const ZVector& u) {
    ZVector v = lift(u);
    Integer norm = quad(a, v);
    if (norm < best.norm) best = {std::move(v), std::move(norm)};
    return best.norm.get_d() / 4.0;
  });
  return best;
}

// Integer row echelon form; returns the non-zero rows (a basis of their span).
ZMatrix row_basis(ZMatrix rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::size_t pr = 0;
  for (std::size_t col = 0; col < cols && pr < rows.size(); ++col) {
    while (true) {
      std::size_t piv = rows.size();
      for (std::size_t r = pr; r < rows.size(); ++r) {
        if (rows[r][col] != 0 && (piv == rows.size() || abs(rows[r][col]) < abs(rows[piv][col]))) piv = r;
      }
      if (piv == rows.size()) break;
      std::swap(rows[piv], rows[pr]);
      bool clean = true;
      for (std::size_t r = pr + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        mpz_class qt;
        mpz_fdiv_q(qt.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pr][col].get_mpz_t());
        for (std::size_t j = col; j < cols; ++j) rows[r][j] -= qt * rows[pr][j];
        if (rows[r][col] != 0) clean = false;
      }
      if (clean) {
        ++pr;
        break;
      }
    }
  }
  rows.resize(pr);
  return rows;
}

// Some v with a(v, v) = 1, a positive definite; empty if none.
std::optional<ZVector> unit_vector(const ZMatrix& a) {
  const std::size_t n = a.size();
  const Reduction red = lll(a);
  for (std::size_t i = 0; i < n; ++i) {
    if (red.gram[i][i] == 1) {
      ZVector e(n, Integer(0));
      e[i] = 1;
      return basis_times(red.basis, e);
    }
  }
  std::optional<ZVector> found;
  Enumerator en(red.gram, std::vector<Rational>(n));
  en.run(1.0, [&](const ZVector& u) {
    if (found) return -1.0;
    if (quad(red.gram, u) == 1) {
      found = basis_times(red.basis, u);
      return -1.0;
    }
    return 1.0;
  });
  return found;
}

}  // namespace

IntegerQuadraticForm::IntegerQuadraticForm(IntMatrix gram) : gram_(std::move(gram)) {
  const std::size_t n = gram_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw std::invalid_argument("quadratic form: matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("quadratic form: matrix is not symmetric");
    }
  }
}

IntegerQuadraticForm IntegerQuadraticForm::diagonal(long n, long d) {
  IntMatrix m(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = d;
  return IntegerQuadraticForm(std::move(m));
}

IntegerQuadraticForm IntegerQuadraticForm::minus_e8() {
  // E8 tree: chain 0-1-2-3-4-5-6 with vertex 7 attached to vertex 4.
  IntMatrix m(8, std::vector<long>(8, 0));
  for (std::size_t i = 0; i < 8; ++i) m[i][i] = -2;
  for (std::size_t i = 0; i + 1 < 7; ++i) m[i][i + 1] = m[i + 1][i] = 1;
  m[4][7] = m[7][4] = 1;
  return IntegerQuadraticForm(std::move(m));
}

Integer IntegerQuadraticForm::pair(const std::vector<Integer>& v, const std::vector<Integer>& w) const {
  if (v.size() != rank() || w.size() != rank()) throw std::invalid_argument("pair: dimension mismatch");
  Integer total = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) total += v[i] * gram_[i][j] * w[j];
  return total;
}

int IntegerQuadraticForm::definiteness() const {
  if (definiteness_) return *definiteness_;
  // Leading principal minors via exact elimination; symmetric, so no pivoting.
  auto positive = [](const IntMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    for (std::size_t k = 0; k < n; ++k) {
      if (a[k][k].sign() <= 0) return false;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a[i][k].sign() == 0) continue;
        const Rational f = a[i][k] / a[k][k];
        for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      }
    }
    return true;
  };
  IntMatrix neg = gram_;
  for (auto& row : neg)
    for (auto& x : row) x = -x;
  definiteness_ = positive(gram_) ? 1 : (positive(neg) ? -1 : 0);
  return *definiteness_;
}

bool IntegerQuadraticForm::is_negative_definite() const { return definiteness() < 0; }
bool IntegerQuadraticForm::is_positive_definite() const { return definiteness() > 0; }

Integer IntegerQuadraticForm::determinant() const {
  // Bareiss fraction-free elimination.
  const std::size_t n = rank();
  if (n == 0) return 1;
  ZMatrix a = to_z(gram_);
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool IntegerQuadraticForm::is_unimodular() const { return abs(determinant()) == 1; }

std::vector<std::vector<Rational>> IntegerQuadraticForm::inverse() const {
  const std::size_t n = rank();
  const ZMatrix m = to_z(gram_);
  std::vector<std::vector<Rational>> cols;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n);
    e[j] = Rational(1);
    cols.push_back(solve(m, e));
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = cols[j][i];
  return inv;
}

IntegerQuadraticForm direct_sum(const IntegerQuadraticForm& a, const IntegerQuadraticForm& b) {
  const std::size_t n = a.rank() + b.rank();
  IntMatrix m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) m[i][j] = a.at(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) m[a.rank() + i][a.rank() + j] = b.at(i, j);
  return IntegerQuadraticForm(std::move(m));
}

bool is_even(const IntegerQuadraticForm& q) {
  for (std::size_t i = 0; i < q.rank(); ++i) {
    if (q.at(i, i) % 2 != 0) return false;
  }
  return true;
}

std::vector<Integer> maximal_characteristic_vector(const IntegerQuadraticForm& q) {
  require_theta_input(q, "maximal_characteristic_vector");
  return characteristic_minimum(q).vector;
}

long theta_invariant(const IntegerQuadraticForm& q) {
  require_theta_input(q, "theta_invariant");
  const CharacteristicMinimum best = characteristic_minimum(q);
  const Integer theta = Integer(static_cast<long>(q.rank())) - best.norm;
  const long n = static_cast<long>(q.rank());
  if (theta % 8 != 0) throw std::logic_error("theta_invariant: result " + theta.get_str() + " not divisible by 8");
  if (theta > n || theta < 0) throw std::logic_error("theta_invariant: result " + theta.get_str() + " outside [0, rank]");
  if ((theta == n) != is_even(q)) throw std::logic_error("theta_invariant: Theta = rank must match evenness");
  return theta.get_si();
}

DiagonalSplit hnk_split_diagonalize(const IntegerQuadraticForm& q) {
  require_theta_input(q, "hnk_split_diagonalize");
  ZMatrix a = negated(to_z(q.matrix()));
  DiagonalSplit out;
  while (!a.empty()) {
    const auto v = unit_vector(a);
    if (!v) break;
    const std::size_t n = a.size();
    // x -> x - a(x, v) v projects onto v^perp
    ZVector av(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) av[i] += a[i][j] * (*v)[j];
    ZMatrix rows(n, ZVector(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) {
      rows[i][i] = 1;
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= av[i] * (*v)[j];
    }
    const ZMatrix p = row_basis(std::move(rows));
    if (p.size() + 1 != n) throw std::logic_error("hnk_split_diagonalize: complement has the wrong rank");
    ZMatrix next(p.size(), ZVector(p.size(), Integer(0)));
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < p.size(); ++j) {
        Integer s = 0;
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) s += p[i][k] * a[k][l] * p[j][l];
        next[i][j] = s;
      }
    }
    a = lll(next).gram;
    ++out.diagonal_rank;
  }
  out.residual = IntegerQuadraticForm(to_long(negated(a)));
  return out;
}

bool looks_like_minus_e8(const IntegerQuadraticForm& q) {
  return q.rank() == 8 && is_even(q) && q.is_negative_definite() && q.is_unimodular();
}

}  // namespace seifinv
