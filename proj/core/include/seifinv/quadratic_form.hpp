#pragma once

#include <optional>
#include <vector>

#include "seifinv/rational.hpp"

namespace seifinv {

using IntMatrix = std::vector<std::vector<long>>;

/// Symmetric integer bilinear form on Z^n, given by its Gram matrix.
class IntegerQuadraticForm {
 public:
  IntegerQuadraticForm() = default;

  /// Throws std::invalid_argument unless the matrix is square and symmetric.
  explicit IntegerQuadraticForm(IntMatrix gram);

  /// n copies of <d>.
  static IntegerQuadraticForm diagonal(long n, long d);

  /// The negative definite E8 form, as the plumbing of the E8 tree.
  static IntegerQuadraticForm minus_e8();

  std::size_t rank() const { return gram_.size(); }
  long at(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  const IntMatrix& matrix() const { return gram_; }

  /// v^T Q w.
  Integer pair(const std::vector<Integer>& v, const std::vector<Integer>& w) const;

  bool is_negative_definite() const;
  bool is_positive_definite() const;
  Integer determinant() const;
  bool is_unimodular() const;

  /// Exact inverse; throws std::domain_error when singular.
  std::vector<std::vector<Rational>> inverse() const;

  friend bool operator==(const IntegerQuadraticForm& a, const IntegerQuadraticForm& b) {
    return a.gram_ == b.gram_;
  }

 private:
  IntMatrix gram_;
  mutable std::optional<int> definiteness_;  // +1, -1, or 0 (indefinite or degenerate)

  int definiteness() const;
};

IntegerQuadraticForm direct_sum(const IntegerQuadraticForm& a, const IntegerQuadraticForm& b);

/// All diagonal entries even.
bool is_even(const IntegerQuadraticForm& q);

/// Theta(q) = rk(q) + max q(xi, xi) over characteristic vectors xi, i.e.
/// q(xi, x) = q(x, x) mod 2 for all x. The maximum is found by an exact
/// closest-vector search in the characteristic coset after LLL reduction.
/// Requires q negative definite and unimodular; the result is checked to be
/// divisible by 8 and to lie in [0, rk q].
long theta_invariant(const IntegerQuadraticForm& q);

/// A characteristic vector attaining the maximum in theta_invariant.
std::vector<Integer> maximal_characteristic_vector(const IntegerQuadraticForm& q);

struct DiagonalSplit {
  long diagonal_rank = 0;
  IntegerQuadraticForm residual;  // rank 0 when q is fully diagonalizable
};

/// Repeatedly splits off <-1> summands: find v with q(v,v) = -1, pass to v^perp.
/// Requires q negative definite and unimodular.
DiagonalSplit hnk_split_diagonalize(const IntegerQuadraticForm& q);

/// Rank 8, even, unimodular, negative definite. Among negative definite
/// forms these invariants determine -E8 up to isometry.
bool looks_like_minus_e8(const IntegerQuadraticForm& q);

}  // namespace seifinv
