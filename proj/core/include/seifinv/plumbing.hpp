#pragma once

#include <utility>
#include <vector>

#include "seifinv/quadratic_form.hpp"
#include "seifinv/seifert.hpp"

namespace seifinv {

/// Hirzebruch-Jung expansion alpha/beta = e1 - 1/(e2 - 1/(...)), all e_i >= 2.
/// Requires 0 < beta < alpha and gcd(alpha, beta) = 1.
std::vector<long> hj_expand(long alpha, long beta);

/// Weighted tree; vertex 0 is the center for star-shaped graphs.
struct PlumbingGraph {
  std::vector<long> weights;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Star-shaped plumbing of a Seifert fibration with genus-0 base: center
/// weight b (the smooth degree), arm i the chain -e_1, -e_2, ... of
/// hj_expand(alpha_i, beta_i), e_1 adjacent to the center. Vertices are
/// numbered center first, then each arm outward, arms in input order.
PlumbingGraph plumbing_graph(const SeifertData& N);

/// Intersection form: weights on the diagonal, 1 for each edge.
/// Throws std::invalid_argument when the graph is not a tree.
IntegerQuadraticForm plumbing_form(const PlumbingGraph& G);

/// Gamma_{a,b,c}, the plumbing form of brieskorn(a, b, c).
IntegerQuadraticForm plumbing_form(long a, long b, long c);

}  // namespace seifinv
