#include "seifinv/plumbing.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace seifinv {

std::vector<long> hj_expand(long alpha, long beta) {
  if (beta <= 0 || beta >= alpha || std::gcd(alpha, beta) != 1) {
    throw std::invalid_argument("hj_expand: need 0 < beta < alpha coprime, got " + std::to_string(alpha) + "/" +
                                std::to_string(beta));
  }
  std::vector<long> out;
  while (beta > 0) {
    const long e = (alpha + beta - 1) / beta;
    out.push_back(e);
    const long next = e * beta - alpha;
    alpha = beta;
    beta = next;
  }
  return out;
}

PlumbingGraph plumbing_graph(const SeifertData& N) {
  if (N.genus() != 0) throw std::invalid_argument("plumbing_graph: only genus-0 bases are supported");
  PlumbingGraph G;
  G.weights.push_back(N.smooth_degree());
  for (std::size_t i = 0; i < N.alphas().size(); ++i) {
    std::size_t prev = 0;
    for (long e : hj_expand(N.alphas()[i], N.betas()[i])) {
      G.weights.push_back(-e);
      const std::size_t v = G.weights.size() - 1;
      G.edges.emplace_back(prev, v);
      prev = v;
    }
  }
  return G;
}

IntegerQuadraticForm plumbing_form(const PlumbingGraph& G) {
  const std::size_t n = G.weights.size();
  if (n > 0 && G.edges.size() != n - 1) throw std::invalid_argument("plumbing_form: graph is not a tree");
  // union-find rejects cycles
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  IntMatrix m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = G.weights[i];
  for (const auto& [u, v] : G.edges) {
    if (u >= n || v >= n || u == v) throw std::invalid_argument("plumbing_form: bad edge");
    const std::size_t ru = find(u), rv = find(v);
    if (ru == rv) throw std::invalid_argument("plumbing_form: graph is not a tree");
    parent[ru] = rv;
    m[u][v] = m[v][u] = 1;
  }
  return IntegerQuadraticForm(std::move(m));
}

IntegerQuadraticForm plumbing_form(long a, long b, long c) { return plumbing_form(plumbing_graph(brieskorn(a, b, c))); }

}  // namespace seifinv
