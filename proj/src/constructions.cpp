#include "mixedmoore/constructions.hpp"

#include <stdexcept>

namespace mixedmoore {

namespace {

void require_at_least_three(int n, const char* what) {
  if (n < 3) throw std::invalid_argument(std::string(what) + ": n must be at least 3");
}

}  // namespace

MixedGraph cycle(int n, bool directed) {
  require_at_least_three(n, "cycle");
  std::vector<VertexPair> links;
  for (int i = 0; i < n; ++i) links.emplace_back(i, (i + 1) % n);
  return directed ? MixedGraph::build(n, {}, std::move(links))
                  : MixedGraph::build(n, std::move(links), {});
}

MixedGraph line_digraph_of_cycle_digons(int n) {
  require_at_least_three(n, "line_digraph_of_cycle_digons");
  // Arcs of the digon cycle as (tail, head) pairs.
  std::vector<VertexPair> digon_arcs;
  for (int i = 0; i < n; ++i) {
    digon_arcs.emplace_back(i, (i + 1) % n);
    digon_arcs.emplace_back((i + 1) % n, i);
  }
  std::vector<VertexPair> arcs;
  for (int a = 0; a < 2 * n; ++a) {
    for (int b = 0; b < 2 * n; ++b) {
      if (digon_arcs[a].second == digon_arcs[b].first) arcs.emplace_back(a, b);
    }
  }
  return MixedGraph::build(2 * n, {}, std::move(arcs), Strictness::Lenient);
}

MixedGraph cayley_dihedral(int n) {
  require_at_least_three(n, "cayley_dihedral");
  const auto index = [n](int i, int j) { return ((i % n) + n) % n + n * j; };
  std::vector<VertexPair> edges;
  std::vector<VertexPair> arcs;
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < n; ++i) {
      // (rho^i sigma^j) rho = rho^(i +- 1) sigma^j
      arcs.emplace_back(index(i, j), index(j == 0 ? i + 1 : i - 1, j));
      // (rho^i sigma^j) sigma = rho^i sigma^(1-j)
      if (j == 0) edges.emplace_back(index(i, 0), index(i, 1));
    }
  }
  return MixedGraph::build(2 * n, std::move(edges), std::move(arcs));
}

}  // namespace mixedmoore
