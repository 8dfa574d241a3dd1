#include "mixedmoore/walks.hpp"

#include <stdexcept>

namespace mixedmoore {

std::vector<BigInt> tree_walk_counts(const MixedGraph& g, Vertex u, int k) {
  if (k < 0) throw std::invalid_argument("tree_walk_counts: k must be nonnegative");
  if (u < 0 || u >= g.order()) throw std::out_of_range("tree_walk_counts: root out of range");
  const auto n = static_cast<std::size_t>(g.order());

  // State (v, w): at v, having arrived along edge {w, v}; w = n marks an
  // arrival through an arc or the empty walk. Indexed v * (n + 1) + w.
  const std::size_t width = n + 1;
  std::vector<BigInt> current(n * width, BigInt(0));
  std::vector<BigInt> next(n * width, BigInt(0));
  std::vector<BigInt> nu(n, BigInt(0));

  current[static_cast<std::size_t>(u) * width + n] = 1;
  nu[u] = 1;
  for (int step = 1; step <= k; ++step) {
    std::fill(next.begin(), next.end(), BigInt(0));
    bool any = false;
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t from = 0; from <= n; ++from) {
        const BigInt& walks = current[v * width + from];
        if (walks == 0) continue;
        any = true;
        for (Vertex w : g.edge_neighbors(static_cast<Vertex>(v))) {
          if (static_cast<std::size_t>(w) == from) continue;
          next[static_cast<std::size_t>(w) * width + v] += walks;
        }
        for (Vertex w : g.out_neighbors(static_cast<Vertex>(v))) {
          next[static_cast<std::size_t>(w) * width + n] += walks;
        }
      }
    }
    if (!any) break;
    std::swap(current, next);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t from = 0; from <= n; ++from) nu[v] += current[v * width + from];
    }
  }
  return nu;
}

std::optional<Vertex> RepeatMultiset::rep() const {
  if (total != 1) return std::nullopt;
  return excess.begin()->first;
}

RepeatMultiset repeat_multiset(const MixedGraph& g, Vertex u, int k) {
  RepeatMultiset rm;
  rm.root = u;
  rm.radius = k;
  const std::vector<BigInt> nu = tree_walk_counts(g, u, k);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (nu[v] >= 2) {
      rm.excess.emplace(v, nu[v] - 1);
      rm.total += nu[v] - 1;
    }
  }
  return rm;
}

}  // namespace mixedmoore
