#pragma once

// Moore-tree walk counting and repeated vertices.
//
// The Moore tree rooted at u enumerates the walks of length <= k from u that
// never step straight back along the edge they just used. When every such
// walk ends at a distinct vertex the graph attains the Moore bound; every
// extra walk reaching an already reached vertex is a repeat.

#include <map>
#include <optional>
#include <vector>

#include "mixedmoore/bigint.hpp"
#include "mixedmoore/mixed_graph.hpp"

namespace mixedmoore {

/// nu(v): number of non-backtracking walks of length <= k from u to v,
/// counting the empty walk at u. Arcs carry no backtracking restriction.
std::vector<BigInt> tree_walk_counts(const MixedGraph& g, Vertex u, int k);

struct RepeatMultiset {
  Vertex root = 0;
  int radius = 0;
  std::map<Vertex, BigInt> excess;  // v -> nu(v) - 1, only where nu(v) >= 2
  BigInt total = 0;

  /// The single repeated vertex when |Rep(u)| = 1.
  std::optional<Vertex> rep() const;
};

RepeatMultiset repeat_multiset(const MixedGraph& g, Vertex u, int k);

}  // namespace mixedmoore
