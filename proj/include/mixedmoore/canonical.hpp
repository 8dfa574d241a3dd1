#pragma once

// Canonical labeling of mixed graphs by individualization and refinement.
//
// Vertices are first colored by (edge degree, out-degree, in-degree) and the
// coloring is refined until every color class sees the same multiset of
// neighbor colors along edges, out-arcs and in-arcs. Non-discrete colorings
// are resolved by individualizing each vertex of the first non-singleton
// class in turn. Every leaf of that search tree yields a relabeling; the one
// with the lexicographically smallest relabeled adjacency wins. The tree is
// explored completely, so leaves tying with the winner are in bijection with
// automorphisms.

#include <span>
#include <string>
#include <vector>

#include "mixedmoore/bigint.hpp"
#include "mixedmoore/mixed_graph.hpp"

namespace mixedmoore {

inline constexpr int kDefaultCanonicalCap = 64;

struct CanonicalForm {
  std::vector<Vertex> relabeling;  // vertex u becomes relabeling[u]
  std::string encoding;            // MGF text of the relabeled graph

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.encoding == b.encoding;
  }
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    return a.encoding <=> b.encoding;
  }
};

struct CanonicalResult {
  CanonicalForm form;
  BigInt automorphisms;
  std::vector<Vertex> orbit;  // smallest vertex of each vertex's Aut-orbit
};

/// Full canonical search. `colors`, when non-empty, is an initial vertex
/// coloring that isomorphisms must preserve. Throws GraphError with
/// SizeLimitExceeded when the order exceeds max_order.
CanonicalResult canonical_search(const MixedGraph& g, std::span<const int> colors = {},
                                 int max_order = kDefaultCanonicalCap);

CanonicalForm canonical_form(const MixedGraph& g, int max_order = kDefaultCanonicalCap);
bool is_isomorphic(const MixedGraph& a, const MixedGraph& b);
BigInt automorphism_count(const MixedGraph& g);

/// The canonical representative itself.
MixedGraph canonical_graph(const MixedGraph& g);

}  // namespace mixedmoore
