#pragma once

#include "mixedmoore/mixed_graph.hpp"

namespace mixedmoore {

/// C_n with edges, or the directed cycle 0 -> 1 -> ... -> n-1 -> 0.
MixedGraph cycle(int n, bool directed);

/// Line digraph of C_n with every edge replaced by a digon. Vertex 2i is the
/// arc i -> i+1 and vertex 2i+1 the arc i+1 -> i; the opposite arc pairs of
/// the line digraph become edges, leaving a (1,1)-regular mixed graph.
MixedGraph line_digraph_of_cycle_digons(int n);

/// Cayley graph of D_n = <rho, sigma | rho^n = sigma^2 = (rho sigma)^2 = 1>
/// with an arc x -> x rho and an edge {x, x sigma}. Element rho^i sigma^j is
/// vertex i + n j.
MixedGraph cayley_dihedral(int n);

}  // namespace mixedmoore
