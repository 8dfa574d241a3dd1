#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "mixedmoore/bounds.hpp"

namespace mixedmoore {

using Vertex = int;
using VertexPair = std::pair<Vertex, Vertex>;

enum class GraphErrc {
  SelfLoop,
  Duplicate,
  DigonConflict,
  ParallelArcEdge,
  LabelOutOfRange,
  SizeLimitExceeded,
};

const char* to_string(GraphErrc code);

class GraphError : public std::invalid_argument {
 public:
  GraphError(GraphErrc code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  GraphErrc code() const { return code_; }

 private:
  GraphErrc code_;
};

enum class Strictness {
  Strict,   // digons are rejected
  Lenient,  // an opposite arc pair is folded into one edge
};

/// Vertices 0..n-1, undirected edges and directed arcs. Immutable once built.
///
/// Invariants: no loops, no repeated edge or arc, no digon among the arcs,
/// and no arc running parallel to an edge. Edges are stored as (u, v) with
/// u < v; both lists are sorted.
class MixedGraph {
 public:
  MixedGraph() = default;

  /// Validating constructor; see build().
  static MixedGraph build(int n, std::vector<VertexPair> edges, std::vector<VertexPair> arcs,
                          Strictness strictness = Strictness::Strict);

  int order() const { return n_; }
  const std::vector<VertexPair>& edges() const { return edges_; }
  const std::vector<VertexPair>& arcs() const { return arcs_; }

  std::span<const Vertex> edge_neighbors(Vertex u) const { return edge_adj_[u]; }
  std::span<const Vertex> out_neighbors(Vertex u) const { return out_adj_[u]; }
  std::span<const Vertex> in_neighbors(Vertex u) const { return in_adj_[u]; }

  bool has_edge(Vertex u, Vertex v) const;
  bool has_arc(Vertex u, Vertex v) const;

  friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<VertexPair> arcs_;
  std::vector<std::vector<Vertex>> edge_adj_;
  std::vector<std::vector<Vertex>> out_adj_;
  std::vector<std::vector<Vertex>> in_adj_;
};

inline MixedGraph build(int n, std::vector<VertexPair> edges, std::vector<VertexPair> arcs,
                        Strictness strictness = Strictness::Strict) {
  return MixedGraph::build(n, std::move(edges), std::move(arcs), strictness);
}

/// Relabels vertex u to perm[u].
MixedGraph relabel(const MixedGraph& g, std::span<const Vertex> perm);

/// Same edges, every arc reversed.
MixedGraph converse(const MixedGraph& g);

struct VertexDegrees {
  int edge = 0;
  int out = 0;
  int in = 0;
  friend bool operator==(const VertexDegrees&, const VertexDegrees&) = default;
};

using DegreeProfile = std::vector<VertexDegrees>;

DegreeProfile degrees(const MixedGraph& g);

/// (r, z) when every vertex has edge-degree r and in- and out-degree z.
std::optional<DegreePair> total_regularity(const MixedGraph& g);

inline constexpr int kUnreachable = -1;

/// dist(u, v) from row u to column v; kUnreachable when there is no path.
/// Edges are traversed both ways, arcs only forward.
using DistanceMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

std::vector<int> distances_from(const MixedGraph& g, Vertex source);
DistanceMatrix distances(const MixedGraph& g);

/// Largest distance over ordered pairs; nullopt if some pair is unreachable.
std::optional<int> diameter(const MixedGraph& g);

/// G_i(u) for i = 0, 1, ... up to the eccentricity of u.
std::vector<std::vector<Vertex>> layers(const MixedGraph& g, Vertex u);

/// Adjacency of G seen as a digraph: an edge contributes both directions.
template <typename Scalar = int>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix(const MixedGraph& g) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix a = Matrix::Zero(g.order(), g.order());
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = Scalar(1);
    a(v, u) = Scalar(1);
  }
  for (const auto& [u, v] : g.arcs()) a(u, v) = Scalar(1);
  return a;
}

}  // namespace mixedmoore
