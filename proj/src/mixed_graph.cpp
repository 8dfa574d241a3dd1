#include "mixedmoore/mixed_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace mixedmoore {

const char* to_string(GraphErrc code) {
  switch (code) {
    case GraphErrc::SelfLoop: return "SelfLoop";
    case GraphErrc::Duplicate: return "Duplicate";
    case GraphErrc::DigonConflict: return "DigonConflict";
    case GraphErrc::ParallelArcEdge: return "ParallelArcEdge";
    case GraphErrc::LabelOutOfRange: return "LabelOutOfRange";
    case GraphErrc::SizeLimitExceeded: return "SizeLimitExceeded";
  }
  return "Unknown";
}

namespace {

std::string pair_text(const VertexPair& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

[[noreturn]] void fail(GraphErrc code, const std::string& detail) {
  throw GraphError(code, std::string(to_string(code)) + ": " + detail);
}

}  // namespace

MixedGraph MixedGraph::build(int n, std::vector<VertexPair> edges, std::vector<VertexPair> arcs,
                             Strictness strictness) {
  if (n < 0) fail(GraphErrc::LabelOutOfRange, "negative vertex count");
  const auto check = [n](const VertexPair& p) {
    if (p.first < 0 || p.first >= n || p.second < 0 || p.second >= n) {
      fail(GraphErrc::LabelOutOfRange, pair_text(p) + " with n = " + std::to_string(n));
    }
    if (p.first == p.second) fail(GraphErrc::SelfLoop, pair_text(p));
  };
  for (auto& e : edges) {
    check(e);
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  for (const auto& a : arcs) check(a);

  std::sort(edges.begin(), edges.end());
  if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end()) {
    fail(GraphErrc::Duplicate, "edge " + pair_text(*it));
  }
  std::sort(arcs.begin(), arcs.end());
  if (auto it = std::adjacent_find(arcs.begin(), arcs.end()); it != arcs.end()) {
    fail(GraphErrc::Duplicate, "arc " + pair_text(*it));
  }

  const std::set<VertexPair> arc_set(arcs.begin(), arcs.end());
  std::vector<VertexPair> kept_arcs;
  kept_arcs.reserve(arcs.size());
  for (const auto& a : arcs) {
    if (!arc_set.contains({a.second, a.first})) {
      kept_arcs.push_back(a);
      continue;
    }
    if (strictness == Strictness::Strict) fail(GraphErrc::DigonConflict, "arcs " + pair_text(a));
    if (a.first < a.second) edges.emplace_back(a.first, a.second);
  }
  if (kept_arcs.size() != arcs.size()) {
    std::sort(edges.begin(), edges.end());
    if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end()) {
      fail(GraphErrc::Duplicate, "edge " + pair_text(*it) + " (after folding a digon)");
    }
  }

  const std::set<VertexPair> edge_set(edges.begin(), edges.end());
  for (const auto& a : kept_arcs) {
    if (edge_set.contains({std::min(a.first, a.second), std::max(a.first, a.second)})) {
      fail(GraphErrc::ParallelArcEdge, "arc " + pair_text(a));
    }
  }

  MixedGraph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.arcs_ = std::move(kept_arcs);
  g.edge_adj_.assign(static_cast<std::size_t>(n), {});
  g.out_adj_.assign(static_cast<std::size_t>(n), {});
  g.in_adj_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [u, v] : g.edges_) {
    g.edge_adj_[u].push_back(v);
    g.edge_adj_[v].push_back(u);
  }
  for (const auto& [u, v] : g.arcs_) {
    g.out_adj_[u].push_back(v);
    g.in_adj_[v].push_back(u);
  }
  for (auto& list : g.edge_adj_) std::sort(list.begin(), list.end());
  for (auto& list : g.in_adj_) std::sort(list.begin(), list.end());
  return g;
}

bool MixedGraph::has_edge(Vertex u, Vertex v) const {
  return std::binary_search(edge_adj_[u].begin(), edge_adj_[u].end(), v);
}

bool MixedGraph::has_arc(Vertex u, Vertex v) const {
  return std::binary_search(out_adj_[u].begin(), out_adj_[u].end(), v);
}

MixedGraph relabel(const MixedGraph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw std::invalid_argument("relabel: permutation size does not match the order");
  }
  std::vector<bool> seen(perm.size(), false);
  for (Vertex v : perm) {
    if (v < 0 || v >= g.order() || seen[v]) {
      throw std::invalid_argument("relabel: not a permutation of 0..n-1");
    }
    seen[v] = true;
  }
  std::vector<VertexPair> edges;
  std::vector<VertexPair> arcs;
  edges.reserve(g.edges().size());
  arcs.reserve(g.arcs().size());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  for (const auto& [u, v] : g.arcs()) arcs.emplace_back(perm[u], perm[v]);
  return MixedGraph::build(g.order(), std::move(edges), std::move(arcs));
}

MixedGraph converse(const MixedGraph& g) {
  std::vector<VertexPair> arcs;
  arcs.reserve(g.arcs().size());
  for (const auto& [u, v] : g.arcs()) arcs.emplace_back(v, u);
  return MixedGraph::build(g.order(), g.edges(), std::move(arcs));
}

DegreeProfile degrees(const MixedGraph& g) {
  DegreeProfile profile(static_cast<std::size_t>(g.order()));
  for (Vertex u = 0; u < g.order(); ++u) {
    profile[u] = VertexDegrees{static_cast<int>(g.edge_neighbors(u).size()),
                               static_cast<int>(g.out_neighbors(u).size()),
                               static_cast<int>(g.in_neighbors(u).size())};
  }
  return profile;
}

std::optional<DegreePair> total_regularity(const MixedGraph& g) {
  if (g.order() == 0) return std::nullopt;
  const DegreeProfile profile = degrees(g);
  const VertexDegrees first = profile.front();
  if (first.out != first.in) return std::nullopt;
  for (const auto& d : profile) {
    if (d != first) return std::nullopt;
  }
  if (first.edge + first.out == 0) return std::nullopt;
  return DegreePair{first.edge, first.out};
}

std::vector<int> distances_from(const MixedGraph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  const auto visit = [&](Vertex from, Vertex to) {
    if (dist[to] == kUnreachable) {
      dist[to] = dist[from] + 1;
      queue.push_back(to);
    }
  };
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.edge_neighbors(u)) visit(u, v);
    for (Vertex v : g.out_neighbors(u)) visit(u, v);
  }
  return dist;
}

DistanceMatrix distances(const MixedGraph& g) {
  DistanceMatrix d(g.order(), g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    const std::vector<int> row = distances_from(g, u);
    for (Vertex v = 0; v < g.order(); ++v) d(u, v) = row[v];
  }
  return d;
}

std::optional<int> diameter(const MixedGraph& g) {
  int best = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (int d : distances_from(g, u)) {
      if (d == kUnreachable) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

std::vector<std::vector<Vertex>> layers(const MixedGraph& g, Vertex u) {
  std::vector<std::vector<Vertex>> out;
  const std::vector<int> dist = distances_from(g, u);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (dist[v] == kUnreachable) continue;
    if (static_cast<int>(out.size()) <= dist[v]) out.resize(static_cast<std::size_t>(dist[v]) + 1);
    out[dist[v]].push_back(v);
  }
  return out;
}

}  // namespace mixedmoore
