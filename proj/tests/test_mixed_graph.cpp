#include <doctest.h>

#include <numeric>
#include <random>

#include "adapt.hpp"
#include "mixedmoore/constructions.hpp"
#include "mixedmoore/mgf.hpp"
#include "mixedmoore/mixed_graph.hpp"

using namespace mixedmoore;

namespace {

// Random strict mixed graph: each unordered pair independently becomes
// nothing, an edge, or an arc in one of the two directions.
MixedGraph random_graph(std::mt19937& rng, int n, double p_edge, double p_arc) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<VertexPair> edges;
  std::vector<VertexPair> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double x = coin(rng);
      if (x < p_edge) {
        edges.emplace_back(u, v);
      } else if (x < p_edge + p_arc) {
        if (coin(rng) < 0.5) {
          arcs.emplace_back(u, v);
        } else {
          arcs.emplace_back(v, u);
        }
      }
    }
  }
  return build(n, edges, arcs);
}

GraphErrc build_error(int n, std::vector<VertexPair> edges, std::vector<VertexPair> arcs,
                      Strictness s = Strictness::Strict) {
  try {
    build(n, std::move(edges), std::move(arcs), s);
  } catch (const GraphError& e) {
    return e.code();
  }
  FAIL("expected a GraphError");
  return GraphErrc::SelfLoop;
}

}  // namespace

TEST_SUITE("mixed_graph") {

TEST_CASE("build normalizes and validates") {
  const MixedGraph g = build(4, {{2, 1}, {0, 3}}, {{3, 1}, {0, 2}});
  CHECK(g.edges() == std::vector<VertexPair>{{0, 3}, {1, 2}});
  CHECK(g.arcs() == std::vector<VertexPair>{{0, 2}, {3, 1}});
  CHECK(g.has_edge(2, 1));
  CHECK(g.has_arc(3, 1));
  CHECK_FALSE(g.has_arc(1, 3));

  CHECK(build_error(3, {{0, 0}}, {}) == GraphErrc::SelfLoop);
  CHECK(build_error(3, {}, {{1, 1}}) == GraphErrc::SelfLoop);
  CHECK(build_error(3, {{0, 1}, {1, 0}}, {}) == GraphErrc::Duplicate);
  CHECK(build_error(3, {}, {{0, 1}, {0, 1}}) == GraphErrc::Duplicate);
  CHECK(build_error(3, {}, {{0, 1}, {1, 0}}) == GraphErrc::DigonConflict);
  CHECK(build_error(3, {{0, 1}}, {{0, 1}}) == GraphErrc::ParallelArcEdge);
  CHECK(build_error(3, {{0, 1}}, {{1, 0}}) == GraphErrc::ParallelArcEdge);
  CHECK(build_error(3, {{0, 3}}, {}) == GraphErrc::LabelOutOfRange);
  CHECK(build_error(3, {}, {{-1, 2}}) == GraphErrc::LabelOutOfRange);
}

TEST_CASE("lenient build folds digons into edges") {
  const MixedGraph g = build(2, {}, {{0, 1}, {1, 0}}, Strictness::Lenient);
  CHECK(g.edges() == std::vector<VertexPair>{{0, 1}});
  CHECK(g.arcs().empty());
  // A digon on top of an existing edge is a duplicate edge.
  CHECK(build_error(2, {{0, 1}}, {{0, 1}, {1, 0}}, Strictness::Lenient) == GraphErrc::Duplicate);
}

TEST_CASE("degree profile sums") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const MixedGraph g = random_graph(rng, 9, 0.25, 0.35);
    const DegreeProfile p = degrees(g);
    int edge_sum = 0;
    int out_sum = 0;
    int in_sum = 0;
    for (const VertexDegrees& d : p) {
      edge_sum += d.edge;
      out_sum += d.out;
      in_sum += d.in;
    }
    CHECK(edge_sum == 2 * static_cast<int>(g.edges().size()));
    CHECK(out_sum == static_cast<int>(g.arcs().size()));
    CHECK(in_sum == static_cast<int>(g.arcs().size()));
  }
}

TEST_CASE("total regularity") {
  CHECK(total_regularity(cycle(4, true)) == DegreePair{0, 1});
  CHECK(total_regularity(cycle(6, false)) == DegreePair{2, 0});
  CHECK_FALSE(total_regularity(build(3, {{0, 1}, {1, 2}}, {})).has_value());
  CHECK_FALSE(total_regularity(build(3, {}, {})).has_value());
  // Out-degree one everywhere but in-degrees differ.
  CHECK_FALSE(total_regularity(build(3, {}, {{0, 1}, {1, 2}, {2, 1}}, Strictness::Lenient)));
  for (int i = 0; i < 3; ++i) CHECK(total_regularity(read_mgf(golden_path(i))) == DegreePair{1, 1});
}

TEST_CASE("odd undirected degree forces an even order") {
  std::mt19937 rng(11);
  int regular_odd = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::uniform_int_distribution<int> size(3, 9);
    const MixedGraph g = random_graph(rng, size(rng), 0.2, 0.3);
    const auto dp = total_regularity(g);
    if (dp && dp->r % 2 == 1) {
      ++regular_odd;
      CHECK(g.order() % 2 == 0);
    }
  }
  // Structured cases, since random hits are rare.
  for (int n : {6, 8, 10}) {
    const MixedGraph g = line_digraph_of_cycle_digons(n / 2 + 1);
    CHECK(total_regularity(g) == DegreePair{1, 1});
    CHECK(g.order() % 2 == 0);
  }
  MESSAGE("random odd-r regular samples: " << regular_odd);
}

TEST_CASE("distances and diameter") {
  CHECK(diameter(cycle(5, false)) == 2);
  CHECK(diameter(cycle(5, true)) == 4);
  CHECK_FALSE(diameter(build(3, {{0, 1}}, {})).has_value());
  CHECK_FALSE(diameter(build(2, {}, {{0, 1}})).has_value());

  const MixedGraph a = read_mgf(golden_path(0));
  CHECK(diameter(a) == 3);
  const DistanceMatrix d = distances(a);
  bool asymmetric = false;
  for (int u = 0; u < a.order(); ++u) {
    CHECK(d(u, u) == 0);
    for (int v = 0; v < a.order(); ++v) asymmetric = asymmetric || d(u, v) != d(v, u);
  }
  CHECK(asymmetric);
}

TEST_CASE("distances match an independent BFS on random graphs") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const MixedGraph g = random_graph(rng, 8, 0.15, 0.3);
    CHECK(diameter(g) == oracle::diameter(to_oracle(g)));
  }
}

TEST_CASE("distance layers") {
  for (int i : {0, 1}) {
    const MixedGraph g = read_mgf(golden_path(i));
    for (Vertex u = 0; u < g.order(); ++u) {
      std::vector<std::size_t> sizes;
      for (const auto& layer : layers(g, u)) sizes.push_back(layer.size());
      CHECK(sizes == std::vector<std::size_t>{1, 2, 3, 4});
    }
  }
  std::vector<std::size_t> sizes;
  for (const auto& layer : layers(cycle(3, true), 0)) sizes.push_back(layer.size());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("converse") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const MixedGraph g = random_graph(rng, 7, 0.2, 0.4);
    CHECK(converse(converse(g)) == g);
    CHECK(converse(g).edges() == g.edges());
  }
  const MixedGraph c3 = cycle(3, true);
  CHECK(converse(c3) != c3);
  CHECK(converse(c3).has_arc(1, 0));
  const MixedGraph a = read_mgf(golden_path(0));
  CHECK(total_regularity(converse(a)) == total_regularity(a));
}

TEST_CASE("relabel") {
  const MixedGraph g = build(3, {{0, 1}}, {{1, 2}});
  const std::vector<Vertex> perm{2, 0, 1};
  const MixedGraph h = relabel(g, perm);
  CHECK(h.has_edge(2, 0));
  CHECK(h.has_arc(0, 1));
  CHECK_THROWS_AS(relabel(g, std::vector<Vertex>{0, 0, 1}), std::invalid_argument);
}

TEST_CASE("adjacency matrix") {
  const auto e = adjacency_matrix(build(2, {{0, 1}}, {}));
  CHECK(e(0, 1) == 1);
  CHECK(e(1, 0) == 1);
  const auto a = adjacency_matrix(build(2, {}, {{0, 1}}));
  CHECK(a(0, 1) == 1);
  CHECK(a(1, 0) == 0);
  const auto ga = adjacency_matrix(read_mgf(golden_path(0)));
  for (int u = 0; u < 10; ++u) CHECK(ga.row(u).sum() == 2);
}

}  // TEST_SUITE
