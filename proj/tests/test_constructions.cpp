#include <doctest.h>

#include "adapt.hpp"
#include "mixedmoore/canonical.hpp"
#include "mixedmoore/constructions.hpp"
#include "mixedmoore/mgf.hpp"
#include "mixedmoore/search.hpp"

using namespace mixedmoore;

TEST_SUITE("constructions") {

TEST_CASE("cycles") {
  CHECK(total_regularity(cycle(5, false)) == DegreePair{2, 0});
  CHECK(diameter(cycle(5, false)) == 2);
  CHECK(total_regularity(cycle(5, true)) == DegreePair{0, 1});
  CHECK(diameter(cycle(5, true)) == 4);
  CHECK(cycle(3, true).arcs().size() == 3);
  CHECK(cycle(3, true).edges().empty());
  CHECK_THROWS_AS(cycle(2, false), std::invalid_argument);
}

TEST_CASE("line digraph of the digon cycle") {
  for (int n = 3; n <= 9; ++n) {
    const MixedGraph g = line_digraph_of_cycle_digons(n);
    CHECK(g.order() == 2 * n);
    CHECK(total_regularity(g) == DegreePair{1, 1});
  }
  CHECK(diameter(line_digraph_of_cycle_digons(5)) == 3);
  CHECK(is_isomorphic(line_digraph_of_cycle_digons(5), read_mgf(golden_path(0))));

  SearchSpec spec;
  spec.k = 2;
  spec.n = 6;
  spec.mode = DiameterMode::AtMost;
  const SearchResult six = enumerate(spec);
  REQUIRE(six.classes.size() == 1);
  CHECK(six.classes[0] == canonical_form(line_digraph_of_cycle_digons(3)));
}

TEST_CASE("dihedral Cayley graph") {
  for (int n = 3; n <= 9; ++n) {
    const MixedGraph g = cayley_dihedral(n);
    CHECK(total_regularity(g) == DegreePair{1, 1});
    CHECK(g.edges().size() == static_cast<std::size_t>(n));
    CHECK(g.arcs().size() == static_cast<std::size_t>(2 * n));
    // Vertex-transitive: a single orbit.
    const CanonicalResult res = canonical_search(g);
    CHECK(std::all_of(res.orbit.begin(), res.orbit.end(), [](Vertex v) { return v == 0; }));
    CHECK(res.automorphisms == 2 * n);
    CHECK(is_isomorphic(g, line_digraph_of_cycle_digons(n)));
  }
  const MixedGraph d5 = cayley_dihedral(5);
  CHECK(is_isomorphic(d5, converse(d5)));
  CHECK(is_isomorphic(d5, read_mgf(golden_path(0))));
}

}  // TEST_SUITE
