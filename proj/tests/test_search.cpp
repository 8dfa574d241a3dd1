#include <doctest.h>

#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "adapt.hpp"
#include "mixedmoore/canonical.hpp"
#include "mixedmoore/constructions.hpp"
#include "mixedmoore/mgf.hpp"
#include "mixedmoore/search.hpp"
#include "mixedmoore/walks.hpp"

using namespace mixedmoore;

namespace {

SearchResult run(int r, int z, int k, int n, DiameterMode mode, int jobs = 1) {
  SearchSpec spec;
  spec.dp = {r, z};
  spec.k = k;
  spec.n = n;
  spec.mode = mode;
  spec.jobs = jobs;
  return enumerate(spec);
}

std::vector<std::string> encodings(const SearchResult& res) {
  std::vector<std::string> out;
  for (const CanonicalForm& c : res.classes) out.push_back(c.encoding);
  return out;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("extremal (1,1) graphs of diameter three") {
  const SearchResult res = run(1, 1, 3, 10, DiameterMode::Exact);
  REQUIRE(res.class_count == 3);
  REQUIRE(res.classes.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(is_isomorphic(parse_mgf(res.classes[i].encoding), read_mgf(golden_path(i))));
    CHECK(res.classes[i].encoding == canonical_form(read_mgf(golden_path(i))).encoding);
  }
  CHECK(std::is_sorted(res.classes.begin(), res.classes.end()));
}

TEST_CASE("small spot counts") {
  CHECK(run(1, 1, 3, 11, DiameterMode::AtMost).class_count == 0);
  CHECK(run(1, 1, 2, 6, DiameterMode::AtMost).class_count == 1);
  const SearchResult c5 = run(2, 0, 2, 5, DiameterMode::Exact);
  REQUIRE(c5.class_count == 1);
  CHECK(is_isomorphic(parse_mgf(c5.classes[0].encoding), cycle(5, false)));
  const SearchResult six = run(1, 1, 2, 6, DiameterMode::AtMost);
  CHECK(is_isomorphic(parse_mgf(six.classes[0].encoding), line_digraph_of_cycle_digons(3)));
}

TEST_CASE("infeasible parameters give an empty result with a reason") {
  const SearchResult odd = run(1, 1, 3, 11, DiameterMode::Exact);
  CHECK(odd.class_count == 0);
  REQUIRE(odd.infeasible_reason.has_value());
  CHECK(infeasibility({3, 0}, 5).has_value());
  CHECK(infeasibility({1, 2}, 4).has_value());  // needs 1 + r + 2z = 6 vertices
  CHECK_FALSE(infeasibility({1, 1}, 10).has_value());
}

TEST_CASE("cap") {
  SearchSpec spec;
  spec.n = 18;
  CHECK_THROWS_AS(enumerate(spec), CapExceeded);
  spec.cap = 100;
  spec.n = 70;
  CHECK_THROWS_AS(enumerate(spec), CapExceeded);
}

TEST_CASE("cap from the environment") {
  ::setenv("MOORE_SEARCH_CAP", "20", 1);
  CHECK(search_cap_from_env() == 20);
  ::setenv("MOORE_SEARCH_CAP", "500", 1);
  CHECK(search_cap_from_env() == kHardSearchCap);
  ::setenv("MOORE_SEARCH_CAP", "bogus", 1);
  CHECK_THROWS_AS(search_cap_from_env(), std::invalid_argument);
  ::unsetenv("MOORE_SEARCH_CAP");
  CHECK(search_cap_from_env() == kDefaultSearchCap);
}

TEST_CASE("regular skeletons match brute force class counts") {
  for (int n = 3; n <= 8; ++n) {
    CHECK(regular_skeletons(2, n).size() == oracle::all_regular_classes(2, 0, n).size());
  }
  CHECK(regular_skeletons(1, 6).size() == 1);
  CHECK(regular_skeletons(1, 5).empty());
  CHECK(regular_skeletons(3, 8).size() == 6);  // five connected cubic graphs plus 2 K4
  CHECK(regular_skeletons(0, 4).size() == 1);
}

TEST_CASE("completeness against generate-and-filter") {
  for (const auto& [r, z] : std::vector<std::pair<int, int>>{{1, 1}, {2, 0}, {0, 1}}) {
    for (int n = 1; n <= 8; ++n) {
      const auto reps = oracle::all_regular_classes(r, z, n);
      const auto by_d = oracle::classes_by_diameter(reps, 8);
      int at_most = 0;
      for (int k = 0; k <= 4; ++k) {
        at_most += by_d[k];
        CAPTURE(r);
        CAPTURE(z);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(run(r, z, k, n, DiameterMode::AtMost).class_count == static_cast<std::size_t>(at_most));
        CHECK(run(r, z, k, n, DiameterMode::Exact).class_count == static_cast<std::size_t>(by_d[k]));
      }
    }
  }
}

TEST_CASE("emitted graphs are sound") {
  for (const auto& [r, z, k, n] : std::vector<std::array<int, 4>>{
           {1, 1, 3, 10}, {1, 1, 3, 8}, {1, 1, 4, 10}, {2, 0, 3, 7}, {0, 1, 4, 5}, {1, 2, 3, 8},
           {2, 1, 2, 7}}) {
    const SearchResult res = run(r, z, k, n, DiameterMode::AtMost);
    std::set<std::string> seen;
    for (const CanonicalForm& c : res.classes) {
      const MixedGraph g = parse_mgf(c.encoding);
      CHECK(total_regularity(g) == DegreePair{r, z});
      REQUIRE(diameter(g).has_value());
      CHECK(*diameter(g) <= k);
      CHECK(g.order() == n);
      CHECK(seen.insert(c.encoding).second);
    }
  }
}

TEST_CASE("repeat lower bound on emitted mixed graphs") {
  for (const auto& [r, z, k, n] : std::vector<std::array<int, 4>>{
           {1, 1, 3, 10}, {1, 1, 3, 8}, {1, 1, 4, 10}, {1, 1, 4, 12}, {1, 2, 3, 8}}) {
    for (const CanonicalForm& c : run(r, z, k, n, DiameterMode::AtMost).classes) {
      const MixedGraph g = parse_mgf(c.encoding);
      for (Vertex u = 0; u < n; ++u) CHECK(repeat_multiset(g, u, k).total >= r);
    }
  }
}

TEST_CASE("results do not depend on the number of workers") {
  for (const auto& [r, z, k, n] : std::vector<std::array<int, 4>>{
           {1, 1, 3, 10}, {1, 1, 4, 12}, {2, 1, 2, 7}, {0, 2, 2, 6}}) {
    const SearchResult one = run(r, z, k, n, DiameterMode::AtMost, 1);
    const SearchResult four = run(r, z, k, n, DiameterMode::AtMost, 4);
    CHECK(encodings(one) == encodings(four));
    CHECK(one.counters.nodes == four.counters.nodes);
    CHECK(one.counters.pruned == four.counters.pruned);
  }
}

TEST_CASE("count only") {
  SearchSpec spec;
  spec.count_only = true;
  const SearchResult res = enumerate(spec);
  CHECK(res.class_count == 3);
  CHECK(res.classes.empty());
}

TEST_CASE("max order") {
  CHECK(max_order({1, 1}, 3).order == 10);
  CHECK(max_order({1, 1}, 2).order == 6);
  CHECK(max_order({2, 0}, 1).order == 3);
  CHECK(max_order({0, 1}, 3).order == 4);
}

TEST_CASE("output files and run log") {
  SearchSpec spec;
  const SearchResult res = enumerate(spec);
  CHECK(class_file_name(spec, 2) == "1_1_k3_n10_2.mgf");
  const auto dir = std::filesystem::temp_directory_path() / "mixedmoore_search_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto paths = write_classes(spec, res, dir);
  REQUIRE(paths.size() == 3);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    CHECK(paths[i].filename() == class_file_name(spec, i));
    CHECK(to_mgf(read_mgf(paths[i])) == res.classes[i].encoding);
  }
  std::filesystem::remove_all(dir);

  std::istringstream log(run_log_jsonl(spec, res));
  std::string line;
  std::size_t records = 0;
  nlohmann::json last;
  while (std::getline(log, line)) {
    last = nlohmann::json::parse(line);
    ++records;
  }
  CHECK(records == res.task_counters.size() + 1);
  CHECK(last["classes"] == 3);
}

}  // TEST_SUITE
