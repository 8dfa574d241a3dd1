#pragma once

// Exhaustive isomorph-free enumeration of (r, z)-regular mixed graphs with a
// given order and diameter.
//
// Stage 1 lists the r-regular undirected skeletons up to isomorphism. Stage 2
// adds the arcs vertex by vertex (z out-arcs each, in-degree capped at z,
// no digons, no arc along an edge). Stage 3 prunes a partial graph as soon
// as some vertex cannot reach, or be reached from, all n vertices within k
// steps even if every free arc slot opened a full Moore subtree. Stage 4
// keeps one canonical form per isomorphism class; for z = 1 arc targets in
// untouched skeleton components are restricted to one orbit representative
// of the first untouched component of each kind.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixedmoore/bounds.hpp"
#include "mixedmoore/canonical.hpp"
#include "mixedmoore/mixed_graph.hpp"

namespace mixedmoore {

inline constexpr int kDefaultSearchCap = 16;
inline constexpr int kHardSearchCap = 64;  // bitset width

enum class DiameterMode { Exact, AtMost };

struct SearchSpec {
  DegreePair dp{1, 1};
  int k = 3;
  int n = 10;
  DiameterMode mode = DiameterMode::Exact;
  bool count_only = false;
  int jobs = 1;
  int cap = kDefaultSearchCap;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchCounters {
  std::uint64_t nodes = 0;                  // partial arc assignments visited
  std::uint64_t leaves = 0;                 // complete (r,z)-regular graphs reached
  std::map<std::string, std::uint64_t> pruned;  // rule -> count

  SearchCounters& operator+=(const SearchCounters& other);
};

struct SearchResult {
  std::vector<CanonicalForm> classes;  // sorted by encoding; empty when count_only
  std::size_t class_count = 0;
  std::size_t skeletons = 0;
  SearchCounters counters;
  std::vector<SearchCounters> task_counters;  // per work unit, in task order
  std::optional<std::string> infeasible_reason;
  std::chrono::duration<double> wall_time{0};
};

/// Reads MOORE_SEARCH_CAP, falling back to kDefaultSearchCap.
int search_cap_from_env();

/// Reason the parameters admit no graph at all, if a counting argument
/// rules them out.
std::optional<std::string> infeasibility(const DegreePair& dp, int n);

/// Non-isomorphic r-regular simple graphs on n vertices.
std::vector<MixedGraph> regular_skeletons(int r, int n);

/// Throws CapExceeded when n > spec.cap (or > kHardSearchCap). Infeasible
/// parameter sets yield an empty result with infeasible_reason set.
SearchResult enumerate(const SearchSpec& spec);

struct MaxOrderResult {
  std::optional<int> order;
  SearchResult result;
};

/// Largest n in [n_lo, n_hi] admitting a graph of diameter at most k.
/// n_hi defaults to improved_bound(dp, k).
MaxOrderResult max_order(const DegreePair& dp, int k, std::optional<int> n_hi = std::nullopt,
                         int n_lo = 1, int jobs = 1, int cap = kDefaultSearchCap);

/// `<r>_<z>_k<k>_n<n>_<index>.mgf`
std::string class_file_name(const SearchSpec& spec, std::size_t index);

/// Writes every class as MGF into `dir`; returns the paths written.
std::vector<std::filesystem::path> write_classes(const SearchSpec& spec,
                                                 const SearchResult& result,
                                                 const std::filesystem::path& dir);

/// One JSON object per task counter snapshot followed by a totals record.
std::string run_log_jsonl(const SearchSpec& spec, const SearchResult& result);

}  // namespace mixedmoore
