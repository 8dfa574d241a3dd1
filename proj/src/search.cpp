#include "mixedmoore/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <functional>
#include <memory>
#include <thread>

#include <json.hpp>

#include "mixedmoore/mgf.hpp"

namespace mixedmoore {

SearchCounters& SearchCounters::operator+=(const SearchCounters& other) {
  nodes += other.nodes;
  leaves += other.leaves;
  for (const auto& [rule, count] : other.pruned) pruned[rule] += count;
  return *this;
}

int search_cap_from_env() {
  const char* raw = std::getenv("MOORE_SEARCH_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultSearchCap;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 1) {
    throw std::invalid_argument("MOORE_SEARCH_CAP must be a positive integer");
  }
  return static_cast<int>(std::min<long>(value, kHardSearchCap));
}

std::optional<std::string> infeasibility(const DegreePair& dp, int n) {
  if (n < 1) return "order must be positive";
  if ((dp.r * n) % 2 != 0) {
    return "r = " + std::to_string(dp.r) + " is odd, so the order must be even (edge handshake)";
  }
  if (n < 1 + dp.r + 2 * dp.z) {
    return "each vertex needs r + 2z = " + std::to_string(dp.r + 2 * dp.z) +
           " distinct neighbours, more than n - 1 = " + std::to_string(n - 1);
  }
  return std::nullopt;
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

// Vertices 0..v-1.
constexpr Mask below(int v) { return v >= 64 ? ~Mask{0} : bit(v) - 1; }

int popcount(Mask m) { return std::popcount(m); }

MixedGraph graph_from_masks(int n, const std::vector<Mask>& edge, const std::vector<Mask>& out) {
  std::vector<VertexPair> edges;
  std::vector<VertexPair> arcs;
  for (int u = 0; u < n; ++u) {
    for (Mask m = edge[u]; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (u < v) edges.emplace_back(u, v);
    }
    for (Mask m = out[u]; m != 0; m &= m - 1) arcs.emplace_back(u, std::countr_zero(m));
  }
  return MixedGraph::build(n, std::move(edges), std::move(arcs));
}

// Skeleton plus the component data used for orbit pruning of arc targets.
struct Skeleton {
  int n = 0;
  std::vector<Mask> edge;
  std::vector<int> component;       // component index per vertex
  std::vector<Mask> component_mask;  // ordered by smallest vertex
  std::vector<int> component_kind;   // isomorphism class of the component
  Mask orbit_reps = 0;               // one vertex per orbit inside each component
};

Skeleton analyse_skeleton(const MixedGraph& g) {
  Skeleton s;
  s.n = g.order();
  s.edge.assign(static_cast<std::size_t>(s.n), 0);
  for (const auto& [u, v] : g.edges()) {
    s.edge[u] |= bit(v);
    s.edge[v] |= bit(u);
  }
  s.component.assign(static_cast<std::size_t>(s.n), -1);
  for (int root = 0; root < s.n; ++root) {
    if (s.component[root] >= 0) continue;
    Mask reached = bit(root);
    Mask frontier = reached;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask m = frontier; m != 0; m &= m - 1) next |= s.edge[std::countr_zero(m)];
      frontier = next & ~reached;
      reached |= next;
    }
    const int id = static_cast<int>(s.component_mask.size());
    s.component_mask.push_back(reached);
    for (Mask m = reached; m != 0; m &= m - 1) s.component[std::countr_zero(m)] = id;
  }

  std::map<std::string, int> kinds;
  for (const Mask members : s.component_mask) {
    std::vector<int> local(static_cast<std::size_t>(s.n), -1);
    std::vector<int> global;
    for (Mask m = members; m != 0; m &= m - 1) {
      local[std::countr_zero(m)] = static_cast<int>(global.size());
      global.push_back(std::countr_zero(m));
    }
    std::vector<VertexPair> edges;
    for (int u : global) {
      for (Mask m = s.edge[u]; m != 0; m &= m - 1) {
        const int v = std::countr_zero(m);
        if (u < v) edges.emplace_back(local[u], local[v]);
      }
    }
    const MixedGraph piece =
        MixedGraph::build(static_cast<int>(global.size()), std::move(edges), {});
    const CanonicalResult canon = canonical_search(piece, {}, kHardSearchCap);
    const auto [it, inserted] =
        kinds.emplace(canon.form.encoding, static_cast<int>(kinds.size()));
    s.component_kind.push_back(it->second);
    for (std::size_t i = 0; i < global.size(); ++i) {
      if (canon.orbit[i] == static_cast<int>(i)) s.orbit_reps |= bit(global[i]);
    }
  }
  return s;
}

struct PartialArcs {
  std::vector<Mask> out;
  std::vector<Mask> in;
};

struct TaskOutput {
  SearchCounters counters;
  std::map<std::string, CanonicalForm> classes;
};

// Arc extension over one skeleton. Read-only after construction, so one
// instance is shared by all workers.
class ArcSearch {
 public:
  ArcSearch(const SearchSpec& spec, Skeleton skeleton)
      : spec_(spec), n_(spec.n), z_(spec.dp.z), sk_(std::move(skeleton)) {
    all_ = below(n_);
    for (int j = 0; j <= spec.k; ++j) {
      const BigInt m = moore_bound(spec.dp, j);
      subtree_.push_back(m >= n_ ? n_ : static_cast<int>(m));
    }
  }

  PartialArcs empty() const {
    return PartialArcs{std::vector<Mask>(static_cast<std::size_t>(n_), 0),
                       std::vector<Mask>(static_cast<std::size_t>(n_), 0)};
  }

  // Runs the search from `pa`. With split_depth >= 0, partial assignments
  // holding that many arcs are handed to `emit_task` instead of explored.
  void explore(PartialArcs& pa, int depth, TaskOutput& out, int split_depth,
               const std::function<void(const PartialArcs&)>& emit_task) const {
    if (depth == split_depth) {
      emit_task(pa);
      return;
    }
    ++out.counters.nodes;
    int source = 0;
    while (source < n_ && popcount(pa.out[source]) == z_) ++source;
    if (source == n_) {
      leaf(pa, out);
      return;
    }

    Mask touched = sk_.component_mask[sk_.component[source]];
    for (int u = 0; u < n_; ++u) {
      if (pa.out[u] != 0 || pa.in[u] != 0) touched |= sk_.component_mask[sk_.component[u]];
    }
    const Mask allowed_untouched = z_ == 1 ? untouched_representatives(touched) : all_;

    Mask candidates = all_ & ~bit(source) & ~sk_.edge[source] & ~pa.out[source] & ~pa.in[source];
    if (pa.out[source] != 0) {
      // Out-neighbours are chosen in increasing order.
      const int last = 63 - std::countl_zero(pa.out[source]);
      candidates &= ~below(last + 1);
    }
    for (Mask m = candidates; m != 0; m &= m - 1) {
      const int t = std::countr_zero(m);
      if (popcount(pa.in[t]) >= z_) continue;
      if ((touched & bit(t)) == 0 && (allowed_untouched & bit(t)) == 0) {
        ++out.counters.pruned["orbit"];
        continue;
      }
      pa.out[source] |= bit(t);
      pa.in[t] |= bit(source);
      if (const char* rule = prune(pa)) {
        ++out.counters.pruned[rule];
      } else {
        explore(pa, depth + 1, out, split_depth, emit_task);
      }
      pa.out[source] &= ~bit(t);
      pa.in[t] &= ~bit(source);
    }
  }

 private:
  // Targets allowed outside touched components: the orbit representatives
  // of the first untouched component of each kind.
  Mask untouched_representatives(Mask touched) const {
    Mask allowed = 0;
    std::vector<bool> seen_kind;
    for (std::size_t c = 0; c < sk_.component_mask.size(); ++c) {
      if ((sk_.component_mask[c] & touched) != 0) continue;
      const auto kind = static_cast<std::size_t>(sk_.component_kind[c]);
      if (seen_kind.size() <= kind) seen_kind.resize(kind + 1, false);
      if (seen_kind[kind]) continue;
      seen_kind[kind] = true;
      allowed |= sk_.component_mask[c] & sk_.orbit_reps;
    }
    return allowed;
  }

  // Optimistic count of vertices within distance k of u, following known
  // adjacencies and charging a full Moore subtree to every free arc slot.
  int optimistic_reach(int u, const std::vector<Mask>& arcs, bool forward,
                       const PartialArcs& pa) const {
    Mask ball = bit(u);
    Mask frontier = ball;
    int extra = 0;
    for (int d = 0; d < spec_.k && frontier != 0; ++d) {
      Mask next = 0;
      for (Mask m = frontier; m != 0; m &= m - 1) {
        const int w = std::countr_zero(m);
        const int used = popcount(forward ? pa.out[w] : pa.in[w]);
        extra += (z_ - used) * subtree_[spec_.k - d - 1];
        next |= sk_.edge[w] | arcs[w];
      }
      frontier = next & ~ball;
      ball |= next;
      if (extra >= n_) return n_;
    }
    return popcount(ball) + extra;
  }

  const char* prune(const PartialArcs& pa) const {
    for (int u = 0; u < n_; ++u) {
      if (optimistic_reach(u, pa.out, true, pa) < n_) return "reach_out";
      if (optimistic_reach(u, pa.in, false, pa) < n_) return "reach_in";
    }
    return nullptr;
  }

  // Largest eccentricity, or -1 once some vertex exceeds k.
  int diameter_within_k(const PartialArcs& pa) const {
    int diam = 0;
    for (int u = 0; u < n_; ++u) {
      Mask ball = bit(u);
      Mask frontier = ball;
      int ecc = 0;
      while (ball != all_) {
        Mask next = 0;
        for (Mask m = frontier; m != 0; m &= m - 1) {
          const int w = std::countr_zero(m);
          next |= sk_.edge[w] | pa.out[w];
        }
        frontier = next & ~ball;
        if (frontier == 0 || ++ecc > spec_.k) return -1;
        ball |= frontier;
      }
      diam = std::max(diam, ecc);
    }
    return diam;
  }

  void leaf(const PartialArcs& pa, TaskOutput& out) const {
    ++out.counters.leaves;
    const int diam = diameter_within_k(pa);
    if (diam < 0 || (spec_.mode == DiameterMode::Exact && diam != spec_.k)) {
      ++out.counters.pruned["diameter"];
      return;
    }
    CanonicalForm form =
        canonical_form(graph_from_masks(n_, sk_.edge, pa.out), kHardSearchCap);
    std::string key = form.encoding;
    if (!out.classes.emplace(std::move(key), std::move(form)).second) {
      ++out.counters.pruned["isomorph"];
    }
  }

  const SearchSpec& spec_;
  int n_;
  int z_;
  Skeleton sk_;
  Mask all_ = 0;
  std::vector<int> subtree_;  // min(M(r,z,j), n)
};

constexpr int kSplitDepth = 2;

void run_tasks(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
}

}  // namespace

std::vector<MixedGraph> regular_skeletons(int r, int n) {
  if (r < 0 || n < 1) throw std::invalid_argument("regular_skeletons: bad parameters");
  if (n > kHardSearchCap) throw CapExceeded("skeleton order exceeds the bitset width");
  if (r == 0) return {MixedGraph::build(n, {}, {})};
  if ((r * n) % 2 != 0 || r >= n) return {};

  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  std::map<std::string, MixedGraph> found;

  // Fill vertices in order; vertices still of degree 0 are interchangeable,
  // so only the smallest of them is ever tried as a new neighbour.
  std::function<void(int)> fill = [&](int v) {
    while (v < n && popcount(adj[v]) == r) ++v;
    if (v == n) {
      MixedGraph g = graph_from_masks(n, adj, std::vector<Mask>(static_cast<std::size_t>(n), 0));
      std::string key = canonical_form(g, kHardSearchCap).encoding;
      found.emplace(std::move(key), std::move(g));
      return;
    }
    int floor = v + 1;
    for (Mask m = adj[v] & ~below(v + 1); m != 0; m &= m - 1) {
      floor = std::max(floor, std::countr_zero(m) + 1);
    }
    bool tried_fresh = false;
    for (int w = floor; w < n; ++w) {
      if (popcount(adj[w]) >= r) continue;
      if (adj[w] == 0) {
        if (tried_fresh) continue;
        tried_fresh = true;
      }
      adj[v] |= bit(w);
      adj[w] |= bit(v);
      fill(v);
      adj[v] &= ~bit(w);
      adj[w] &= ~bit(v);
    }
  };
  fill(0);

  std::vector<MixedGraph> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

SearchResult enumerate(const SearchSpec& spec) {
  validate(spec.dp);
  if (spec.k < 0) throw std::invalid_argument("diameter k must be nonnegative");
  const int cap = std::min(spec.cap, kHardSearchCap);
  if (spec.n > cap) {
    throw CapExceeded("order " + std::to_string(spec.n) + " exceeds the search cap " +
                      std::to_string(cap));
  }
  const auto started = std::chrono::steady_clock::now();
  SearchResult result;
  if (auto reason = infeasibility(spec.dp, spec.n)) {
    result.infeasible_reason = std::move(reason);
    return result;
  }

  const std::vector<MixedGraph> skeletons = regular_skeletons(spec.dp.r, spec.n);
  result.skeletons = skeletons.size();

  // Each skeleton is explored down to kSplitDepth arcs on this thread; the
  // partial assignments found there become independent work units. Graphs
  // completed above that depth (e.g. z = 0) are collected directly.
  std::vector<std::unique_ptr<ArcSearch>> searches;
  std::vector<std::pair<std::size_t, PartialArcs>> tasks;
  std::vector<TaskOutput> shallow(skeletons.size());
  for (std::size_t s = 0; s < skeletons.size(); ++s) {
    searches.push_back(std::make_unique<ArcSearch>(spec, analyse_skeleton(skeletons[s])));
    PartialArcs root = searches[s]->empty();
    searches[s]->explore(root, 0, shallow[s], kSplitDepth,
                         [&](const PartialArcs& pa) { tasks.emplace_back(s, pa); });
  }

  std::vector<TaskOutput> outputs(tasks.size());
  run_tasks(tasks.size(), spec.jobs, [&](std::size_t i) {
    auto& [s, pa] = tasks[i];
    searches[s]->explore(pa, kSplitDepth, outputs[i], -1, [](const PartialArcs&) {});
  });

  std::map<std::string, CanonicalForm> merged;
  const auto absorb = [&](TaskOutput& out) {
    result.counters += out.counters;
    for (auto& [key, form] : out.classes) {
      if (!merged.emplace(key, std::move(form)).second) ++result.counters.pruned["isomorph"];
    }
  };
  for (TaskOutput& out : shallow) absorb(out);
  for (TaskOutput& out : outputs) {
    result.task_counters.push_back(out.counters);
    absorb(out);
  }
  result.class_count = merged.size();
  if (!spec.count_only) {
    result.classes.reserve(merged.size());
    for (auto& [key, form] : merged) result.classes.push_back(std::move(form));
  }
  result.wall_time = std::chrono::steady_clock::now() - started;
  return result;
}

MaxOrderResult max_order(const DegreePair& dp, int k, std::optional<int> n_hi, int n_lo, int jobs,
                         int cap) {
  validate(dp);
  int hi = 0;
  if (n_hi) {
    hi = *n_hi;
  } else {
    const BigInt bound = improved_bound(dp, k).improved;
    if (bound > cap) {
      throw CapExceeded("improved bound " + bound.str() + " exceeds the search cap " +
                        std::to_string(cap));
    }
    hi = static_cast<int>(bound);
  }
  if (n_lo > hi) throw std::invalid_argument("max_order: n_lo exceeds n_hi");
  for (int n = hi; n >= std::max(n_lo, 1); --n) {
    SearchSpec spec{dp, k, n, DiameterMode::AtMost, false, jobs, cap};
    SearchResult result = enumerate(spec);
    if (result.class_count > 0) return MaxOrderResult{n, std::move(result)};
  }
  return MaxOrderResult{std::nullopt, SearchResult{}};
}

std::string class_file_name(const SearchSpec& spec, std::size_t index) {
  return std::to_string(spec.dp.r) + "_" + std::to_string(spec.dp.z) + "_k" +
         std::to_string(spec.k) + "_n" + std::to_string(spec.n) + "_" + std::to_string(index) +
         ".mgf";
}

std::vector<std::filesystem::path> write_classes(const SearchSpec& spec,
                                                 const SearchResult& result,
                                                 const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (std::size_t i = 0; i < result.classes.size(); ++i) {
    const std::string comment = "class " + std::to_string(i) + " of " +
                                std::to_string(result.classes.size()) + ": (r,z)=(" +
                                std::to_string(spec.dp.r) + "," + std::to_string(spec.dp.z) +
                                ") k=" + std::to_string(spec.k) + " n=" + std::to_string(spec.n) +
                                (spec.mode == DiameterMode::Exact ? " diameter=k" : " diameter<=k");
    const std::filesystem::path path = dir / class_file_name(spec, i);
    const MixedGraph g = parse_mgf(result.classes[i].encoding);
    write_mgf(path, g, std::span<const std::string>(&comment, 1));
    written.push_back(path);
  }
  return written;
}

std::string run_log_jsonl(const SearchSpec& spec, const SearchResult& result) {
  using nlohmann::json;
  const auto counters_json = [](const SearchCounters& c) {
    json pruned = json::object();
    for (const auto& [rule, count] : c.pruned) pruned[rule] = count;
    return json{{"nodes", c.nodes}, {"leaves", c.leaves}, {"pruned", pruned}};
  };
  std::string out;
  for (std::size_t i = 0; i < result.task_counters.size(); ++i) {
    json record = counters_json(result.task_counters[i]);
    record["task"] = i;
    out += record.dump() + "\n";
  }
  json total = counters_json(result.counters);
  total["record"] = "total";
  total["r"] = spec.dp.r;
  total["z"] = spec.dp.z;
  total["k"] = spec.k;
  total["n"] = spec.n;
  total["mode"] = spec.mode == DiameterMode::Exact ? "exact" : "at_most";
  total["skeletons"] = result.skeletons;
  total["classes"] = result.class_count;
  if (result.infeasible_reason) total["infeasible"] = *result.infeasible_reason;
  out += total.dump() + "\n";
  return out;
}

}  // namespace mixedmoore
