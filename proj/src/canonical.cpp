#include "mixedmoore/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

#include "mixedmoore/mgf.hpp"

namespace mixedmoore {

namespace {

enum Relation : std::uint8_t { kNone = 0, kEdge = 1, kArcOut = 2, kArcIn = 3 };

class CanonicalSearch {
 public:
  CanonicalSearch(const MixedGraph& g, std::span<const int> colors) : g_(g), n_(g.order()) {
    const auto n = static_cast<std::size_t>(n_);
    relation_.assign(n * n, kNone);
    for (const auto& [u, v] : g.edges()) {
      relation_[u * n + v] = kEdge;
      relation_[v * n + u] = kEdge;
    }
    for (const auto& [u, v] : g.arcs()) {
      relation_[u * n + v] = kArcOut;
      relation_[v * n + u] = kArcIn;
    }
    signatures_.resize(n);
    order_.resize(n);
    parent_.resize(n);

    // Initial cell key: (user color, edge degree, out-degree, in-degree).
    std::vector<std::array<int, 4>> keys(n);
    for (Vertex u = 0; u < n_; ++u) {
      keys[u] = {colors.empty() ? 0 : colors[u], static_cast<int>(g.edge_neighbors(u).size()),
                 static_cast<int>(g.out_neighbors(u).size()),
                 static_cast<int>(g.in_neighbors(u).size())};
    }
    std::vector<std::array<int, 4>> distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    initial_.resize(n);
    for (Vertex u = 0; u < n_; ++u) {
      initial_[u] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), keys[u]) - distinct.begin());
    }
  }

  void run() {
    if (n_ == 0) {
      best_perm_.clear();
      ties_ = 1;
      return;
    }
    descend(initial_);
  }

  const std::vector<int>& best_perm() const { return best_perm_; }
  std::uint64_t ties() const { return ties_; }

  std::vector<Vertex> orbits() {
    std::vector<Vertex> out(static_cast<std::size_t>(n_));
    for (Vertex u = 0; u < n_; ++u) out[u] = find(u);
    // Report each orbit by its smallest member.
    std::vector<Vertex> smallest(static_cast<std::size_t>(n_), n_);
    for (Vertex u = 0; u < n_; ++u) smallest[out[u]] = std::min(smallest[out[u]], u);
    for (Vertex u = 0; u < n_; ++u) out[u] = smallest[out[u]];
    return out;
  }

 private:
  // Re-ranks `color` to 0..c-1 and refines it to the coarsest stable
  // coloring; returns the number of classes.
  int refine(std::vector<int>& color) {
    int classes = rerank(color, [&](Vertex u) -> const std::vector<int>& {
      auto& sig = signatures_[u];
      sig.assign(1, color[u]);
      return sig;
    });
    while (classes < n_) {
      const int refined = rerank(color, [&](Vertex u) -> const std::vector<int>& {
        auto& sig = signatures_[u];
        sig.clear();
        sig.push_back(color[u]);
        append_sorted(sig, g_.edge_neighbors(u), color);
        sig.push_back(-1);
        append_sorted(sig, g_.out_neighbors(u), color);
        sig.push_back(-2);
        append_sorted(sig, g_.in_neighbors(u), color);
        return sig;
      });
      if (refined == classes) break;
      classes = refined;
    }
    return classes;
  }

  static void append_sorted(std::vector<int>& sig, std::span<const Vertex> nbrs,
                            const std::vector<int>& color) {
    const std::size_t start = sig.size();
    for (Vertex w : nbrs) sig.push_back(color[w]);
    std::sort(sig.begin() + static_cast<std::ptrdiff_t>(start), sig.end());
  }

  template <typename SignatureFn>
  int rerank(std::vector<int>& color, SignatureFn&& signature) {
    for (Vertex u = 0; u < n_; ++u) signature(u);
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(),
              [&](Vertex a, Vertex b) { return signatures_[a] < signatures_[b]; });
    int rank = 0;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      if (i > 0 && signatures_[order_[i]] != signatures_[order_[i - 1]]) ++rank;
      color[order_[i]] = rank;
    }
    return rank + 1;
  }

  void descend(std::vector<int> color) {
    const int classes = refine(color);
    if (classes == n_) {
      leaf(color);
      return;
    }
    std::vector<int> size(static_cast<std::size_t>(classes), 0);
    for (int c : color) ++size[c];
    int target = 0;
    while (size[target] < 2) ++target;
    for (Vertex v = 0; v < n_; ++v) {
      if (color[v] != target) continue;
      std::vector<int> child(color.size());
      for (Vertex u = 0; u < n_; ++u) child[u] = 2 * color[u] + (u == v ? 0 : 1);
      descend(std::move(child));
    }
  }

  void leaf(const std::vector<int>& perm) {
    const auto n = static_cast<std::size_t>(n_);
    code_.assign(n * n, kNone);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        code_[static_cast<std::size_t>(perm[u]) * n + static_cast<std::size_t>(perm[v])] =
            relation_[u * n + v];
      }
    }
    if (best_code_.empty() || code_ < best_code_) {
      best_code_ = code_;
      best_perm_ = perm;
      best_inverse_.assign(n, 0);
      for (Vertex u = 0; u < n_; ++u) best_inverse_[perm[u]] = u;
      ties_ = 1;
      std::iota(parent_.begin(), parent_.end(), 0);
    } else if (code_ == best_code_) {
      ++ties_;
      for (Vertex u = 0; u < n_; ++u) unite(u, best_inverse_[perm[u]]);
    }
  }

  Vertex find(Vertex u) {
    while (parent_[u] != u) {
      parent_[u] = parent_[parent_[u]];
      u = parent_[u];
    }
    return u;
  }

  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  const MixedGraph& g_;
  int n_;
  std::vector<std::uint8_t> relation_;
  std::vector<int> initial_;
  std::vector<std::vector<int>> signatures_;
  std::vector<Vertex> order_;

  std::vector<std::uint8_t> code_;
  std::vector<std::uint8_t> best_code_;
  std::vector<int> best_perm_;
  std::vector<Vertex> best_inverse_;
  std::uint64_t ties_ = 0;
  std::vector<Vertex> parent_;
};

}  // namespace

CanonicalResult canonical_search(const MixedGraph& g, std::span<const int> colors,
                                 int max_order) {
  if (g.order() > max_order) {
    throw GraphError(GraphErrc::SizeLimitExceeded,
                     "SizeLimitExceeded: canonical labeling is capped at " +
                         std::to_string(max_order) + " vertices, got " +
                         std::to_string(g.order()));
  }
  if (!colors.empty() && static_cast<int>(colors.size()) != g.order()) {
    throw std::invalid_argument("canonical_search: one color per vertex expected");
  }
  CanonicalSearch search(g, colors);
  search.run();
  CanonicalResult result;
  result.form.relabeling = search.best_perm();
  result.form.encoding = to_mgf(relabel(g, result.form.relabeling));
  result.automorphisms = BigInt(search.ties());
  result.orbit = search.orbits();
  return result;
}

CanonicalForm canonical_form(const MixedGraph& g, int max_order) {
  return canonical_search(g, {}, max_order).form;
}

bool is_isomorphic(const MixedGraph& a, const MixedGraph& b) {
  if (a.order() != b.order() || a.edges().size() != b.edges().size() ||
      a.arcs().size() != b.arcs().size()) {
    return false;
  }
  return canonical_form(a).encoding == canonical_form(b).encoding;
}

BigInt automorphism_count(const MixedGraph& g) { return canonical_search(g).automorphisms; }

MixedGraph canonical_graph(const MixedGraph& g) {
  return relabel(g, canonical_form(g).relabeling);
}

}  // namespace mixedmoore
