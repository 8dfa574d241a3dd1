#include "mixedmoore/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace mixedmoore {

void validate(const DegreePair& dp) {
  if (dp.r < 0 || dp.z < 0) throw std::invalid_argument("degrees must be nonnegative");
  if (dp.r + dp.z < 1) throw std::invalid_argument("r + z must be at least 1");
}

namespace {

void require_depth(int k) {
  if (k < 0) throw std::invalid_argument("diameter k must be nonnegative");
}

}  // namespace

LayerCounts layer_counts(const DegreePair& dp, int k) {
  validate(dp);
  require_depth(k);
  LayerCounts out{dp, {}};
  out.layers.reserve(static_cast<std::size_t>(k) + 1);
  out.layers.push_back(Layer{0, 1, 1});
  for (int i = 1; i <= k; ++i) {
    const Layer& prev = out.layers.back();
    Layer next;
    next.edge_children = prev.edge_children * (dp.r - 1) + prev.arc_children * dp.r;
    next.arc_children = (prev.edge_children + prev.arc_children) * dp.z;
    next.total = next.edge_children + next.arc_children;
    out.layers.push_back(std::move(next));
  }
  return out;
}

BigInt moore_bound(const DegreePair& dp, int k) {
  BigInt sum = 0;
  for (const Layer& layer : layer_counts(dp, k).layers) sum += layer.total;
  return sum;
}

ClosedFormParams closed_form_params(const DegreePair& dp) {
  validate(dp);
  const double r = dp.r;
  const double z = dp.z;
  ClosedFormParams p;
  p.v = (z + r) * (z + r) + 2 * (z - r) + 1;
  const double root = std::sqrt(p.v);
  p.u1 = (z + r - 1 - root) / 2;
  p.u2 = (z + r - 1 + root) / 2;
  if (root == 0) {
    p.A = p.B = std::nan("");
  } else {
    p.A = (root - (z + r + 1)) / (2 * root);
    p.B = (root + (z + r + 1)) / (2 * root);
  }
  return p;
}

double moore_bound_closed_form(const DegreePair& dp, int k) {
  validate(dp);
  require_depth(k);
  // v vanishes only at (1,0); u2 = 1 exactly when r + 2z = 2.
  if (dp.r == 1 && dp.z == 0) {
    throw DegenerateParameters("closed form undefined for (r,z) = (1,0): discriminant is zero");
  }
  if (dp.r + 2 * dp.z == 2) {
    throw DegenerateParameters("closed form undefined for (r,z) = (" + std::to_string(dp.r) + "," +
                               std::to_string(dp.z) + "): cycle case, u2 = 1");
  }
  const ClosedFormParams p = closed_form_params(dp);
  const auto geometric = [k](double u) { return (std::pow(u, k + 1) - 1) / (u - 1); };
  return p.A * geometric(p.u1) + p.B * geometric(p.u2);
}

BoundReport improved_bound(const DegreePair& dp, int k) {
  BoundReport report;
  report.moore = moore_bound(dp, k);
  report.improved = report.moore;
  if (k < 3) return report;

  // Applied for every (r,z) as the bound is stated. With z = 0 the argument
  // has no arcs to work with and the odd cycle C_{2k+1} reaches M(2,0,k).
  report.improved -= dp.r;
  report.rule_trace.emplace_back("thm1");

  // r odd forces an even order, and for odd z the layer parities run
  // 1,0,1,1,0,1,... so M is even whenever k = 2 (mod 3).
  if (dp.r % 2 == 1 && dp.z % 2 == 1 && k % 3 == 2) {
    report.improved -= 1;
    report.parity_applied = true;
    report.rule_trace.emplace_back("prop2");
  }
  return report;
}

std::pair<BigInt, BigInt> fibonacci_identity_check(int k) {
  require_depth(k);
  BigInt prev = 1;  // F_1
  BigInt cur = 1;   // F_2
  for (int i = 2; i < k + 4; ++i) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {moore_bound(DegreePair{1, 1}, k), cur - 2};
}

MooreTable::MooreTable(int d_max, int k_max) : d_max_(d_max), k_max_(k_max) {
  if (d_max < 1 || k_max < 1) throw std::invalid_argument("table dimensions must be positive");
  for (int d = 1; d <= d_max; ++d) {
    for (int z = 0; z <= d; ++z) {
      const LayerCounts lc = layer_counts(DegreePair{d - z, z}, k_max);
      BigInt running = lc.layers[0].total;
      for (int k = 1; k <= k_max; ++k) {
        running += lc.layers[static_cast<std::size_t>(k)].total;
        entries_.push_back(MooreTableEntry{d, z, d - z, k, running});
      }
    }
  }
}

const BigInt& MooreTable::at(int d, int z, int k) const {
  if (d < 1 || d > d_max_ || z < 0 || z > d || k < 1 || k > k_max_) {
    throw std::out_of_range("moore table index out of range");
  }
  // Rows for degree d start after sum_{e<d} (e+1) blocks of k_max entries.
  const int blocks_before = (d - 1) * (d + 2) / 2;
  const auto index = static_cast<std::size_t>((blocks_before + z) * k_max_ + (k - 1));
  return entries_[index].bound;
}

MooreTable moore_table(int d_max, int k_max) { return MooreTable(d_max, k_max); }

}  // namespace mixedmoore
