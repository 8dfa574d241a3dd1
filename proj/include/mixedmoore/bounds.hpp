#pragma once

// Moore-like upper bounds on the order of totally regular mixed graphs.
//
// A (r, z)-regular mixed graph has r undirected edges and z outgoing and z
// incoming arcs at every vertex. Counting the vertices of the Moore tree of
// depth k gives M(r, z, k); the exact integer recurrence over tree layers is
// the reference route, the matrix geometric sum and the irrational closed
// form are kept as independent cross-checks.

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "mixedmoore/bigint.hpp"

namespace mixedmoore {

struct DegreePair {
  int r = 0;  // undirected degree
  int z = 0;  // out-degree = in-degree

  constexpr int degree() const { return r + z; }
  friend constexpr bool operator==(const DegreePair&, const DegreePair&) = default;
};

/// Throws std::invalid_argument unless r, z >= 0 and r + z >= 1.
void validate(const DegreePair& dp);

/// Raised by the closed form when its parameters hit a zero denominator.
class DegenerateParameters : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Layer {
  BigInt edge_children;  // R_i: reached from the parent through an edge
  BigInt arc_children;   // Z_i: reached from the parent through an arc
  BigInt total;          // N_i = R_i + Z_i
};

struct LayerCounts {
  DegreePair dp;
  std::vector<Layer> layers;  // index i = 0..k
};

/// Moore-tree layer sizes for depth k, using R_0 = 0, Z_0 = 1.
LayerCounts layer_counts(const DegreePair& dp, int k);

/// M(r, z, k): exact sum of the Moore-tree layers.
BigInt moore_bound(const DegreePair& dp, int k);

/// The 2x2 layer transfer matrix acting on (R_{i-1}, Z_{i-1}).
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 2> layer_transfer_matrix(const DegreePair& dp) {
  Eigen::Matrix<Scalar, 2, 2> m;
  m << Scalar(dp.r - 1), Scalar(dp.r), Scalar(dp.z), Scalar(dp.z);
  return m;
}

/// Geometric-sum route. With T the transfer matrix, N_i = (1 1) T^i (0 1)^T
/// and (1 1)(T - I)^{-1} = (1 2) / (r + 2z - 2), so
///   M = (1 2)(T^{k+1} - I)(0 1)^T / (r + 2z - 2).
/// Requires r + 2z != 2 (the two cycle cases). Scalar must be an exact
/// integer type; the division is checked to be exact.
template <typename Scalar>
Scalar moore_bound_matrix_sum(const DegreePair& dp, int k) {
  validate(dp);
  if (k < 0) throw std::invalid_argument("moore_bound_matrix_sum: k must be nonnegative");
  const int denominator = dp.r + 2 * dp.z - 2;
  if (denominator == 0) {
    throw DegenerateParameters("matrix-sum route undefined when r + 2z = 2");
  }
  using Mat = Eigen::Matrix<Scalar, 2, 2>;
  using Vec = Eigen::Matrix<Scalar, 2, 1>;
  const Mat step = layer_transfer_matrix<Scalar>(dp);
  Mat power = Mat::Identity();
  for (int i = 0; i <= k; ++i) power = (power * step).eval();
  const Vec image = (power - Mat::Identity()).col(1);
  const Scalar numerator = image(0) + Scalar(2) * image(1);
  if (numerator % Scalar(denominator) != 0) {
    throw std::logic_error("matrix-sum route produced a non-integral bound");
  }
  return numerator / Scalar(denominator);
}

struct ClosedFormParams {
  double v = 0;   // discriminant (z + r)^2 + 2(z - r) + 1
  double u1 = 0;  // smaller root of x^2 - (r + z - 1)x - z
  double u2 = 0;  // larger root
  double A = 0;
  double B = 0;
};

ClosedFormParams closed_form_params(const DegreePair& dp);

/// Floating evaluation of the closed form. Throws DegenerateParameters for
/// (0,1) and (2,0), where u2 = 1, and for (1,0), where v = 0.
double moore_bound_closed_form(const DegreePair& dp, int k);

struct BoundReport {
  BigInt moore;
  BigInt improved;
  bool parity_applied = false;
  std::vector<std::string> rule_trace;  // "thm1", "prop2"
};

/// Strongest applicable bound:
///   k >= 3                              -> M - r        ("thm1")
///   k >= 3, r and z odd, k = 2 (mod 3)  -> M - r - 1    ("prop2")
BoundReport improved_bound(const DegreePair& dp, int k);

/// (M(1,1,k), F_{k+4} - 2) with F_1 = F_2 = 1.
std::pair<BigInt, BigInt> fibonacci_identity_check(int k);

struct MooreTableEntry {
  int d = 0;
  int z = 0;
  int r = 0;
  int k = 0;
  BigInt bound;
};

/// Every M(d - z, z, k) for d = 1..d_max, z = 0..d, k = 1..k_max,
/// ordered by d, then z, then k.
class MooreTable {
 public:
  MooreTable(int d_max, int k_max);

  int d_max() const { return d_max_; }
  int k_max() const { return k_max_; }
  const std::vector<MooreTableEntry>& entries() const { return entries_; }
  const BigInt& at(int d, int z, int k) const;

 private:
  int d_max_;
  int k_max_;
  std::vector<MooreTableEntry> entries_;
};

MooreTable moore_table(int d_max, int k_max);

}  // namespace mixedmoore
