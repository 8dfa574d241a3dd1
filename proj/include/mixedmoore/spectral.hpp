#pragma once

// Exact characteristic polynomials of mixed-graph adjacency matrices.

#include <string>
#include <vector>

#include <Eigen/Core>

#include "mixedmoore/bigint.hpp"
#include "mixedmoore/mixed_graph.hpp"

namespace mixedmoore {

/// Coefficients of det(xI - A), highest degree first, by Berkowitz's
/// division-free algorithm. Exact for any integral Scalar.
template <typename Scalar>
std::vector<Scalar> berkowitz(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const Eigen::Index n = a.rows();
  if (n == 0) return {Scalar(1)};
  std::vector<Scalar> poly{Scalar(1), Scalar(-a(0, 0))};
  for (Eigen::Index r = 1; r < n; ++r) {
    // First column of the Toeplitz factor: 1, -a_rr, -R C, -R S C, ...
    std::vector<Scalar> column(static_cast<std::size_t>(r) + 2);
    column[0] = Scalar(1);
    column[1] = Scalar(-a(r, r));
    Vector x = a.block(0, r, r, 1);
    for (Eigen::Index j = 2; j <= r + 1; ++j) {
      column[static_cast<std::size_t>(j)] = -(a.block(r, 0, 1, r) * x)(0, 0);
      x = (a.topLeftCorner(r, r) * x).eval();
    }
    std::vector<Scalar> next(static_cast<std::size_t>(r) + 2, Scalar(0));
    for (std::size_t i = 0; i < next.size(); ++i) {
      for (std::size_t j = 0; j < poly.size() && j <= i; ++j) next[i] += column[i - j] * poly[j];
    }
    poly = std::move(next);
  }
  return poly;
}

struct CharPoly {
  std::vector<BigInt> coefficients;  // c_0 .. c_n, c_n = 1

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

CharPoly char_poly(const MixedGraph& g);

/// Same order and identical characteristic polynomial.
bool cospectral(const MixedGraph& a, const MixedGraph& b);

/// "1 0 -5 0 5 -2 0 0 0 0 0": leading coefficient first.
std::string coefficient_line(const CharPoly& p);

struct PolyFactor {
  std::vector<BigInt> coefficients;  // lowest degree first, monic
  int multiplicity = 1;
};

struct Factorization {
  std::vector<PolyFactor> factors;   // powers of x, then linear, then quadratic
  std::vector<BigInt> cofactor;      // what is left, lowest degree first
};

/// Splits off powers of x and every monic integer factor of degree one or
/// two. The cofactor is {1} when the polynomial splits completely that way.
Factorization factor_low_degree(const CharPoly& p);

/// "x^5 (x - 2) (x^2 + x - 1)^2"
std::string to_string(const Factorization& f);

}  // namespace mixedmoore
