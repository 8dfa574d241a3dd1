#include "mixedmoore/spectral.hpp"

#include <algorithm>
#include <optional>

namespace mixedmoore {

CharPoly char_poly(const MixedGraph& g) {
  std::vector<BigInt> leading_first = berkowitz<BigInt>(adjacency_matrix<BigInt>(g));
  std::reverse(leading_first.begin(), leading_first.end());
  return CharPoly{std::move(leading_first)};
}

bool cospectral(const MixedGraph& a, const MixedGraph& b) {
  return a.order() == b.order() && char_poly(a) == char_poly(b);
}

std::string coefficient_line(const CharPoly& p) {
  std::string out;
  for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += it->str();
  }
  return out;
}

namespace {

using Poly = std::vector<BigInt>;  // lowest degree first

// Quotient by a monic divisor when the remainder vanishes.
std::optional<Poly> divide_exact(const Poly& p, const Poly& monic) {
  if (p.size() < monic.size()) return std::nullopt;
  Poly rem = p;
  const std::size_t dq = monic.size() - 1;
  Poly quotient(p.size() - dq, BigInt(0));
  for (std::size_t i = p.size(); i-- > dq;) {
    const BigInt lead = rem[i];
    quotient[i - dq] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dq; ++j) rem[i - dq + j] -= lead * monic[j];
  }
  for (std::size_t i = 0; i < dq; ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  return quotient;
}

BigInt evaluate(const Poly& p, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

constexpr long long kMaxDivisorSearch = 1'000'000'000'000LL;
constexpr long long kMaxQuadraticSpan = 2000;

std::vector<BigInt> positive_divisors(const BigInt& value) {
  std::vector<BigInt> out;
  const BigInt v = abs(value);
  if (v == 0 || v > kMaxDivisorSearch) return out;
  for (BigInt d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void add_factor(std::vector<PolyFactor>& factors, const Poly& f) {
  if (!factors.empty() && factors.back().coefficients == f) {
    ++factors.back().multiplicity;
  } else {
    factors.push_back(PolyFactor{f, 1});
  }
}

std::string term(const BigInt& coefficient, int power, bool first) {
  std::string out;
  const BigInt magnitude = abs(coefficient);
  if (first) {
    if (coefficient < 0) out += "-";
  } else {
    out += coefficient < 0 ? " - " : " + ";
  }
  if (magnitude != 1 || power == 0) out += magnitude.str();
  if (power >= 1) out += "x";
  if (power >= 2) out += "^" + std::to_string(power);
  return out;
}

std::string poly_text(const Poly& p) {
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    out += term(p[i], static_cast<int>(i), out.empty());
  }
  return out.empty() ? "0" : out;
}

}  // namespace

Factorization factor_low_degree(const CharPoly& cp) {
  Factorization f;
  Poly p = cp.coefficients;

  std::size_t zeros = 0;
  while (zeros + 1 < p.size() && p[zeros] == 0) ++zeros;
  if (zeros > 0) {
    f.factors.push_back(PolyFactor{Poly{BigInt(0), BigInt(1)}, static_cast<int>(zeros)});
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(zeros));
  }

  // Integer roots divide the constant term.
  for (const BigInt& d : positive_divisors(p.front())) {
    for (const BigInt& root : {d, BigInt(-d)}) {
      while (p.size() > 1 && evaluate(p, root) == 0) {
        const Poly linear{BigInt(-root), BigInt(1)};
        p = *divide_exact(p, linear);
        add_factor(f.factors, linear);
      }
    }
  }

  // Monic quadratics x^2 + bx + c: c divides the constant term and |b| is
  // at most twice the Cauchy root bound.
  if (p.size() > 3) {
    BigInt bound = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) bound = std::max(bound, abs(p[i]));
    bound += 1;
    if (bound <= kMaxQuadraticSpan) {
      const long long span = 2 * static_cast<long long>(bound);
      for (const BigInt& d : positive_divisors(p.front())) {
        for (const BigInt& c : {d, BigInt(-d)}) {
          for (long long b = -span; b <= span; ++b) {
            const Poly quadratic{c, BigInt(b), BigInt(1)};
            while (p.size() > 3) {
              auto q = divide_exact(p, quadratic);
              if (!q) break;
              p = std::move(*q);
              add_factor(f.factors, quadratic);
            }
            if (p.size() == 3 && p == quadratic) {
              add_factor(f.factors, quadratic);
              p = Poly{BigInt(1)};
            }
          }
        }
      }
    }
  } else if (p.size() == 3) {
    f.factors.push_back(PolyFactor{p, 1});
    p = Poly{BigInt(1)};
  }
  f.cofactor = std::move(p);
  return f;
}

std::string to_string(const Factorization& f) {
  std::string out;
  for (const PolyFactor& factor : f.factors) {
    if (!out.empty()) out += ' ';
    const bool bare_x = factor.coefficients == Poly{BigInt(0), BigInt(1)};
    out += bare_x ? "x" : "(" + poly_text(factor.coefficients) + ")";
    if (factor.multiplicity > 1) out += "^" + std::to_string(factor.multiplicity);
  }
  if (f.cofactor.size() > 1) {
    if (!out.empty()) out += ' ';
    out += "(" + poly_text(f.cofactor) + ")";
  }
  return out.empty() ? "1" : out;
}

}  // namespace mixedmoore
