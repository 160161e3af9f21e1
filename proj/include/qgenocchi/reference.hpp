#pragma once

#include <vector>

#include "qpoly.hpp"

namespace qgen::reference {

/// Known-good values the self-verification suites reproduce.  Coefficients
/// are ascending in q.

struct TriangleEntry {
  int i;
  int j;
  QPoly value;
};

/// q-Seidel g-triangle, all entries with i <= 7.
inline std::vector<TriangleEntry> g_triangle_7() {
  using P = QPoly;
  return {
      {1, 1, P::from_coeffs({1})},
      {2, 1, P::from_coeffs({1})},
      {3, 1, P::from_coeffs({1})},
      {3, 2, P::from_coeffs({1})},
      {4, 1, P::from_coeffs({1, 1})},
      {4, 2, P::from_coeffs({0, 1})},
      {5, 1, P::from_coeffs({1, 1})},
      {5, 2, P::from_coeffs({1, 1, 1})},
      {5, 3, P::from_coeffs({1, 1, 1})},
      {6, 1, P::from_coeffs({1, 2, 2, 2, 1})},
      {6, 2, P::from_coeffs({0, 1, 2, 2, 1})},
      {6, 3, P::from_coeffs({0, 0, 1, 1, 1})},
      {7, 1, P::from_coeffs({1, 2, 2, 2, 1})},
      {7, 2, P::from_coeffs({1, 2, 3, 4, 3, 1})},
      {7, 3, P::from_coeffs({1, 2, 3, 4, 4, 2, 1})},
      {7, 4, P::from_coeffs({1, 2, 3, 4, 4, 2, 1})},
  };
}

/// Companion h-triangle, all entries with i <= 8.
inline std::vector<TriangleEntry> h_triangle_8() {
  using P = QPoly;
  return {
      {1, 1, P::from_coeffs({1})},
      {2, 1, P::from_coeffs({1})},
      {3, 1, P()},
      {3, 2, P::from_coeffs({1})},
      {4, 1, P::from_coeffs({0, 1})},
      {4, 2, P::from_coeffs({0, 1})},
      {5, 1, P()},
      {5, 2, P::from_coeffs({0, 1})},
      {5, 3, P::from_coeffs({0, 1, 1})},
      {6, 1, P::from_coeffs({0, 0, 1, 1, 1})},
      {6, 2, P::from_coeffs({0, 0, 1, 1, 1})},
      {6, 3, P::from_coeffs({0, 0, 0, 1, 1})},
      {7, 1, P()},
      {7, 2, P::from_coeffs({0, 0, 1, 1, 1})},
      {7, 3, P::from_coeffs({0, 0, 1, 2, 2, 1})},
      {7, 4, P::from_coeffs({0, 0, 1, 2, 2, 2, 1})},
      {8, 1, P::from_coeffs({0, 0, 0, 1, 2, 4, 4, 3, 2, 1})},
      {8, 2, P::from_coeffs({0, 0, 0, 1, 2, 4, 4, 3, 2, 1})},
      {8, 3, P::from_coeffs({0, 0, 0, 0, 1, 3, 4, 3, 2, 1})},
      {8, 4, P::from_coeffs({0, 0, 0, 0, 0, 1, 2, 2, 2, 1})},
  };
}

/// Inverse-matrix entries c(i,j) for i, j <= 4.
inline std::vector<TriangleEntry> c_entries_4() {
  using P = QPoly;
  return {
      {1, 1, P::from_coeffs({1})},
      {2, 1, P::from_coeffs({1})},
      {2, 2, P::from_coeffs({1})},
      {3, 1, P::from_coeffs({1, 1, 1})},
      {3, 2, P::from_coeffs({1, 1, 1})},
      {3, 3, P::from_coeffs({1})},
      {4, 1, P::from_coeffs({1, 2, 3, 4, 4, 2, 1})},
      {4, 2, P::from_coeffs({1, 2, 3, 4, 4, 2, 1})},
      {4, 3, P::from_coeffs({1, 1, 2, 1, 1})},  // (1+q+q^2)(1+q^2)
      {4, 4, P::from_coeffs({1})},
  };
}

/// Inverse-matrix entries d(i,j) for i, j <= 4.
inline std::vector<TriangleEntry> d_entries_4() {
  using P = QPoly;
  return {
      {1, 1, P::from_coeffs({1})},
      {2, 1, P::from_coeffs({1})},
      {2, 2, P::from_coeffs({1})},
      {3, 1, P::from_coeffs({0, 1, 1})},
      {3, 2, P::from_coeffs({1, 1, 1})},
      {3, 3, P::from_coeffs({1})},
      {4, 1, P::from_coeffs({0, 0, 1, 2, 2, 2, 1})},
      {4, 2, P::from_coeffs({0, 1, 3, 3, 3, 2, 1})},
      {4, 3, P::from_coeffs({1, 1, 2, 1, 1})},
      {4, 4, P::from_coeffs({1})},
  };
}

/// Truncated-pistol array column g'(8,j), j = 1..4; c(5,3) equals the sum of
/// q^{j-1} g'(8,j).
inline std::vector<QPoly> g_prime_col8() {
  using P = QPoly;
  return {
      P::from_coeffs({1, 2, 3, 4, 4, 3, 2, 1}),
      P::from_coeffs({0, 1, 2, 4, 4, 3, 2, 1}),
      P::from_coeffs({0, 0, 1, 2, 3, 3, 2, 1}),
      P::from_coeffs({0, 0, 0, 1, 1, 2, 1, 1}),
  };
}

/// Strict analogue d'(8,j), j = 1..4; d(5,3) equals the sum of q^{j-1} d'(8,j).
inline std::vector<QPoly> d_prime_col8() {
  using P = QPoly;
  return {
      P::from_coeffs({0, 1, 2, 3, 3, 3, 1, 1}),
      P::from_coeffs({0, 1, 2, 3, 3, 3, 1, 1}),
      P::from_coeffs({0, 0, 1, 2, 3, 3, 1, 1}),
      P::from_coeffs({0, 0, 0, 1, 1, 2, 1, 1}),
  };
}

/// Classical Genocchi numbers G_2, G_4, ...: values of genocchi(n) at q = 1.
inline std::vector<long long> genocchi_at_one() { return {1, 1, 3, 17, 155, 2073, 38227, 929569}; }

/// Classical median Genocchi numbers H_1, H_3, ...: median_genocchi(n) at q = 1.
inline std::vector<long long> median_genocchi_at_one() { return {1, 1, 2, 8, 56, 608, 9440, 198272}; }

/// Secant (Euler) numbers E_0, E_2, E_4, ...: values of qeuler(n) at q = 1.
inline std::vector<long long> euler_at_one() { return {1, 1, 5, 61, 1385, 50521, 2702765}; }

/// Integer k-triangle rows n = 2..6 at q = 1.  Row 6 as commonly printed
/// reads (2073, 15820, 23576, 8444, 608); the cells at i = 2 and i = 4 are
/// misprints whose errors cancel in the row sum.  The values here are what
/// the defining series relation produces, confirmed by three independent
/// extraction routes.
inline std::vector<std::vector<long long>> k_triangle_at_one() {
  return {{1}, {3, 2}, {17, 36, 8}, {155, 678, 496, 56}, {2073, 15424, 23576, 8840, 608}};
}

/// Row 6 with the two misprinted cells, kept so the discrepancy itself can be
/// checked and reported.
inline std::vector<long long> k_row6_as_printed() { return {2073, 15820, 23576, 8444, 608}; }

/// k(3,*) in expanded form.
inline std::vector<QPoly> k_row3() {
  return {QPoly::from_coeffs({1, 1, 1}), QPoly::from_coeffs({0, 1, 1})};
}

/// k(4,*): k(4,1) expanded, k(4,2) = q(1+q)(1+q^2)(1+q+q^2)^2 and
/// k(4,3) = q^2(q^2+1)(q+1)^2 given as factor lists for verification by
/// expansion.
inline std::vector<std::vector<QPoly>> k_row4_factors() {
  using P = QPoly;
  return {
      {P::from_coeffs({1, 2, 3, 4, 4, 2, 1})},
      {P::from_coeffs({0, 1}), P::from_coeffs({1, 1}), P::from_coeffs({1, 0, 1}), P::from_coeffs({1, 1, 1}),
       P::from_coeffs({1, 1, 1})},
      {P::from_coeffs({0, 0, 1}), P::from_coeffs({1, 0, 1}), P::from_coeffs({1, 1}), P::from_coeffs({1, 1})},
  };
}

inline QPoly product(const std::vector<QPoly>& factors) {
  QPoly r(1);
  for (const QPoly& f : factors) r *= f;
  return r;
}

}  // namespace qgen::reference
