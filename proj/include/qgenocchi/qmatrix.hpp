#pragma once

#include <stdexcept>

#include "polymatrix.hpp"
#include "qpoly.hpp"

namespace qgen {

/// The q-binomial matrix G_q with entries [i, 2i-2j]_q q^{(i-j-1)(i-j)};
/// unit lower triangular, zero outside the band i/2 <= j <= i.
inline PolyMatrix build_Gq(int n) {
  if (n < 1) throw std::invalid_argument("build_Gq: n must be >= 1");
  PolyMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) {
      const int top = 2 * i - 2 * j;
      if (top > i) continue;
      m.at(i, j) = qbinom(i, top).shifted_up((i - j - 1) * (i - j));
    }
  return m;
}

/// The companion matrix H_q with entries [2i-j-1, j-1]_q (the nonnegative-index
/// closed form); unit lower triangular.
inline PolyMatrix build_Hq(int n) {
  if (n < 1) throw std::invalid_argument("build_Hq: n must be >= 1");
  PolyMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) m.at(i, j) = qbinom(2 * i - j - 1, j - 1);
  return m;
}

/// Strip the alternating sign from the inverse of a unit lower triangular
/// matrix: entry (i,j) of the result is (-1)^{i-j} times the inverse entry.
inline PolyMatrix unsigned_inverse(const PolyMatrix& unit_lower) {
  PolyMatrix b = invert_unit_lower(unit_lower);
  PolyMatrix r(b.size());
  for (int i = 1; i <= b.size(); ++i)
    for (int j = 1; j <= i; ++j) r.at(i, j) = ((i - j) % 2 == 0) ? b.at(i, j) : -b.at(i, j);
  return r;
}

/// Table of c entries: c(i,j) = (-1)^{i-j} (G_q^{-1})_{i,j}, for i,j <= n.
inline PolyMatrix c_table(int n) { return unsigned_inverse(build_Gq(n)); }

/// Table of d entries: d(i,j) = (-1)^{i-j} (H_q^{-1})_{i,j}, for i,j <= n.
inline PolyMatrix d_table(int n) { return unsigned_inverse(build_Hq(n)); }

/// c_{k,l}(q) as the size (k-l) determinant with entries
/// [l+i, 2i-2j+2]_q q^{(i-j)(i-j+1)}.
inline QPoly c_entry_via_det(int k, int l) {
  if (l < 1 || l > k) throw std::invalid_argument("c_entry_via_det: need 1 <= l <= k");
  const int s = k - l;
  PolyMatrix m(s);
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= s; ++j) {
      const int top = 2 * i - 2 * j + 2;
      if (top < 0 || top > l + i) continue;
      m.at(i, j) = qbinom(l + i, top).shifted_up((i - j) * (i - j + 1));
    }
  return det_bareiss(m);
}

/// d_{k,l}(q) as the size (k-l) determinant with entries [l+2i-j, 2i-2j+2]_q.
inline QPoly d_entry_via_det(int k, int l) {
  if (l < 1 || l > k) throw std::invalid_argument("d_entry_via_det: need 1 <= l <= k");
  const int s = k - l;
  PolyMatrix m(s);
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= s; ++j) {
      const int top = 2 * i - 2 * j + 2;
      if (top < 0 || top > l + 2 * i - j) continue;
      m.at(i, j) = qbinom(l + 2 * i - j, top);
    }
  return det_bareiss(m);
}

}  // namespace qgen
