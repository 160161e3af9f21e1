#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qpoly.hpp"

namespace qgen {

/// Square matrix of QPoly entries with 1-based indexing.
class PolyMatrix {
public:
  PolyMatrix() = default;
  explicit PolyMatrix(int n) : n_(require_size(n)), a_(static_cast<size_t>(n), std::vector<QPoly>(static_cast<size_t>(n))) {}

  static PolyMatrix identity(int n) {
    PolyMatrix m(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = QPoly(1);
    return m;
  }

  int size() const { return n_; }

  QPoly& at(int i, int j) { return a_[index(i)][index(j)]; }
  const QPoly& at(int i, int j) const { return a_[index(i)][index(j)]; }

  bool is_unit_lower_triangular() const {
    const QPoly one(1);
    for (int i = 1; i <= n_; ++i) {
      if (at(i, i) != one) return false;
      for (int j = i + 1; j <= n_; ++j)
        if (!at(i, j).is_zero()) return false;
    }
    return true;
  }

  bool is_identity() const {
    const QPoly one(1);
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) {
        if (i == j ? at(i, j) != one : !at(i, j).is_zero()) return false;
      }
    return true;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("PolyMatrix: size mismatch in product");
    PolyMatrix r(a.n_);
    for (int i = 1; i <= a.n_; ++i)
      for (int k = 1; k <= a.n_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (int j = 1; j <= a.n_; ++j) {
          if (b.at(k, j).is_zero()) continue;
          r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
      }
    return r;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

private:
  static int require_size(int n) {
    if (n < 0) throw std::invalid_argument("PolyMatrix: negative size");
    return n;
  }
  size_t index(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("PolyMatrix: index out of range");
    return static_cast<size_t>(i - 1);
  }

  int n_ = 0;
  std::vector<std::vector<QPoly>> a_;
};

/// Determinant by the signed sum over permutations.  Exponential, so the
/// size is capped (default 9); larger matrices go through det_bareiss.
inline QPoly det_leibniz(const PolyMatrix& m, int max_size = 9) {
  const int n = m.size();
  if (n > max_size)
    throw std::invalid_argument("det_leibniz: size exceeds configured bound of " + std::to_string(max_size));
  if (n == 0) return QPoly(1);
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  QPoly det;
  do {
    QPoly prod(1);
    bool zero = false;
    for (int i = 1; i <= n && !zero; ++i) {
      const QPoly& e = m.at(i, perm[static_cast<size_t>(i - 1)]);
      if (e.is_zero())
        zero = true;
      else
        prod *= e;
    }
    if (zero) continue;
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
    if (inv % 2 == 0)
      det += prod;
    else
      det -= prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Determinant by fraction-free (Bareiss) elimination.  Every division is an
/// exact division in Z[q]; a failed division therefore signals a fault in the
/// caller's data, not a numeric approximation.
inline QPoly det_bareiss(const PolyMatrix& m) {
  const int n = m.size();
  if (n == 0) return QPoly(1);
  PolyMatrix a = m;
  QPoly prev(1);
  bool negate = false;
  for (int k = 1; k < n; ++k) {
    if (a.at(k, k).is_zero()) {
      int pivot = 0;
      for (int r = k + 1; r <= n; ++r)
        if (!a.at(r, k).is_zero()) {
          pivot = r;
          break;
        }
      if (pivot == 0) return {};
      for (int j = 1; j <= n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      negate = !negate;
    }
    for (int i = k + 1; i <= n; ++i) {
      for (int j = k + 1; j <= n; ++j)
        a.at(i, j) = QPoly::div_exact(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
      a.at(i, k) = QPoly();
    }
    prev = a.at(k, k);
  }
  return negate ? -a.at(n, n) : a.at(n, n);
}

inline QPoly det(const PolyMatrix& m) { return det_bareiss(m); }

/// Exact inverse of a unit lower triangular matrix by forward substitution,
/// column by column; division-free over Z[q].
inline PolyMatrix invert_unit_lower(const PolyMatrix& m) {
  if (!m.is_unit_lower_triangular())
    throw std::invalid_argument("invert_unit_lower: matrix is not unit lower triangular");
  const int n = m.size();
  PolyMatrix b(n);
  for (int j = 1; j <= n; ++j) {
    b.at(j, j) = QPoly(1);
    for (int i = j + 1; i <= n; ++i) {
      QPoly s;
      for (int k = j; k < i; ++k) {
        if (m.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        s += m.at(i, k) * b.at(k, j);
      }
      b.at(i, j) = -s;
    }
  }
  return b;
}

/// Entry (n, k) of the inverse of a unit lower triangular matrix, computed
/// as (-1)^{n-k} times the connected minor on rows k+1..n and columns k..n-1.
inline QPoly inverse_entry_via_minor(const PolyMatrix& m, int n, int k) {
  if (!m.is_unit_lower_triangular())
    throw std::invalid_argument("inverse_entry_via_minor: matrix is not unit lower triangular");
  if (k < 1 || n > m.size() || k > n) throw std::invalid_argument("inverse_entry_via_minor: need 1 <= k <= n <= size");
  const int s = n - k;
  PolyMatrix minor(s);
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= s; ++j) minor.at(i, j) = m.at(k + i, k + j - 1);
  QPoly d = det_bareiss(minor);
  return (s % 2 == 0) ? d : -d;
}

}  // namespace qgen
