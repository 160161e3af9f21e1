#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "qpoly.hpp"

namespace qgen {

enum class SeidelKind { g, h };

/// A q-Seidel triangle: entries t(i,j) for 1 <= i <= imax, 1 <= j <= ceil(i/2),
/// zero outside that band (and never stored there).
///
/// The g-kind is seeded with g(1,1) = g(2,1) = 1 and filled boustrophedon-style,
///   odd rows ascending:   g(2i+1, j) = g(2i+1, j-1) + q^{j-1} g(2i, j)
///   even rows descending: g(2i, j)   = g(2i, j+1)   + q^{j-1} g(2i-1, j).
/// The h-kind additionally seeds h(2i+1, 1) = 0 and replaces the odd-row rule by
///   h(2i+1, j) = h(2i+1, j-1) + q^{j-2} h(2i, j-1).
class SeidelTriangle {
public:
  SeidelKind kind() const { return kind_; }
  int imax() const { return static_cast<int>(rows_.size()); }

  /// Entry (i,j); returns zero for j outside the band of row i.
  const QPoly& at(int i, int j) const {
    static const QPoly kZero;
    if (i < 1 || i > imax()) throw std::invalid_argument("SeidelTriangle::at: row out of range");
    const auto& row = rows_[static_cast<size_t>(i - 1)];
    if (j < 1 || j > static_cast<int>(row.size())) return kZero;
    return row[static_cast<size_t>(j - 1)];
  }

  /// Width of row i, i.e. ceil(i/2).
  static int row_width(int i) { return (i + 1) / 2; }

  friend SeidelTriangle g_triangle(int imax);
  friend SeidelTriangle h_triangle(int imax);

private:
  SeidelTriangle(SeidelKind kind, std::vector<std::vector<QPoly>> rows)
      : kind_(kind), rows_(std::move(rows)) {}

  SeidelKind kind_;
  std::vector<std::vector<QPoly>> rows_;
};

inline SeidelTriangle g_triangle(int imax) {
  if (imax < 1) throw std::invalid_argument("g_triangle: imax must be >= 1");
  std::vector<std::vector<QPoly>> rows;
  rows.reserve(static_cast<size_t>(imax));
  rows.push_back({QPoly(1)});
  for (int i = 2; i <= imax; ++i) {
    const auto& prev = rows.back();
    const int width = SeidelTriangle::row_width(i);
    const int prev_width = static_cast<int>(prev.size());
    std::vector<QPoly> row(static_cast<size_t>(width));
    auto above = [&](int j) -> const QPoly& {
      static const QPoly kZero;
      return (j >= 1 && j <= prev_width) ? prev[static_cast<size_t>(j - 1)] : kZero;
    };
    if (i % 2 == 1) {
      for (int j = 1; j <= width; ++j) {
        QPoly left = (j > 1) ? row[static_cast<size_t>(j - 2)] : QPoly();
        row[static_cast<size_t>(j - 1)] = left + above(j).shifted_up(j - 1);
      }
    } else {
      for (int j = width; j >= 1; --j) {
        QPoly right = (j < width) ? row[static_cast<size_t>(j)] : QPoly();
        row[static_cast<size_t>(j - 1)] = right + above(j).shifted_up(j - 1);
      }
    }
    rows.push_back(std::move(row));
  }
  return SeidelTriangle(SeidelKind::g, std::move(rows));
}

inline SeidelTriangle h_triangle(int imax) {
  if (imax < 1) throw std::invalid_argument("h_triangle: imax must be >= 1");
  std::vector<std::vector<QPoly>> rows;
  rows.reserve(static_cast<size_t>(imax));
  rows.push_back({QPoly(1)});
  for (int i = 2; i <= imax; ++i) {
    const auto& prev = rows.back();
    const int width = SeidelTriangle::row_width(i);
    const int prev_width = static_cast<int>(prev.size());
    std::vector<QPoly> row(static_cast<size_t>(width));
    auto above = [&](int j) -> const QPoly& {
      static const QPoly kZero;
      return (j >= 1 && j <= prev_width) ? prev[static_cast<size_t>(j - 1)] : kZero;
    };
    if (i % 2 == 1) {
      // row[0] stays zero: h(2i+1, 1) = 0
      for (int j = 2; j <= width; ++j)
        row[static_cast<size_t>(j - 1)] = row[static_cast<size_t>(j - 2)] + above(j - 1).shifted_up(j - 2);
    } else {
      for (int j = width; j >= 1; --j) {
        QPoly right = (j < width) ? row[static_cast<size_t>(j)] : QPoly();
        row[static_cast<size_t>(j - 1)] = right + above(j).shifted_up(j - 1);
      }
    }
    rows.push_back(std::move(row));
  }
  return SeidelTriangle(SeidelKind::h, std::move(rows));
}

/// q-Genocchi polynomial G_{2n}(q) = g(2n-1, n), with G_2(q) = 1.
inline QPoly genocchi(int n) {
  if (n < 1) throw std::invalid_argument("genocchi: n must be >= 1");
  if (n == 1) return QPoly(1);
  return g_triangle(2 * n - 1).at(2 * n - 1, n);
}

/// q-median Genocchi polynomial H_{2n-1}(q) = h(2n-1, n), with H_1(q) = 1.
/// This is the value every combinatorial model below produces (strict
/// pistols, inverse-matrix entries, the k-triangle boundary).  The g-side
/// expression q^{n-2} g(2n-1, 1) is its coefficient reversal and coincides
/// with it only through n = 4; see median_genocchi_by_g.
inline QPoly median_genocchi(int n) {
  if (n < 1) throw std::invalid_argument("median_genocchi: n must be >= 1");
  if (n == 1) return QPoly(1);
  return h_triangle(2 * n - 1).at(2 * n - 1, n);
}

/// The g-triangle expression q^{n-2} g(2n-1, 1): the mirror image of
/// median_genocchi(n), exposed so the reversal relation can be checked.
inline QPoly median_genocchi_by_g(int n) {
  if (n < 1) throw std::invalid_argument("median_genocchi_by_g: n must be >= 1");
  if (n == 1) return QPoly(1);
  return g_triangle(2 * n - 1).at(2 * n - 1, 1).shifted_up(n - 2);
}

/// Coefficient reversal on the exponent range [low_degree, degree].
inline QPoly reversed(const QPoly& p) {
  if (p.is_zero()) return p;
  const int lo = p.low_degree(), hi = p.degree();
  std::vector<Int> r(static_cast<size_t>(hi) + 1, Int(0));
  for (int e = lo; e <= hi; ++e) r[static_cast<size_t>(lo + hi - e)] = p.coeff(e);
  return QPoly(std::move(r));
}

}  // namespace qgen
