#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <vector>

#include "qpoly.hpp"

namespace qgen {

enum class FillingVariant { RowStrict, ColStrictReverse };

/// A filling of the two-cell-per-row staircase skew shape
/// (k-l+1, k-l, ..., 2) minus (k-l-1, ..., 1, 0): row i holds the pair
/// (p[i][0], p[i][1]) and overlaps row i+1 in a single column, where the left
/// cell of row i sits above the right cell of row i+1.
///
/// RowStrict: rows strictly decrease, aligned columns weakly decrease
/// downward, entries in row i at most l+i; weight exponent k^2 - l^2 - |T|.
/// ColStrictReverse: rows weakly increase, aligned columns strictly increase
/// downward, entries in row i at most l+i-1; weight exponent |T| - 2(k-l).
struct SkewFilling {
  int k = 0;
  int l = 0;
  FillingVariant variant = FillingVariant::RowStrict;
  std::vector<std::array<int, 2>> rows;

  /// |T| = sum of all entries.
  int value() const {
    int s = 0;
    for (const auto& r : rows) s += r[0] + r[1];
    return s;
  }

  int weight_exponent() const {
    return variant == FillingVariant::RowStrict ? k * k - l * l - value() : value() - 2 * (k - l);
  }

  friend bool operator==(const SkewFilling& a, const SkewFilling& b) {
    return a.k == b.k && a.l == b.l && a.variant == b.variant && a.rows == b.rows;
  }
};

/// All fillings for given (k, l), lexicographic on the row pairs.
inline std::vector<SkewFilling> enumerate_fillings(int k, int l, FillingVariant variant) {
  if (l < 1 || l > k) throw std::invalid_argument("enumerate_fillings: need 1 <= l <= k");
  const int nrows = k - l;
  std::vector<SkewFilling> out;
  SkewFilling cur{k, l, variant, {}};
  std::function<void(int)> rec = [&](int i) {
    if (i > nrows) {
      out.push_back(cur);
      return;
    }
    const int bound = variant == FillingVariant::RowStrict ? l + i : l + i - 1;
    for (int a = 1; a <= bound; ++a)
      for (int b = 1; b <= bound; ++b) {
        if (variant == FillingVariant::RowStrict) {
          if (!(a > b)) continue;
          if (i > 1 && !(cur.rows.back()[0] >= b)) continue;  // column: p(i-1,1) >= p(i,2)
        } else {
          if (!(a <= b)) continue;
          if (i > 1 && !(cur.rows.back()[0] < b)) continue;  // column: p(i-1,1) < p(i,2)
        }
        cur.rows.push_back({a, b});
        rec(i + 1);
        cur.rows.pop_back();
      }
  };
  rec(1);
  return out;
}

/// Weighted sum over the fillings; reproduces c_{k,l}(q) for RowStrict and
/// d_{k,l}(q) for ColStrictReverse.
inline QPoly filling_gen_poly(int k, int l, FillingVariant variant) {
  QPoly sum;
  for (const SkewFilling& t : enumerate_fillings(k, l, variant)) {
    const int e = t.weight_exponent();
    if (e < 0) throw std::logic_error("filling_gen_poly: negative weight exponent");
    sum += QPoly::monomial(e);
  }
  return sum;
}

}  // namespace qgen
