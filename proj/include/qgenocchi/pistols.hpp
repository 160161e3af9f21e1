#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "qpoly.hpp"

namespace qgen {

/// An alternating pistol on [m]: a map p with p(2i-1) <= i, p(2i) <= i,
/// p(i) >= 1, satisfying p(2i-1) >= p(2i) and p(2i) <= p(2i+1)
/// (strict variant: p(2i) < p(2i+1)).
///
/// The truncated variant (trunc = l > 0) lives on [2k] and forces
/// p(2i-1) = p(2i) = 0 for i <= l; in the remaining positions the same value
/// bounds and pair inequality hold, and the junction inequality is enforced
/// wherever both sides are in the nonzero region.
struct Pistol {
  std::vector<int> values;  // values[t-1] = p(t)
  bool strict = false;
  int trunc = 0;  // l; 0 = untruncated

  int length() const { return static_cast<int>(values.size()); }
  int value(int t) const { return values[static_cast<size_t>(t - 1)]; }

  friend bool operator==(const Pistol& a, const Pistol& b) {
    return a.values == b.values && a.strict == b.strict && a.trunc == b.trunc;
  }
  friend bool operator<(const Pistol& a, const Pistol& b) { return a.values < b.values; }
};

/// ch(p) = sum of (p(i) - 1); defined for untruncated pistols only.
inline int charge(const Pistol& p) {
  if (p.trunc > 0) throw std::invalid_argument("charge: truncated pistols use truncated_statistic");
  int ch = 0;
  for (int v : p.values) ch += v - 1;
  return ch;
}

/// Statistic for truncated pistols on [2k]: sum of p(i) minus 2(k - l).
/// For trunc = 0 this coincides with the charge.
inline int truncated_statistic(const Pistol& p) {
  if (p.length() % 2 != 0) throw std::invalid_argument("truncated_statistic: length must be even");
  const int k = p.length() / 2;
  int s = 0;
  for (int v : p.values) s += v;
  return s - 2 * (k - p.trunc);
}

inline bool is_valid_pistol(const Pistol& p) {
  const int m = p.length();
  const int l = p.trunc;
  if (l < 0 || 2 * l > m) return false;
  if (l > 0 && m % 2 != 0) return false;
  for (int t = 1; t <= m; ++t) {
    const int i = (t + 1) / 2;  // the index with p(2i-1), p(2i) <= i
    const int v = p.value(t);
    if (t <= 2 * l) {
      if (v != 0) return false;
      continue;
    }
    if (v < 1 || v > i) return false;
    if (t % 2 == 0 && t - 1 > 2 * l && v > p.value(t - 1)) return false;  // p(2i-1) >= p(2i)
    if (t % 2 == 1 && t > 1 && t - 1 > 2 * l) {                           // junction at p(2i) vs p(2i+1)
      const int prev = p.value(t - 1);
      if (p.strict ? !(prev < v) : !(prev <= v)) return false;
    }
  }
  return true;
}

namespace detail {

// Depth-first construction with the value bounds and inequalities applied as
// each position is placed; values are tried ascending, so the output order is
// lexicographic on the value sequence.
inline void pistol_dfs(int m, int l, bool strict, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& emit) {
  const int t = static_cast<int>(cur.size()) + 1;
  if (t > m) {
    emit(cur);
    return;
  }
  if (t <= 2 * l) {
    cur.push_back(0);
    pistol_dfs(m, l, strict, cur, emit);
    cur.pop_back();
    return;
  }
  const int cap = (t + 1) / 2;
  int lo = 1, hi = cap;
  if (t % 2 == 0 && t - 1 > 2 * l) {
    hi = std::min(hi, cur.back());  // p(2i) <= p(2i-1)
  } else if (t % 2 == 1 && t > 1 && t - 1 > 2 * l) {
    lo = std::max(lo, cur.back() + (strict ? 1 : 0));  // p(2i) <= / < p(2i+1)
  }
  for (int v = lo; v <= hi; ++v) {
    cur.push_back(v);
    pistol_dfs(m, l, strict, cur, emit);
    cur.pop_back();
  }
}

}  // namespace detail

/// All alternating (or strict-alternating) pistols on [m], lexicographic.
inline std::vector<Pistol> enumerate_pistols(int m, bool strict) {
  if (m < 1) throw std::invalid_argument("enumerate_pistols: m must be >= 1");
  std::vector<Pistol> out;
  std::vector<int> cur;
  detail::pistol_dfs(m, 0, strict, cur, [&](const std::vector<int>& v) { out.push_back({v, strict, 0}); });
  return out;
}

/// All pistols on [2k] truncated at index 2l, lexicographic.
inline std::vector<Pistol> enumerate_truncated_pistols(int k, int l, bool strict) {
  if (l < 0 || l > k) throw std::invalid_argument("enumerate_truncated_pistols: need 0 <= l <= k");
  std::vector<Pistol> out;
  std::vector<int> cur;
  detail::pistol_dfs(2 * k, l, strict, cur, [&](const std::vector<int>& v) { out.push_back({v, strict, l}); });
  return out;
}

/// Generating polynomial of pistols on [i] with p(i) = j, weighted by
/// q^{ch(p)-j+1}; equals the Seidel entry g(i,j) (weak) or h(i,j) (strict).
inline QPoly pistol_gen_poly(int i, int j, bool strict) {
  if (j < 1 || j > (i + 1) / 2) throw std::invalid_argument("pistol_gen_poly: j outside 1..ceil(i/2)");
  QPoly sum;
  for (const Pistol& p : enumerate_pistols(i, strict))
    if (p.values.back() == j) sum += QPoly::monomial(charge(p) - j + 1);
  return sum;
}

/// Generating polynomial of all pistols on [2n] by charge: G_{2n+2}(q) for the
/// weak variant, H_{2n+1}(q) for the strict one.
inline QPoly total_gen_poly(int n, bool strict) {
  if (n < 1) throw std::invalid_argument("total_gen_poly: n must be >= 1");
  QPoly sum;
  for (const Pistol& p : enumerate_pistols(2 * n, strict)) sum += QPoly::monomial(charge(p));
  return sum;
}

/// Generating polynomial of pistols on [2k] truncated at 2l, by the truncated
/// statistic: equals c_{k+1,l+1}(q) (weak) or d_{k+1,l+1}(q) (strict).
inline QPoly truncated_gen_poly(int k, int l, bool strict) {
  if (l < 0 || l > k) throw std::invalid_argument("truncated_gen_poly: need 0 <= l <= k");
  QPoly sum;
  for (const Pistol& p : enumerate_truncated_pistols(k, l, strict)) sum += QPoly::monomial(truncated_statistic(p));
  return sum;
}

}  // namespace qgen
