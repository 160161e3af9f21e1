#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "pistols.hpp"
#include "qpoly.hpp"

namespace qgen {

struct Permutation {
  std::vector<int> images;  // images[i-1] = sigma(i), a bijection on [n]

  int size() const { return static_cast<int>(images.size()); }
  int image(int i) const { return images[static_cast<size_t>(i - 1)]; }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images == b.images; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.images < b.images; }
};

/// f(i) in [0, i-1] for every i.
struct SubexceedantFn {
  std::vector<int> values;  // values[i-1] = f(i)

  int size() const { return static_cast<int>(values.size()); }
  int value(int i) const { return values[static_cast<size_t>(i - 1)]; }

  friend bool operator==(const SubexceedantFn& a, const SubexceedantFn& b) { return a.values == b.values; }
};

inline bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.images.size(), false);
  for (int v : p.images) {
    if (v < 1 || v > p.size() || seen[static_cast<size_t>(v - 1)]) return false;
    seen[static_cast<size_t>(v - 1)] = true;
  }
  return true;
}

inline bool is_subexceedant(const SubexceedantFn& f) {
  for (int i = 1; i <= f.size(); ++i)
    if (f.value(i) < 0 || f.value(i) >= i) return false;
  return true;
}

/// f(i) = number of indices j < i with sigma(j) < sigma(i).
inline SubexceedantFn inversion_table(const Permutation& p) {
  SubexceedantFn f;
  f.values.resize(p.images.size());
  for (int i = 1; i <= p.size(); ++i) {
    int c = 0;
    for (int j = 1; j < i; ++j)
      if (p.image(j) < p.image(i)) ++c;
    f.values[static_cast<size_t>(i - 1)] = c;
  }
  return f;
}

/// Inverse of the inversion-table bijection.  Working right to left, the
/// positions 1..i-1 hold exactly the not-yet-assigned values, so sigma(i) is
/// the (f(i)+1)-th smallest of them.
inline Permutation perm_from_table(const SubexceedantFn& f) {
  if (!is_subexceedant(f)) throw std::invalid_argument("perm_from_table: not a subexceedant function");
  const int n = f.size();
  std::vector<int> avail(static_cast<size_t>(n));
  for (int v = 1; v <= n; ++v) avail[static_cast<size_t>(v - 1)] = v;
  Permutation p;
  p.images.resize(static_cast<size_t>(n));
  for (int i = n; i >= 1; --i) {
    const int idx = f.value(i);
    p.images[static_cast<size_t>(i - 1)] = avail[static_cast<size_t>(idx)];
    avail.erase(avail.begin() + idx);
  }
  return p;
}

/// inv(sigma) = sum of (i - 1 - f(i)) = number of inversion pairs.
inline int inv_stat(const Permutation& p) {
  const SubexceedantFn f = inversion_table(p);
  int inv = 0;
  for (int i = 1; i <= p.size(); ++i) inv += i - 1 - f.value(i);
  return inv;
}

/// sigma(2i-1) > sigma(2i) and sigma(2i) < sigma(2i+1) wherever defined.
inline bool is_alternating(const Permutation& p) {
  for (int t = 2; t <= p.size(); ++t) {
    if (t % 2 == 0) {
      if (!(p.image(t - 1) > p.image(t))) return false;
    } else {
      if (!(p.image(t - 1) < p.image(t))) return false;
    }
  }
  return true;
}

/// The set F_m of alternating permutations on odd [m] whose inversion-table
/// values are all even, sorted by window notation.  Enumeration walks the
/// even subexceedant functions rather than all of S_m.
inline std::vector<Permutation> enumerate_F(int m) {
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("enumerate_F: m must be odd and >= 1");
  std::vector<Permutation> out;
  SubexceedantFn f;
  f.values.assign(static_cast<size_t>(m), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i > m) {
      Permutation p = perm_from_table(f);
      if (is_alternating(p)) out.push_back(std::move(p));
      return;
    }
    for (int v = 0; v < i; v += 2) {
      f.values[static_cast<size_t>(i - 1)] = v;
      rec(i + 1);
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

/// G_{2n+2}(q) as the generating function of F_{2n+1} by (inv - n)/2.
inline QPoly genocchi_via_perms(int n) {
  if (n < 1) throw std::invalid_argument("genocchi_via_perms: n must be >= 1");
  QPoly sum;
  for (const Permutation& p : enumerate_F(2 * n + 1)) {
    const int inv = inv_stat(p);
    if (inv < n || (inv - n) % 2 != 0)
      throw std::logic_error("genocchi_via_perms: inv - n is not an even nonnegative integer");
    sum += QPoly::monomial((inv - n) / 2);
  }
  return sum;
}

/// The pistol-to-permutation pipeline: p on [2n] maps to p' on [2n+1] via
/// p'(1) = 1, p'(2i) = i+1-p(2i-1), p'(2i+1) = i+2-p(2i), then to the even
/// inversion table f(i) = 2(p'(i)-1), then to its permutation.
inline Permutation pistol_to_perm(const Pistol& p) {
  if (p.trunc != 0 || p.length() % 2 != 0 || !is_valid_pistol(Pistol{p.values, false, 0}))
    throw std::invalid_argument("pistol_to_perm: input must be an alternating pistol on [2n]");
  const int n = p.length() / 2;
  std::vector<int> prime(static_cast<size_t>(2 * n + 1));
  prime[0] = 1;
  for (int i = 1; i <= n; ++i) {
    prime[static_cast<size_t>(2 * i - 1)] = i + 1 - p.value(2 * i - 1);
    prime[static_cast<size_t>(2 * i)] = i + 2 - p.value(2 * i);
  }
  SubexceedantFn f;
  f.values.resize(prime.size());
  for (size_t i = 0; i < prime.size(); ++i) f.values[i] = 2 * (prime[i] - 1);
  return perm_from_table(f);
}

namespace detail {

// Permutations of [m] with descent set exactly {2, 4, ..., m-2}, built left to
// right; the added inversion count of placing v is the number of larger values
// already used.
inline void updown_dfs(int m, int pos, int prev, unsigned used, int inv,
                       std::vector<int>& cur, const std::function<void(const std::vector<int>&, int)>& emit) {
  if (pos > m) {
    emit(cur, inv);
    return;
  }
  const bool descent = pos > 1 && (pos - 1) % 2 == 0;
  for (int v = 1; v <= m; ++v) {
    if (used & (1u << v)) continue;
    if (pos > 1 && (descent ? !(v < prev) : !(v > prev))) continue;
#if defined(__GNUC__) || defined(__clang__)
    const int add = __builtin_popcount(used >> v);
#else
    int add = 0;
    for (int u = v + 1; u <= m; ++u)
      if (used & (1u << u)) ++add;
#endif
    cur.push_back(v);
    updown_dfs(m, pos + 1, v, used | (1u << v), inv + add, cur, emit);
    cur.pop_back();
  }
}

}  // namespace detail

inline void for_each_updown(int m, const std::function<void(const std::vector<int>&, int)>& emit) {
  if (m < 0 || m % 2 != 0) throw std::invalid_argument("for_each_updown: m must be even and >= 0");
  if (m > 24) throw std::invalid_argument("for_each_updown: m > 24 exceeds the enumeration budget");
  if (m == 0) {
    std::vector<int> empty;
    emit(empty, 0);
    return;
  }
  std::vector<int> cur;
  cur.reserve(static_cast<size_t>(m));
  detail::updown_dfs(m, 1, 0, 0u, 0, cur, emit);
}

/// Sum of q^{inv} over permutations of [m] with descent set exactly
/// {2, 4, ..., m-2}; equals the q-secant number E_m(q).
inline QPoly updown_gen_poly(int m) {
  std::vector<Int> coeffs(static_cast<size_t>(m * (m - 1) / 2) + 1, Int(0));
  for_each_updown(m, [&](const std::vector<int>&, int inv) { coeffs[static_cast<size_t>(inv)] += 1; });
  return QPoly(std::move(coeffs));
}

/// q-secant numbers E_{2n}(q) from the series-reciprocal definition, via the
/// equivalent convolution: sum over k of (-1)^{n-k} [2n, 2k]_q E_{2k}(q)
/// vanishes for n >= 1 and equals 1 for n = 0.
inline QPoly qeuler(int n) {
  if (n < 0) throw std::invalid_argument("qeuler: n must be >= 0");
  std::vector<QPoly> e;
  e.reserve(static_cast<size_t>(n) + 1);
  e.push_back(QPoly(1));
  for (int t = 1; t <= n; ++t) {
    QPoly s;
    for (int k = 0; k < t; ++k) {
      QPoly term = qbinom(2 * t, 2 * k) * e[static_cast<size_t>(k)];
      if ((t - k) % 2 == 1)
        s += term;
      else
        s -= term;
    }
    e.push_back(std::move(s));
  }
  return e.back();
}

}  // namespace qgen
