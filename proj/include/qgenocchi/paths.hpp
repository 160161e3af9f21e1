#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pistols.hpp"
#include "qpoly.hpp"

namespace qgen {

enum class Step : std::uint8_t { East, South };

/// Monotone lattice path: East moves (x,y) to (x+1,y), South to (x,y-1).
struct LatticePath {
  int x0 = 0;
  int y0 = 0;
  std::vector<Step> steps;

  /// Area statistic: sum over South steps of (x - x0).
  int area() const {
    int x = x0, a = 0;
    for (Step s : steps) {
      if (s == Step::East)
        ++x;
      else
        a += x - x0;
    }
    return a;
  }

  std::vector<std::pair<int, int>> points() const {
    std::vector<std::pair<int, int>> pts;
    pts.reserve(steps.size() + 1);
    int x = x0, y = y0;
    pts.emplace_back(x, y);
    for (Step s : steps) {
      if (s == Step::East)
        ++x;
      else
        --y;
      pts.emplace_back(x, y);
    }
    return pts;
  }

  std::string step_string() const {
    std::string s;
    s.reserve(steps.size());
    for (Step st : steps) s += (st == Step::East) ? 'E' : 'S';
    return s;
  }
};

/// A tuple of pairwise vertex-disjoint paths realising c_{k,l} (kind 'c') or
/// d_{k,l} (kind 'd').  Only the k-l nontrivial paths (source index l..k-1)
/// are stored: the remaining paths of the defining family are forced
/// horizontal, carry no weight and cannot meet anything.
struct PathConfig {
  char kind = 'c';
  int k = 0;
  int l = 0;
  std::vector<LatticePath> paths;  // index order l, l+1, ..., k-1

  int area() const {
    int a = 0;
    for (const LatticePath& p : paths) a += p.area();
    return a;
  }
};

namespace detail {

// All paths with the given endpoints: easts east, 2 souths, one candidate per
// placement of the two south steps.  Ordered by south-step positions.
inline std::vector<LatticePath> two_south_paths(int x0, int y0, int easts) {
  std::vector<LatticePath> out;
  const int total = easts + 2;
  for (int s1 = 0; s1 < total; ++s1)
    for (int s2 = s1 + 1; s2 < total; ++s2) {
      LatticePath p{x0, y0, std::vector<Step>(static_cast<size_t>(total), Step::East)};
      p.steps[static_cast<size_t>(s1)] = Step::South;
      p.steps[static_cast<size_t>(s2)] = Step::South;
      out.push_back(std::move(p));
    }
  return out;
}

inline bool points_disjoint(const std::vector<std::pair<int, int>>& a,
                            const std::vector<std::pair<int, int>>& b) {
  for (const auto& p : a)
    for (const auto& q : b)
      if (p == q) return false;
  return true;
}

// Product enumeration over the per-index candidate sets, keeping only
// pairwise vertex-disjoint tuples.
inline std::vector<PathConfig> enumerate_configs(char kind, int k, int l) {
  if (l < 1 || l > k) throw std::invalid_argument("enumerate_configs: need 1 <= l <= k");
  std::vector<std::vector<LatticePath>> candidates;
  for (int i = l; i < k; ++i) {
    if (kind == 'c')
      candidates.push_back(two_south_paths(i, 2 * i + 1, i - 1));  // A_{i+1}(i,2i+1) -> B_i(2i-1,2i-1)
    else
      candidates.push_back(two_south_paths(0, 2 * i, i - 1));  // A_{i+1}(0,2i) -> B_i(i-1,2i-2)
  }
  std::vector<PathConfig> out;
  std::vector<const LatticePath*> chosen;
  std::vector<std::vector<std::pair<int, int>>> chosen_pts;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == candidates.size()) {
      PathConfig cfg{kind, k, l, {}};
      cfg.paths.reserve(chosen.size());
      for (const LatticePath* p : chosen) cfg.paths.push_back(*p);
      out.push_back(std::move(cfg));
      return;
    }
    for (const LatticePath& cand : candidates[idx]) {
      auto pts = cand.points();
      bool ok = true;
      for (const auto& prev : chosen_pts)
        if (!points_disjoint(prev, pts)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(&cand);
      chosen_pts.push_back(std::move(pts));
      rec(idx + 1);
      chosen_pts.pop_back();
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace detail

/// All vertex-disjoint path families for c_{k,l}(q); the generating function
/// by total area equals the matrix entry.
inline std::vector<PathConfig> enumerate_c_configs(int k, int l) { return detail::enumerate_configs('c', k, l); }

/// All vertex-disjoint path families for d_{k,l}(q).
inline std::vector<PathConfig> enumerate_d_configs(int k, int l) { return detail::enumerate_configs('d', k, l); }

inline QPoly config_gen_poly(const std::vector<PathConfig>& configs) {
  QPoly sum;
  for (const PathConfig& c : configs) sum += QPoly::monomial(c.area());
  return sum;
}

/// Decode a configuration into its truncated pistol on [2(k-1)]: the path of
/// index i contributes p(2i) and p(2i-1) from the abscissas of its upper and
/// lower south steps, with v = x - i + 1 for kind 'c' and v = x + 1 for 'd'.
inline Pistol truncated_pistol_from_config(const PathConfig& cfg) {
  const int kk = cfg.k - 1;
  const int ll = cfg.l - 1;
  Pistol p{std::vector<int>(static_cast<size_t>(2 * kk), 0), cfg.kind == 'd', ll};
  int index = cfg.l;
  for (const LatticePath& path : cfg.paths) {
    std::vector<int> south_x;
    int x = path.x0;
    for (Step s : path.steps) {
      if (s == Step::East)
        ++x;
      else
        south_x.push_back(x);
    }
    if (south_x.size() != 2) throw std::logic_error("truncated_pistol_from_config: path must have two south steps");
    const int base = (cfg.kind == 'c') ? (1 - index) : 1;
    p.values[static_cast<size_t>(2 * index - 1)] = south_x[0] + base;  // p(2i) from the upper south step
    p.values[static_cast<size_t>(2 * index - 2)] = south_x[1] + base;  // p(2i-1) from the lower one
    ++index;
  }
  return p;
}

}  // namespace qgen
