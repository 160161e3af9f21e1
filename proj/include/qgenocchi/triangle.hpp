#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polymatrix.hpp"
#include "qmatrix.hpp"
#include "qpoly.hpp"
#include "xseries.hpp"

namespace qgen {

enum class KRoute { CSeries, DSeries, Corollary3 };

inline const char* route_name(KRoute r) {
  switch (r) {
    case KRoute::CSeries: return "c-series";
    case KRoute::DSeries: return "d-series";
    case KRoute::Corollary3: return "alternating-sum";
  }
  return "?";
}

/// Row n of the k-triangle: entries k_{n,1}(q) .. k_{n,n-1}(q).
struct KTriangleRow {
  int n = 0;
  KRoute route = KRoute::CSeries;
  std::vector<QPoly> entries;  // entries[i-1] = k_{n,i}(q)

  const QPoly& entry(int i) const { return entries[static_cast<size_t>(i - 1)]; }
};

namespace detail {

// Multiply the series sum of t(n+j, j+1) x^{j+1} (t = c or d table) by
// (x;q)_{2n-1} and return the numerator polynomial; every coefficient from
// x^n up to the truncation must vanish, which certifies that enough terms
// of the series were used.
inline XSeries k_numerator(int n, int terms, const PolyMatrix& table) {
  const int order = terms + 2;
  XSeries series(order);
  for (int j = 0; j <= terms; ++j) series.set_coeff(j + 1, table.at(n + j, j + 1));
  XSeries numer = series * pochhammer_x(2 * n - 1).with_order(order);
  for (int m = n; m < order; ++m)
    if (!numer.coeff(m).is_zero())
      throw std::logic_error("k_numerator: coefficient of x^" + std::to_string(m) +
                             " does not vanish (series truncated too early)");
  if (!numer.coeff(0).is_zero()) throw std::logic_error("k_numerator: nonzero constant coefficient");
  return numer;
}

inline KTriangleRow k_row_c_series(int n, int terms, const PolyMatrix& ctab) {
  XSeries numer = k_numerator(n, terms, ctab);
  KTriangleRow row{n, KRoute::CSeries, {}};
  row.entries.reserve(static_cast<size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i) row.entries.push_back(numer.coeff(i).shifted_down_exact((i - 1) * i));
  return row;
}

inline KTriangleRow k_row_d_series(int n, int terms, const PolyMatrix& dtab) {
  XSeries numer = k_numerator(n, terms, dtab);
  KTriangleRow row{n, KRoute::DSeries, std::vector<QPoly>(static_cast<size_t>(n - 1))};
  for (int i = 1; i <= n - 1; ++i)
    row.entries[static_cast<size_t>(n - i - 1)] = numer.coeff(i).shifted_down_exact((i - 1) * i);
  return row;
}

inline KTriangleRow k_row_corollary3(int n, const PolyMatrix& ctab) {
  KTriangleRow row{n, KRoute::Corollary3, {}};
  row.entries.reserve(static_cast<size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i) {
    QPoly acc;
    for (int l = 0; l <= i - 1; ++l) {
      QPoly term = qbinom(2 * n - 1, l).shifted_up(l * (l - 1) / 2) * ctab.at(n + i - l - 1, i - l);
      if (l % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    row.entries.push_back(acc.shifted_down_exact((i - 1) * i));
  }
  return row;
}

}  // namespace detail

/// Compute row n of the k-triangle by the requested route.  The series routes
/// use 3n + extra_terms series terms; extra_terms exists so that truncation
/// stability can be tested.
inline KTriangleRow k_row(int n, KRoute route = KRoute::CSeries, int extra_terms = 0) {
  if (n < 2) throw std::invalid_argument("k_row: n must be >= 2");
  if (extra_terms < 0) throw std::invalid_argument("k_row: extra_terms must be >= 0");
  const int terms = 3 * n + extra_terms;
  switch (route) {
    case KRoute::CSeries: return detail::k_row_c_series(n, terms, c_table(n + terms));
    case KRoute::DSeries: return detail::k_row_d_series(n, terms, d_table(n + terms));
    case KRoute::Corollary3: return detail::k_row_corollary3(n, c_table(2 * n - 2));
  }
  throw std::invalid_argument("k_row: unknown route");
}

/// E_{2n-2}(q) as the weighted row sum over i of q^{(i-1)i} k_{n,n-i}(q).
inline QPoly euler_refinement(int n, KRoute route = KRoute::CSeries) {
  if (n < 2) throw std::invalid_argument("euler_refinement: n must be >= 2");
  const KTriangleRow row = k_row(n, route);
  QPoly sum;
  for (int i = 1; i <= n - 1; ++i) sum += row.entry(n - i).shifted_up((i - 1) * i);
  return sum;
}

struct ConjectureViolation {
  int n = 0;
  int i = 0;
  int exponent = 0;
  Int coefficient;
};

struct ConjectureReport {
  int nmax = 0;
  bool all_nonnegative = true;
  std::vector<ConjectureViolation> violations;
  std::vector<KTriangleRow> rows;  // n = 2..nmax
};

/// Scan k_{n,i}(q) for 2 <= n <= nmax for negative coefficients.  One shared
/// c-table serves every row.
inline ConjectureReport conjecture_scan(int nmax) {
  if (nmax < 2) throw std::invalid_argument("conjecture_scan: nmax must be >= 2");
  ConjectureReport report;
  report.nmax = nmax;
  const PolyMatrix ctab = c_table(4 * nmax);
  for (int n = 2; n <= nmax; ++n) {
    KTriangleRow row = detail::k_row_c_series(n, 3 * n, ctab);
    for (int i = 1; i <= n - 1; ++i) {
      const QPoly& p = row.entry(i);
      for (int e = 0; e <= p.degree(); ++e)
        if (p.coeff(e) < 0) {
          report.all_nonnegative = false;
          report.violations.push_back({n, i, e, p.coeff(e)});
        }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace qgen
