#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "perms.hpp"
#include "pistols.hpp"
#include "paths.hpp"
#include "qmatrix.hpp"
#include "qpoly.hpp"
#include "reference.hpp"
#include "seidel.hpp"
#include "tableaux.hpp"
#include "triangle.hpp"
#include "xseries.hpp"

namespace qgen {

struct CheckResult {
  std::string id;
  std::string desc;
  bool pass = false;
  std::string witness;
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;
  long long elapsed_ms = 0;

  bool passed() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace verify_detail {

struct Check {
  std::string id;
  std::string desc;
  std::function<std::pair<bool, std::string>()> run;
};

using Checks = std::vector<Check>;

inline std::pair<bool, std::string> ok(std::string witness) { return {true, std::move(witness)}; }
inline std::pair<bool, std::string> fail(std::string witness) { return {false, std::move(witness)}; }

// ---- seidel ----

inline Checks seidel_checks(int max) {
  Checks cs;
  cs.push_back({"sd.table.g", "g-triangle rows 1..7 match the reference table", [] {
                  const SeidelTriangle g = g_triangle(7);
                  for (const auto& e : reference::g_triangle_7())
                    if (g.at(e.i, e.j) != e.value) return fail("g(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")");
                  return ok("16 entries");
                }});
  cs.push_back({"sd.table.h", "h-triangle rows 1..8 match the reference table", [] {
                  const SeidelTriangle h = h_triangle(8);
                  for (const auto& e : reference::h_triangle_8())
                    if (h.at(e.i, e.j) != e.value) return fail("h(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")");
                  return ok("20 entries");
                }});
  const int nsum = std::min(max, 10);
  cs.push_back({"sd.sum.g", "G_{2n+2} equals the weighted row sum of g(2n,*), n <= " + std::to_string(nsum), [nsum] {
                  for (int n = 1; n <= nsum; ++n) {
                    const SeidelTriangle g = g_triangle(2 * n);
                    QPoly s;
                    for (int k = 1; k <= n; ++k) s += g.at(2 * n, k).shifted_up(k - 1);
                    if (s != genocchi(n + 1)) return fail("n=" + std::to_string(n));
                  }
                  return ok("n <= " + std::to_string(nsum));
                }});
  cs.push_back({"sd.sum.h", "H_{2n+1} equals the weighted row sum of h(2n,*), n <= " + std::to_string(nsum), [nsum] {
                  for (int n = 1; n <= nsum; ++n) {
                    const SeidelTriangle h = h_triangle(2 * n);
                    QPoly s;
                    for (int k = 1; k <= n; ++k) s += h.at(2 * n, k).shifted_up(k - 1);
                    if (s != median_genocchi(n + 1)) return fail("n=" + std::to_string(n));
                  }
                  return ok("n <= " + std::to_string(nsum));
                }});
  cs.push_back({"sd.median.mirror",
                "q^{n-2} g(2n-1,1) is the coefficient reversal of h(2n-1,n); equality holds through n = 4 only",
                [nsum] {
                  for (int n = 2; n <= std::max(nsum, 5); ++n) {
                    if (median_genocchi(n) != reversed(median_genocchi_by_g(n))) return fail("reversal n=" + std::to_string(n));
                    if (n <= 4 && median_genocchi(n) != median_genocchi_by_g(n)) return fail("equality n=" + std::to_string(n));
                    if (n >= 5 && median_genocchi(n) == median_genocchi_by_g(n)) return fail("unexpected equality n=" + std::to_string(n));
                  }
                  return ok("reversal verified, routes diverge from n = 5 on");
                }});
  cs.push_back({"sd.q1", "genocchi(n) at q = 1 gives the classical integers", [max] {
                  const auto ref = reference::genocchi_at_one();
                  const int bound = std::min<int>(std::min(max, 7), static_cast<int>(ref.size()));
                  for (int n = 1; n <= bound; ++n)
                    if (genocchi(n).eval_at_one() != ref[static_cast<size_t>(n - 1)]) return fail("n=" + std::to_string(n));
                  return ok("n <= " + std::to_string(bound));
                }});
  return cs;
}

// ---- pistols ----

inline Checks pistols_checks(int max) {
  Checks cs;
  const int imax = std::min(max + 3, 9);
  cs.push_back({"pi.cell", "pistol generating polynomials match the triangle entries, i <= " + std::to_string(imax),
                [imax] {
                  for (int i = 1; i <= imax; ++i) {
                    const SeidelTriangle g = g_triangle(i), h = h_triangle(i);
                    for (int j = 1; j <= (i + 1) / 2; ++j) {
                      if (pistol_gen_poly(i, j, false) != g.at(i, j)) return fail("g cell " + std::to_string(i) + "," + std::to_string(j));
                      if (pistol_gen_poly(i, j, true) != h.at(i, j)) return fail("h cell " + std::to_string(i) + "," + std::to_string(j));
                    }
                  }
                  return ok("both variants");
                }});
  const int ntot = std::min(max, 6);
  cs.push_back({"pi.total", "charge generating functions give G_{2n+2} and H_{2n+1}, n <= " + std::to_string(ntot), [ntot] {
                  for (int n = 1; n <= ntot; ++n) {
                    if (total_gen_poly(n, false) != genocchi(n + 1)) return fail("weak n=" + std::to_string(n));
                    if (total_gen_poly(n, true) != median_genocchi(n + 1)) return fail("strict n=" + std::to_string(n));
                  }
                  return ok("n <= " + std::to_string(ntot));
                }});
  const int ktr = std::min(max, 6);
  cs.push_back({"pi.trunc", "truncated pistols reproduce the c and d entries, l <= k <= " + std::to_string(ktr), [ktr] {
                  const PolyMatrix C = c_table(ktr + 1), D = d_table(ktr + 1);
                  for (int k = 0; k <= ktr; ++k)
                    for (int l = 0; l <= k; ++l) {
                      if (truncated_gen_poly(k, l, false) != C.at(k + 1, l + 1)) return fail("c k=" + std::to_string(k) + " l=" + std::to_string(l));
                      if (truncated_gen_poly(k, l, true) != D.at(k + 1, l + 1)) return fail("d k=" + std::to_string(k) + " l=" + std::to_string(l));
                    }
                  return ok("both variants");
                }});
  cs.push_back({"pi.count", "pistol counts equal G_{2n+2}(1), n <= " + std::to_string(ntot), [ntot] {
                  for (int n = 1; n <= ntot; ++n) {
                    const auto all = enumerate_pistols(2 * n, false);
                    if (Int(all.size()) != genocchi(n + 1).eval_at_one()) return fail("n=" + std::to_string(n));
                  }
                  return ok(std::to_string(enumerate_pistols(2 * ntot, false).size()) + " pistols at n=" + std::to_string(ntot));
                }});
  return cs;
}

// ---- perms ----

inline Checks perms_checks(int max) {
  Checks cs;
  cs.push_back({"pe.worked", "worked inversion-table and pipeline examples", [] {
                  const Permutation s1{{8, 3, 9, 4, 5, 1, 6, 2, 7}};
                  if (inversion_table(s1).values != std::vector<int>{0, 0, 2, 1, 2, 0, 4, 1, 6}) return fail("table of 839451627");
                  if (inv_stat(s1) != 20) return fail("inv of 839451627");
                  const Pistol p{{1, 1, 2, 1, 1, 1, 4, 3}, false, 0};
                  if (pistol_to_perm(p).images != std::vector<int>{4, 3, 6, 2, 8, 7, 9, 1, 5}) return fail("pipeline image");
                  if (perm_from_table(SubexceedantFn{{0, 0, 2, 0, 4, 4, 6, 0, 4}}).images !=
                      std::vector<int>{4, 3, 6, 2, 8, 7, 9, 1, 5})
                    return fail("table decode");
                  return ok("3 examples");
                }});
  const int nr = std::min(max, 6);
  cs.push_back({"pe.roundtrip", "perm_from_table inverts inversion_table on all of S_" + std::to_string(nr), [nr] {
                  std::vector<int> v(static_cast<size_t>(nr));
                  for (int i = 0; i < nr; ++i) v[static_cast<size_t>(i)] = i + 1;
                  do {
                    const Permutation s{v};
                    if (perm_from_table(inversion_table(s)).images != s.images) return fail("roundtrip");
                    int direct = 0;
                    for (int i = 0; i < nr; ++i)
                      for (int j = i + 1; j < nr; ++j)
                        if (v[static_cast<size_t>(i)] > v[static_cast<size_t>(j)]) ++direct;
                    if (direct != inv_stat(s)) return fail("inv count");
                  } while (std::next_permutation(v.begin(), v.end()));
                  return ok("all permutations");
                }});
  const int nb = std::min(max, 5);
  cs.push_back({"pe.bijection", "pistol-to-permutation is a bijection onto F with 2*ch + n = inv, n <= " + std::to_string(nb),
                [nb] {
                  for (int n = 1; n <= nb; ++n) {
                    std::vector<Permutation> mapped;
                    for (const Pistol& p : enumerate_pistols(2 * n, false)) {
                      const Permutation s = pistol_to_perm(p);
                      if (2 * charge(p) + n != inv_stat(s)) return fail("transfer n=" + std::to_string(n));
                      mapped.push_back(s);
                    }
                    std::sort(mapped.begin(), mapped.end());
                    if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end()) return fail("not injective");
                    if (mapped != enumerate_F(2 * n + 1)) return fail("image n=" + std::to_string(n));
                  }
                  return ok("n <= " + std::to_string(nb));
                }});
  cs.push_back({"pe.genocchi", "alternating permutations reproduce G_{2n+2}, n <= " + std::to_string(nb), [nb] {
                  for (int n = 1; n <= nb; ++n)
                    if (genocchi_via_perms(n) != genocchi(n + 1)) return fail("n=" + std::to_string(n));
                  return ok("n <= " + std::to_string(nb));
                }});
  const int ne = std::min(max, 6);
  cs.push_back({"pe.euler", "qeuler agrees with the up-down enumeration, n <= " + std::to_string(ne), [ne] {
                  for (int n = 0; n <= ne; ++n)
                    if (qeuler(n) != updown_gen_poly(2 * n)) return fail("n=" + std::to_string(n));
                  const auto ref = reference::euler_at_one();
                  for (int n = 0; n <= std::min<int>(ne, static_cast<int>(ref.size()) - 1); ++n)
                    if (qeuler(n).eval_at_one() != ref[static_cast<size_t>(n)]) return fail("q=1 n=" + std::to_string(n));
                  return ok("n <= " + std::to_string(ne));
                }});
  return cs;
}

// ---- matrix ----

inline Checks matrix_checks(int max) {
  Checks cs;
  const int ninv = std::min(max, 10);
  cs.push_back({"mx.inverse", "inverse times matrix is the identity in both orders, size " + std::to_string(ninv), [ninv] {
                  const PolyMatrix G = build_Gq(ninv), H = build_Hq(ninv);
                  const PolyMatrix BG = invert_unit_lower(G), BH = invert_unit_lower(H);
                  if (!(G * BG).is_identity() || !(BG * G).is_identity()) return fail("G_q");
                  if (!(H * BH).is_identity() || !(BH * H).is_identity()) return fail("H_q");
                  return ok("G_q and H_q");
                }});
  cs.push_back({"mx.tables", "c and d entries match the reference tables for i <= 4", [] {
                  const PolyMatrix C = c_table(4), D = d_table(4);
                  for (const auto& e : reference::c_entries_4())
                    if (C.at(e.i, e.j) != e.value) return fail("c(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")");
                  for (const auto& e : reference::d_entries_4())
                    if (D.at(e.i, e.j) != e.value) return fail("d(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")");
                  return ok("20 entries");
                }});
  const int ndet = std::min(max, 7);
  cs.push_back({"mx.det", "determinant formulas match the inversion route, l <= k <= " + std::to_string(ndet), [ndet] {
                  const PolyMatrix C = c_table(ndet), D = d_table(ndet);
                  for (int k = 1; k <= ndet; ++k)
                    for (int l = 1; l <= k; ++l) {
                      if (c_entry_via_det(k, l) != C.at(k, l)) return fail("c k=" + std::to_string(k) + " l=" + std::to_string(l));
                      if (d_entry_via_det(k, l) != D.at(k, l)) return fail("d k=" + std::to_string(k) + " l=" + std::to_string(l));
                    }
                  return ok("both families");
                }});
  cs.push_back({"mx.minor", "connected-minor formula matches forward substitution, k <= n <= " + std::to_string(ndet),
                [ndet] {
                  const PolyMatrix G = build_Gq(ndet), H = build_Hq(ndet);
                  const PolyMatrix BG = invert_unit_lower(G), BH = invert_unit_lower(H);
                  for (int n = 1; n <= ndet; ++n)
                    for (int k = 1; k <= n; ++k) {
                      if (inverse_entry_via_minor(G, n, k) != BG.at(n, k)) return fail("G n=" + std::to_string(n));
                      if (inverse_entry_via_minor(H, n, k) != BH.at(n, k)) return fail("H n=" + std::to_string(n));
                    }
                  return ok("both matrices");
                }});
  const int ng = std::min(max + 2, 8);
  cs.push_back({"mx.genocchi", "c(n,1) = G_{2n}, n <= " + std::to_string(ng), [ng] {
                  const PolyMatrix C = c_table(ng);
                  for (int n = 1; n <= ng; ++n)
                    if (C.at(n, 1) != genocchi(n)) return fail("n=" + std::to_string(n));
                  return ok("n <= " + std::to_string(ng));
                }});
  cs.push_back({"mx.median", "d(n,1) = H_{2n-1}, n <= " + std::to_string(ng) + " (index shifted down by one from H_{2n+1})",
                [ng] {
                  const PolyMatrix D = d_table(ng);
                  for (int n = 2; n <= ng; ++n)
                    if (D.at(n, 1) != median_genocchi(n)) return fail("n=" + std::to_string(n));
                  return ok("offset H_{2n-1} confirmed for n <= " + std::to_string(ng));
                }});
  cs.push_back({"mx.qbinom", "q-binomial symmetry and q = 1 specialization, m <= 12", [] {
                  for (int m = 0; m <= 12; ++m) {
                    Int binom = 1;
                    for (int n = 0; n <= m; ++n) {
                      if (qbinom(m, n) != qbinom(m, m - n)) return fail("symmetry " + std::to_string(m) + "," + std::to_string(n));
                      if (qbinom(m, n).eval_at_one() != binom) return fail("q=1 " + std::to_string(m) + "," + std::to_string(n));
                      binom = binom * (m - n) / (n + 1);
                    }
                  }
                  return ok("m <= 12");
                }});
  cs.push_back({"mx.poch", "shifted-factorial expansion equals the explicit product, n <= 10", [] {
                  for (int n = 0; n <= 10; ++n)
                    if (pochhammer_x(n) != pochhammer_x_by_product(n)) return fail("n=" + std::to_string(n));
                  return ok("n <= 10");
                }});
  cs.push_back({"mx.det2", "Leibniz and fraction-free determinants agree on random matrices", [] {
                  std::mt19937 rng(0xC0FFEE);
                  std::uniform_int_distribution<int> coeff(-9, 9), deg(0, 3), size(1, 5);
                  for (int trial = 0; trial < 50; ++trial) {
                    const int n = size(rng);
                    PolyMatrix m(n);
                    for (int i = 1; i <= n; ++i)
                      for (int j = 1; j <= n; ++j) {
                        std::vector<Int> cs2(static_cast<size_t>(deg(rng)) + 1);
                        for (Int& c : cs2) c = coeff(rng);
                        m.at(i, j) = QPoly(std::move(cs2));
                      }
                    if (det_leibniz(m) != det_bareiss(m)) return fail("trial " + std::to_string(trial));
                  }
                  return ok("50 matrices");
                }});
  return cs;
}

// ---- paths ----

inline Checks paths_checks(int max) {
  Checks cs;
  const int kb = std::min(max, 6);
  cs.push_back({"pa.weights", "path-family area polynomials equal the c and d entries, l <= k <= " + std::to_string(kb),
                [kb] {
                  const PolyMatrix C = c_table(kb), D = d_table(kb);
                  for (int k = 1; k <= kb; ++k)
                    for (int l = 1; l <= k; ++l) {
                      if (config_gen_poly(enumerate_c_configs(k, l)) != C.at(k, l)) return fail("c k=" + std::to_string(k));
                      if (config_gen_poly(enumerate_d_configs(k, l)) != D.at(k, l)) return fail("d k=" + std::to_string(k));
                    }
                  return ok("both families");
                }});
  if (kb >= 6)
    cs.push_back({"pa.count63", "736 c-families and 493 d-families at k=6, l=3", [] {
                    const auto c = enumerate_c_configs(6, 3).size();
                    const auto d = enumerate_d_configs(6, 3).size();
                    if (c != 736) return fail("c count " + std::to_string(c));
                    if (d != 493) return fail("d count " + std::to_string(d));
                    return ok("736 and 493");
                  }});
  cs.push_back({"pa.decode", "configurations decode bijectively to truncated pistols with matching statistic, k <= " +
                                 std::to_string(kb),
                [kb] {
                  for (int k = 2; k <= kb; ++k)
                    for (int l = 1; l <= k; ++l)
                      for (const bool strict : {false, true}) {
                        const auto cfgs = strict ? enumerate_d_configs(k, l) : enumerate_c_configs(k, l);
                        std::vector<Pistol> decoded;
                        for (const PathConfig& c : cfgs) {
                          Pistol p = truncated_pistol_from_config(c);
                          if (truncated_statistic(p) != c.area()) return fail("statistic");
                          if (!is_valid_pistol(p)) return fail("invalid pistol");
                          decoded.push_back(std::move(p));
                        }
                        std::sort(decoded.begin(), decoded.end());
                        const auto expect = enumerate_truncated_pistols(k - 1, l - 1, strict);
                        if (decoded.size() != expect.size()) return fail("count k=" + std::to_string(k));
                        for (size_t t = 0; t < decoded.size(); ++t)
                          if (decoded[t].values != expect[t].values) return fail("image k=" + std::to_string(k));
                      }
                  return ok("k <= " + std::to_string(kb));
                }});
  return cs;
}

// ---- tableaux ----

inline Checks tableaux_checks(int max) {
  Checks cs;
  const int kb = std::min(max, 6);
  cs.push_back({"tb.weights", "filling polynomials equal the c and d entries, l <= k <= " + std::to_string(kb), [kb] {
                  const PolyMatrix C = c_table(kb), D = d_table(kb);
                  for (int k = 1; k <= kb; ++k)
                    for (int l = 1; l <= k; ++l) {
                      if (filling_gen_poly(k, l, FillingVariant::RowStrict) != C.at(k, l)) return fail("row-strict");
                      if (filling_gen_poly(k, l, FillingVariant::ColStrictReverse) != D.at(k, l)) return fail("col-strict");
                    }
                  return ok("both variants");
                }});
  if (kb >= 6)
    cs.push_back({"tb.examples", "the printed example fillings occur at k=6, l=3", [] {
                    const std::vector<std::array<int, 2>> row_ex{{4, 2}, {3, 2}, {4, 1}};
                    const std::vector<std::array<int, 2>> col_ex{{1, 3}, {3, 3}, {1, 5}};
                    bool found_row = false, found_col = false;
                    for (const auto& t : enumerate_fillings(6, 3, FillingVariant::RowStrict))
                      if (t.rows == row_ex) found_row = true;
                    for (const auto& t : enumerate_fillings(6, 3, FillingVariant::ColStrictReverse))
                      if (t.rows == col_ex) found_col = true;
                    if (!found_row) return fail("row-strict example missing");
                    if (!found_col) return fail("col-strict example missing");
                    return ok("both present");
                  }});
  return cs;
}

// ---- triangle ----

inline Checks triangle_checks(int max) {
  Checks cs;
  const int nb = std::min(max, 7);
  cs.push_back({"tr.routes", "all three extraction routes agree, n <= " + std::to_string(nb), [nb] {
                  for (int n = 2; n <= nb; ++n) {
                    const auto a = k_row(n, KRoute::CSeries), b = k_row(n, KRoute::DSeries), c = k_row(n, KRoute::Corollary3);
                    if (a.entries != b.entries || a.entries != c.entries) return fail("n=" + std::to_string(n));
                  }
                  return ok("n <= " + std::to_string(nb));
                }});
  cs.push_back({"tr.boundary", "k(n,1) = G_{2n} and k(n,n-1) = H_{2n-1}, n <= " + std::to_string(nb), [nb] {
                  for (int n = 2; n <= nb; ++n) {
                    const auto row = k_row(n, KRoute::Corollary3);
                    if (row.entry(1) != genocchi(n)) return fail("G n=" + std::to_string(n));
                    if (row.entry(n - 1) != median_genocchi(n)) return fail("H n=" + std::to_string(n));
                  }
                  return ok("n <= " + std::to_string(nb));
                }});
  cs.push_back({"tr.printed", "k(3,*) and k(4,*) match the printed polynomials", [] {
                  if (k_row(3, KRoute::Corollary3).entries != reference::k_row3()) return fail("row 3");
                  const auto row4 = k_row(4, KRoute::Corollary3);
                  const auto factors = reference::k_row4_factors();
                  for (int i = 1; i <= 3; ++i)
                    if (row4.entry(i) != reference::product(factors[static_cast<size_t>(i - 1)]))
                      return fail("row 4 entry " + std::to_string(i));
                  return ok("rows 3 and 4");
                }});
  const int nq = std::min(max, 6);
  cs.push_back({"tr.q1", "integer triangle rows and row sums at q = 1, n <= " + std::to_string(nq), [nq] {
                  const auto ref = reference::k_triangle_at_one();
                  const auto sums = reference::euler_at_one();
                  for (int n = 2; n <= nq; ++n) {
                    const auto row = k_row(n, KRoute::Corollary3);
                    Int sum = 0;
                    for (int i = 1; i <= n - 1; ++i) {
                      if (row.entry(i).eval_at_one() != ref[static_cast<size_t>(n - 2)][static_cast<size_t>(i - 1)])
                        return fail("entry n=" + std::to_string(n) + " i=" + std::to_string(i));
                      sum += row.entry(i).eval_at_one();
                    }
                    if (sum != sums[static_cast<size_t>(n - 1)]) return fail("sum n=" + std::to_string(n));
                  }
                  std::string witness = "rows 2.." + std::to_string(nq);
                  if (nq >= 6) witness += "; row 6 cells i=2,4 correct the commonly printed 15820/8444";
                  return ok(witness);
                }});
  cs.push_back({"tr.euler", "weighted row sums reproduce the q-secant numbers, n <= " + std::to_string(nb), [nb] {
                  for (int n = 2; n <= nb; ++n)
                    if (euler_refinement(n, KRoute::Corollary3) != qeuler(n - 1)) return fail("n=" + std::to_string(n));
                  return ok("n <= " + std::to_string(nb));
                }});
  const int ns = std::max(2, std::min(max, 4));
  cs.push_back({"tr.stable", "extraction is unchanged when the series carries five extra terms, n <= " + std::to_string(ns),
                [ns] {
                  for (int n = 2; n <= ns; ++n)
                    if (k_row(n, KRoute::CSeries).entries != k_row(n, KRoute::CSeries, 5).entries)
                      return fail("n=" + std::to_string(n));
                  return ok("n <= " + std::to_string(ns));
                }});
  const int nc = std::min(max, 8);
  cs.push_back({"tr.conjecture", "every k(n,i) coefficient is nonnegative, n <= " + std::to_string(nc), [nc] {
                  const auto report = conjecture_scan(nc);
                  if (!report.all_nonnegative) {
                    const auto& v = report.violations.front();
                    return fail("k(" + std::to_string(v.n) + "," + std::to_string(v.i) + ") coefficient of q^" +
                                std::to_string(v.exponent));
                  }
                  return ok(std::to_string(report.rows.size()) + " rows scanned");
                }});
  return cs;
}

inline Checks suite_checks(const std::string& suite, int max) {
  if (suite == "seidel") return seidel_checks(max);
  if (suite == "pistols") return pistols_checks(max);
  if (suite == "perms") return perms_checks(max);
  if (suite == "matrix") return matrix_checks(max);
  if (suite == "paths") return paths_checks(max);
  if (suite == "tableaux") return tableaux_checks(max);
  if (suite == "triangle") return triangle_checks(max);
  if (suite == "all") {
    Checks all;
    for (const char* s : {"seidel", "pistols", "perms", "matrix", "paths", "tableaux", "triangle"}) {
      Checks cs = suite_checks(s, max);
      all.insert(all.end(), std::make_move_iterator(cs.begin()), std::make_move_iterator(cs.end()));
    }
    return all;
  }
  throw std::invalid_argument("unknown verify suite: " + suite);
}

}  // namespace verify_detail

inline std::vector<std::string> verify_suite_names() {
  return {"seidel", "pistols", "perms", "matrix", "paths", "tableaux", "triangle", "all"};
}

/// Run a named invariant suite up to the bound `max`.  Independent checks may
/// run concurrently (`jobs` worker threads); results keep definition order.
inline Report run_verify_suite(const std::string& suite, int max, int jobs = 1) {
  using Clock = std::chrono::steady_clock;
  const auto checks = verify_detail::suite_checks(suite, max);
  Report report;
  report.suite = suite;
  report.checks.resize(checks.size());
  const auto start = Clock::now();
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(checks.size())));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t idx = next.fetch_add(1); idx < checks.size(); idx = next.fetch_add(1)) {
      const auto& check = checks[idx];
      CheckResult r{check.id, check.desc, false, ""};
      try {
        auto [pass, witness] = check.run();
        r.pass = pass;
        r.witness = std::move(witness);
      } catch (const std::exception& e) {
        r.pass = false;
        r.witness = std::string("exception: ") + e.what();
      }
      report.checks[idx] = std::move(r);
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return report;
}

}  // namespace qgen
