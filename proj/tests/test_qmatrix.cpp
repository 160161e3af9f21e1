#include <catch2/catch_amalgamated.hpp>

#include <qgenocchi/qmatrix.hpp>
#include <qgenocchi/reference.hpp>
#include <qgenocchi/seidel.hpp>

using namespace qgen;

TEST_CASE("G_q entries") {
  const PolyMatrix g = build_Gq(4);
  CHECK(g.at(1, 1) == QPoly(1));
  CHECK(g.at(2, 1) == QPoly(1));
  CHECK(g.at(3, 2) == QPoly::from_coeffs({1, 1, 1}));
  CHECK(g.at(4, 1).is_zero());  // below the band
  CHECK(g.at(1, 2).is_zero());
  CHECK(g.is_unit_lower_triangular());
}

TEST_CASE("H_q entries") {
  const PolyMatrix h = build_Hq(4);
  CHECK(h.at(1, 1) == QPoly(1));
  CHECK(h.at(2, 1) == QPoly(1));
  CHECK(h.at(3, 2) == QPoly::from_coeffs({1, 1, 1}));
  CHECK(h.at(4, 1) == QPoly(1));  // H_q has no lower band
  CHECK(h.is_unit_lower_triangular());
}

TEST_CASE("inversion requires a unit lower triangular matrix") {
  CHECK(invert_unit_lower(PolyMatrix::identity(3)).is_identity());
  PolyMatrix bad = PolyMatrix::identity(2);
  bad.at(1, 1) = QPoly(2);
  CHECK_THROWS_AS(invert_unit_lower(bad), std::invalid_argument);
  PolyMatrix upper = PolyMatrix::identity(2);
  upper.at(1, 2) = QPoly(1);
  CHECK_THROWS_AS(invert_unit_lower(upper), std::invalid_argument);
}

TEST_CASE("inverse entries match the reference tables") {
  const PolyMatrix C = c_table(4), D = d_table(4);
  for (const auto& e : reference::c_entries_4()) {
    INFO("c(" << e.i << "," << e.j << ")");
    CHECK(C.at(e.i, e.j) == e.value);
  }
  for (const auto& e : reference::d_entries_4()) {
    INFO("d(" << e.i << "," << e.j << ")");
    CHECK(D.at(e.i, e.j) == e.value);
  }
}

TEST_CASE("inverse identity in both orders") {
  for (const bool use_h : {false, true}) {
    const PolyMatrix m = use_h ? build_Hq(10) : build_Gq(10);
    const PolyMatrix b = invert_unit_lower(m);
    CHECK((m * b).is_identity());
    CHECK((b * m).is_identity());
  }
}

TEST_CASE("unsigned inverse entries are nonnegative") {
  const PolyMatrix C = c_table(8), D = d_table(8);
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= i; ++j) {
      CHECK(C.at(i, j).has_nonnegative_coeffs());
      CHECK(D.at(i, j).has_nonnegative_coeffs());
    }
}

TEST_CASE("determinant formulas agree with the inversion route") {
  const PolyMatrix C = c_table(7), D = d_table(7);
  for (int k = 1; k <= 7; ++k)
    for (int l = 1; l <= k; ++l) {
      INFO("k=" << k << " l=" << l);
      CHECK(c_entry_via_det(k, l) == C.at(k, l));
      CHECK(d_entry_via_det(k, l) == D.at(k, l));
    }
  CHECK(c_entry_via_det(5, 5) == QPoly(1));
  CHECK(c_entry_via_det(4, 3) == QPoly::from_coeffs({1, 1, 1}) * QPoly::from_coeffs({1, 0, 1}));
  CHECK(c_entry_via_det(4, 1) == QPoly::from_coeffs({1, 2, 3, 4, 4, 2, 1}));
  CHECK(d_entry_via_det(3, 1) == QPoly::from_coeffs({0, 1, 1}));
  CHECK(d_entry_via_det(6, 3).eval_at_one() == 493);
  CHECK(c_entry_via_det(6, 3).eval_at_one() == 736);
  CHECK_THROWS_AS(c_entry_via_det(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(d_entry_via_det(2, 3), std::invalid_argument);
}

TEST_CASE("connected minor formula") {
  const PolyMatrix G = build_Gq(7), H = build_Hq(7);
  const PolyMatrix BG = invert_unit_lower(G), BH = invert_unit_lower(H);
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) {
      INFO("n=" << n << " k=" << k);
      CHECK(inverse_entry_via_minor(G, n, k) == BG.at(n, k));
      CHECK(inverse_entry_via_minor(H, n, k) == BH.at(n, k));
    }
  CHECK(inverse_entry_via_minor(G, 3, 3) == QPoly(1));
  CHECK(inverse_entry_via_minor(G, 4, 1) == -QPoly::from_coeffs({1, 2, 3, 4, 4, 2, 1}));
  CHECK(inverse_entry_via_minor(H, 3, 1) == QPoly::from_coeffs({0, 1, 1}));
  CHECK_THROWS_AS(inverse_entry_via_minor(G, 2, 3), std::invalid_argument);
}

TEST_CASE("first-column identifications") {
  const PolyMatrix C = c_table(8), D = d_table(8);
  for (int n = 1; n <= 8; ++n) CHECK(C.at(n, 1) == genocchi(n));
  // d(n,1) is the median polynomial with subscript 2n-1, one step lower than
  // the n-th row position would suggest.
  for (int n = 2; n <= 8; ++n) CHECK(D.at(n, 1) == median_genocchi(n));
}
