#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include <qgenocchi/pistols.hpp>
#include <qgenocchi/qmatrix.hpp>
#include <qgenocchi/reference.hpp>
#include <qgenocchi/seidel.hpp>

using namespace qgen;

TEST_CASE("charge") {
  CHECK(charge(Pistol{{1, 1}, false, 0}) == 0);
  CHECK(charge(Pistol{{1, 1, 2, 1, 1, 1, 4, 3}, false, 0}) == 6);
  CHECK(charge(Pistol{{1, 1, 2, 2}, false, 0}) == 2);
  CHECK_THROWS_AS(charge(Pistol{{0, 0, 1, 1}, false, 1}), std::invalid_argument);
}

TEST_CASE("enumeration basics") {
  const auto ap2 = enumerate_pistols(2, false);
  REQUIRE(ap2.size() == 1);
  CHECK(ap2.front().values == std::vector<int>{1, 1});

  const auto ap4 = enumerate_pistols(4, false);
  REQUIRE(ap4.size() == 3);
  CHECK(ap4[0].values == std::vector<int>{1, 1, 1, 1});
  CHECK(ap4[1].values == std::vector<int>{1, 1, 2, 1});
  CHECK(ap4[2].values == std::vector<int>{1, 1, 2, 2});

  const auto sap4 = enumerate_pistols(4, true);
  CHECK(Int(sap4.size()) == median_genocchi(3).eval_at_one());
  REQUIRE(sap4.size() == 2);
  CHECK(sap4[0].values == std::vector<int>{1, 1, 2, 1});
  CHECK(sap4[1].values == std::vector<int>{1, 1, 2, 2});

  CHECK_THROWS_AS(enumerate_pistols(0, false), std::invalid_argument);
}

TEST_CASE("enumeration is lexicographic and valid") {
  for (const bool strict : {false, true})
    for (int m = 1; m <= 8; ++m) {
      const auto all = enumerate_pistols(m, strict);
      CHECK(std::is_sorted(all.begin(), all.end()));
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
      for (const Pistol& p : all) CHECK(is_valid_pistol(p));
    }
  CHECK_FALSE(is_valid_pistol(Pistol{{2, 1}, false, 0}));      // p(1) <= 1 violated
  CHECK_FALSE(is_valid_pistol(Pistol{{1, 1, 1, 2}, false, 0}));  // p(3) >= p(4) violated
  CHECK_FALSE(is_valid_pistol(Pistol{{1, 1, 1, 1}, true, 0}));   // strict junction violated
}

TEST_CASE("cell generating polynomials match the triangles") {
  CHECK(pistol_gen_poly(1, 1, false) == QPoly(1));
  CHECK(pistol_gen_poly(4, 2, false) == QPoly::monomial(1));
  CHECK(pistol_gen_poly(5, 3, true) == QPoly::from_coeffs({0, 1, 1}));
  for (int i = 1; i <= 9; ++i) {
    const SeidelTriangle g = g_triangle(i), h = h_triangle(i);
    for (int j = 1; j <= (i + 1) / 2; ++j) {
      INFO("cell (" << i << "," << j << ")");
      CHECK(pistol_gen_poly(i, j, false) == g.at(i, j));
      CHECK(pistol_gen_poly(i, j, true) == h.at(i, j));
    }
  }
  CHECK_THROWS_AS(pistol_gen_poly(4, 3, false), std::invalid_argument);
}

TEST_CASE("total generating polynomials") {
  CHECK(total_gen_poly(1, false) == QPoly(1));
  CHECK(total_gen_poly(2, false) == QPoly::from_coeffs({1, 1, 1}));
  CHECK(total_gen_poly(3, true) == median_genocchi(4));
  for (int n = 1; n <= 6; ++n) {
    CHECK(total_gen_poly(n, false) == genocchi(n + 1));
    CHECK(total_gen_poly(n, true) == median_genocchi(n + 1));
  }
}

TEST_CASE("pistol counts at q = 1") {
  const auto ref = reference::genocchi_at_one();
  for (int n = 1; n <= 6; ++n)
    CHECK(enumerate_pistols(2 * n, false).size() == static_cast<size_t>(ref[static_cast<size_t>(n)]));
  CHECK(enumerate_pistols(12, false).size() == 38227);
}

TEST_CASE("truncated pistols") {
  for (int k = 0; k <= 4; ++k) {
    CHECK(truncated_gen_poly(k, k, false) == QPoly(1));
    CHECK(truncated_gen_poly(k, k, true) == QPoly(1));
  }
  const auto strict20 = enumerate_truncated_pistols(2, 0, true);
  REQUIRE(strict20.size() == 2);
  CHECK(strict20[0].values == std::vector<int>{1, 1, 2, 1});
  CHECK(strict20[1].values == std::vector<int>{1, 1, 2, 2});
  CHECK(truncated_gen_poly(2, 0, true) == QPoly::from_coeffs({0, 1, 1}));
  CHECK_THROWS_AS(truncated_gen_poly(2, 3, false), std::invalid_argument);
}

TEST_CASE("truncated pistols match the inverse-matrix entries") {
  const PolyMatrix C = c_table(7), D = d_table(7);
  for (int k = 0; k <= 6; ++k)
    for (int l = 0; l <= k; ++l) {
      INFO("k=" << k << " l=" << l);
      CHECK(truncated_gen_poly(k, l, false) == C.at(k + 1, l + 1));
      CHECK(truncated_gen_poly(k, l, true) == D.at(k + 1, l + 1));
    }
}

TEST_CASE("column sums of the truncated arrays") {
  // c(5,3) and d(5,3) equal the weighted sums over the reference columns of
  // the truncated arrays at i = 8.
  QPoly c53, d53;
  const auto gp = reference::g_prime_col8();
  const auto dp = reference::d_prime_col8();
  for (int j = 1; j <= 4; ++j) {
    c53 += gp[static_cast<size_t>(j - 1)].shifted_up(j - 1);
    d53 += dp[static_cast<size_t>(j - 1)].shifted_up(j - 1);
  }
  CHECK(c53 == truncated_gen_poly(4, 2, false));
  CHECK(d53 == truncated_gen_poly(4, 2, true));
  CHECK(c53 == c_table(5).at(5, 3));
  CHECK(d53 == d_table(5).at(5, 3));
}

TEST_CASE("truncated statistic reduces to charge when untruncated") {
  for (const Pistol& p : enumerate_pistols(6, false)) CHECK(truncated_statistic(p) == charge(p));
}
