#include <catch2/catch_amalgamated.hpp>

#include <qgenocchi/perms.hpp>
#include <qgenocchi/reference.hpp>
#include <qgenocchi/seidel.hpp>
#include <qgenocchi/triangle.hpp>

using namespace qgen;

TEST_CASE("printed rows") {
  const auto r2 = k_row(2, KRoute::CSeries);
  REQUIRE(r2.entries.size() == 1);
  CHECK(r2.entry(1) == QPoly(1));
  CHECK(k_row(3, KRoute::CSeries).entries == reference::k_row3());
  const auto r4 = k_row(4, KRoute::CSeries);
  const auto factors = reference::k_row4_factors();
  for (int i = 1; i <= 3; ++i) CHECK(r4.entry(i) == reference::product(factors[static_cast<size_t>(i - 1)]));
  CHECK_THROWS_AS(k_row(1), std::invalid_argument);
}

TEST_CASE("routes agree") {
  for (int n = 2; n <= 5; ++n) {
    const auto a = k_row(n, KRoute::CSeries);
    const auto b = k_row(n, KRoute::DSeries);
    const auto c = k_row(n, KRoute::Corollary3);
    INFO("n=" << n);
    CHECK(a.entries == b.entries);
    CHECK(a.entries == c.entries);
  }
}

TEST_CASE("boundary identities") {
  for (int n = 2; n <= 7; ++n) {
    const auto row = k_row(n, KRoute::Corollary3);
    CHECK(row.entry(1) == genocchi(n));
    CHECK(row.entry(n - 1) == median_genocchi(n));
  }
}

TEST_CASE("integer rows at q = 1") {
  const auto ref = reference::k_triangle_at_one();
  for (int n = 2; n <= 6; ++n) {
    const auto row = k_row(n, KRoute::Corollary3);
    for (int i = 1; i <= n - 1; ++i)
      CHECK(row.entry(i).eval_at_one() == ref[static_cast<size_t>(n - 2)][static_cast<size_t>(i - 1)]);
  }
}

TEST_CASE("secant refinement") {
  CHECK(euler_refinement(2) == QPoly(1));
  CHECK(euler_refinement(3) == QPoly::from_coeffs({0, 1, 2, 1, 1}));
  CHECK(euler_refinement(5).eval_at_one() == 1385);
  for (int n = 2; n <= 6; ++n) CHECK(euler_refinement(n, KRoute::Corollary3) == qeuler(n - 1));
}

TEST_CASE("truncation stability") {
  for (int n = 2; n <= 4; ++n)
    CHECK(k_row(n, KRoute::CSeries).entries == k_row(n, KRoute::CSeries, 5).entries);
}

TEST_CASE("positivity scan") {
  const auto report = conjecture_scan(6);
  CHECK(report.nmax == 6);
  CHECK(report.all_nonnegative);
  CHECK(report.violations.empty());
  REQUIRE(report.rows.size() == 5);
  const auto sums = reference::euler_at_one();
  for (const auto& row : report.rows) {
    Int sum = 0;
    for (const QPoly& p : row.entries) sum += p.eval_at_one();
    CHECK(sum == sums[static_cast<size_t>(row.n - 1)]);
  }
  CHECK_THROWS_AS(conjecture_scan(1), std::invalid_argument);
}
