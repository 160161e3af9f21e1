#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include <qgenocchi/paths.hpp>
#include <qgenocchi/pistols.hpp>
#include <qgenocchi/qmatrix.hpp>
#include <qgenocchi/tableaux.hpp>

using namespace qgen;

TEST_CASE("small path families") {
  const auto c21 = enumerate_c_configs(2, 1);
  REQUIRE(c21.size() == 1);
  CHECK(c21.front().area() == 0);
  CHECK(c21.front().paths.front().step_string() == "SS");

  const auto c31 = enumerate_c_configs(3, 1);
  REQUIRE(c31.size() == 3);
  std::multiset<int> areas;
  for (const auto& cfg : c31) areas.insert(cfg.area());
  CHECK(areas == std::multiset<int>{0, 1, 2});

  const auto d21 = enumerate_d_configs(2, 1);
  REQUIRE(d21.size() == 1);
  CHECK(d21.front().area() == 0);

  const auto d31 = enumerate_d_configs(3, 1);
  REQUIRE(d31.size() == 2);
  std::multiset<int> dareas;
  for (const auto& cfg : d31) dareas.insert(cfg.area());
  CHECK(dareas == std::multiset<int>{1, 2});

  const auto empty = enumerate_c_configs(4, 4);
  REQUIRE(empty.size() == 1);
  CHECK(empty.front().paths.empty());
  CHECK(empty.front().area() == 0);

  CHECK_THROWS_AS(enumerate_c_configs(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_d_configs(2, 0), std::invalid_argument);
}

TEST_CASE("configurations are vertex-disjoint") {
  for (const auto& cfg : enumerate_c_configs(5, 2)) {
    std::set<std::pair<int, int>> seen;
    for (const LatticePath& p : cfg.paths)
      for (const auto& pt : p.points()) CHECK(seen.insert(pt).second);
  }
}

TEST_CASE("figure-caption counts") {
  CHECK(enumerate_c_configs(6, 3).size() == 736);
  CHECK(enumerate_d_configs(6, 3).size() == 493);
}

TEST_CASE("path weights reproduce the inverse entries") {
  const PolyMatrix C = c_table(6), D = d_table(6);
  for (int k = 1; k <= 6; ++k)
    for (int l = 1; l <= k; ++l) {
      INFO("k=" << k << " l=" << l);
      CHECK(config_gen_poly(enumerate_c_configs(k, l)) == C.at(k, l));
      CHECK(config_gen_poly(enumerate_d_configs(k, l)) == D.at(k, l));
    }
}

TEST_CASE("configurations decode to truncated pistols") {
  for (int k = 2; k <= 6; ++k)
    for (int l = 1; l <= k; ++l)
      for (const bool strict : {false, true}) {
        const auto cfgs = strict ? enumerate_d_configs(k, l) : enumerate_c_configs(k, l);
        std::vector<Pistol> decoded;
        for (const PathConfig& cfg : cfgs) {
          Pistol p = truncated_pistol_from_config(cfg);
          CHECK(is_valid_pistol(p));
          CHECK(truncated_statistic(p) == cfg.area());
          decoded.push_back(std::move(p));
        }
        std::sort(decoded.begin(), decoded.end());
        const auto expect = enumerate_truncated_pistols(k - 1, l - 1, strict);
        REQUIRE(decoded.size() == expect.size());
        for (size_t t = 0; t < decoded.size(); ++t) CHECK(decoded[t].values == expect[t].values);
      }
}

TEST_CASE("small fillings") {
  const auto row21 = enumerate_fillings(2, 1, FillingVariant::RowStrict);
  REQUIRE(row21.size() == 1);
  CHECK(row21.front().rows == std::vector<std::array<int, 2>>{{2, 1}});
  CHECK(row21.front().weight_exponent() == 0);

  const auto col21 = enumerate_fillings(2, 1, FillingVariant::ColStrictReverse);
  REQUIRE(col21.size() == 1);
  CHECK(col21.front().rows == std::vector<std::array<int, 2>>{{1, 1}});
  CHECK(col21.front().weight_exponent() == 0);

  const auto empty = enumerate_fillings(3, 3, FillingVariant::RowStrict);
  REQUIRE(empty.size() == 1);
  CHECK(empty.front().rows.empty());
  CHECK(empty.front().weight_exponent() == 0);

  CHECK_THROWS_AS(enumerate_fillings(2, 3, FillingVariant::RowStrict), std::invalid_argument);
}

TEST_CASE("printed example fillings occur") {
  const std::vector<std::array<int, 2>> row_ex{{4, 2}, {3, 2}, {4, 1}};
  const auto rows = enumerate_fillings(6, 3, FillingVariant::RowStrict);
  CHECK(std::any_of(rows.begin(), rows.end(), [&](const SkewFilling& t) { return t.rows == row_ex; }));
  const std::vector<std::array<int, 2>> col_ex{{1, 3}, {3, 3}, {1, 5}};
  const auto cols = enumerate_fillings(6, 3, FillingVariant::ColStrictReverse);
  CHECK(std::any_of(cols.begin(), cols.end(), [&](const SkewFilling& t) { return t.rows == col_ex; }));
}

TEST_CASE("filling weights reproduce the inverse entries") {
  const PolyMatrix C = c_table(6), D = d_table(6);
  for (int k = 1; k <= 6; ++k)
    for (int l = 1; l <= k; ++l) {
      INFO("k=" << k << " l=" << l);
      CHECK(filling_gen_poly(k, l, FillingVariant::RowStrict) == C.at(k, l));
      CHECK(filling_gen_poly(k, l, FillingVariant::ColStrictReverse) == D.at(k, l));
    }
}
