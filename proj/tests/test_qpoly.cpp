#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <qgenocchi/polymatrix.hpp>
#include <qgenocchi/qpoly.hpp>
#include <qgenocchi/xseries.hpp>

using namespace qgen;

namespace {

QPoly random_poly(std::mt19937& rng, int max_deg = 3, int max_coeff = 9) {
  std::uniform_int_distribution<int> deg(0, max_deg), coeff(-max_coeff, max_coeff);
  std::vector<Int> cs(static_cast<size_t>(deg(rng)) + 1);
  for (Int& c : cs) c = coeff(rng);
  return QPoly(std::move(cs));
}

PolyMatrix random_matrix(std::mt19937& rng, int n) {
  PolyMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.at(i, j) = random_poly(rng);
  return m;
}

}  // namespace

TEST_CASE("ring operations") {
  const QPoly one_q = QPoly::from_coeffs({1, 1});
  CHECK(one_q + QPoly::monomial(1) == QPoly::from_coeffs({1, 2}));
  CHECK(one_q * QPoly() == QPoly());
  CHECK(one_q * QPoly::from_coeffs({1, 0, 1}) == QPoly::from_coeffs({1, 1, 1, 1}));
  CHECK(-one_q == QPoly::from_coeffs({-1, -1}));
  CHECK(one_q - one_q == QPoly());
}

TEST_CASE("canonical form") {
  CHECK(QPoly().is_zero());
  CHECK(QPoly(0).is_zero());
  CHECK(QPoly(std::vector<Int>{Int(0), Int(0)}).is_zero());
  CHECK(QPoly().degree() == -1);
  CHECK(QPoly(std::vector<Int>{Int(3), Int(0)}).degree() == 0);
  CHECK(QPoly().coeffs().empty());
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const QPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("q-integers") {
  CHECK(qint(0) == QPoly());
  CHECK(qint(1) == QPoly(1));
  CHECK(qint(3) == QPoly::from_coeffs({1, 1, 1}));
}

TEST_CASE("Gaussian binomials") {
  CHECK(qbinom(5, 0) == QPoly(1));
  CHECK(qbinom(2, 1) == QPoly::from_coeffs({1, 1}));
  CHECK(qbinom(4, 2) == QPoly::from_coeffs({1, 1, 2, 1, 1}));
  CHECK(qbinom(3, 5) == QPoly());
  CHECK_THROWS_AS(qbinom(-1, 0), std::invalid_argument);
}

TEST_CASE("Gaussian binomial symmetry and specialisation") {
  for (int m = 0; m <= 12; ++m) {
    Int binom = 1;
    for (int n = 0; n <= m; ++n) {
      CHECK(qbinom(m, n) == qbinom(m, m - n));
      CHECK(qbinom(m, n).eval_at_one() == binom);
      binom = binom * (m - n) / (n + 1);
    }
  }
}

TEST_CASE("shifted factorial in x") {
  const XSeries p0 = pochhammer_x(0);
  CHECK(p0.order() == 1);
  CHECK(p0.coeff(0) == QPoly(1));
  const XSeries p1 = pochhammer_x(1);
  CHECK(p1.coeff(0) == QPoly(1));
  CHECK(p1.coeff(1) == QPoly(-1));
  const XSeries p2 = pochhammer_x(2);
  CHECK(p2.coeff(1) == -QPoly::from_coeffs({1, 1}));
  CHECK(p2.coeff(2) == QPoly::monomial(1));
  for (int n = 0; n <= 10; ++n) CHECK(pochhammer_x(n) == pochhammer_x_by_product(n));
}

TEST_CASE("series truncation discipline") {
  XSeries a(3), b(4);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  XSeries s(2);
  s.set_coeff(0, QPoly(1));
  s.set_coeff(1, QPoly(1));
  const XSeries sq = s * s;  // (1+x)^2 truncated at order 2
  CHECK(sq.coeff(0) == QPoly(1));
  CHECK(sq.coeff(1) == QPoly(2));
  CHECK(pochhammer_x(2).with_order(2).coeff(1) == QPoly(-1) - QPoly::monomial(1));
  CHECK_THROWS_AS(s.coeff(2), std::invalid_argument);
}

TEST_CASE("determinant examples") {
  CHECK(det(PolyMatrix::identity(3)) == QPoly(1));
  PolyMatrix m(2);
  m.at(1, 1) = QPoly::from_coeffs({1, 1});
  m.at(1, 2) = QPoly::monomial(1);
  m.at(2, 1) = QPoly(1);
  m.at(2, 2) = QPoly(1);
  CHECK(det(m) == QPoly(1));
  PolyMatrix one(1);
  one.at(1, 1) = qbinom(4, 2);
  CHECK(det(one) == QPoly::from_coeffs({1, 1, 1}) * QPoly::from_coeffs({1, 0, 1}));
}

TEST_CASE("determinant strategies agree") {
  std::mt19937 rng(0xC0FFEE);
  std::uniform_int_distribution<int> size(1, 5);
  for (int t = 0; t < 50; ++t) {
    const PolyMatrix m = random_matrix(rng, size(rng));
    CHECK(det_leibniz(m) == det_bareiss(m));
  }
}

TEST_CASE("determinant edge cases") {
  PolyMatrix swap2(2);
  swap2.at(1, 2) = QPoly(1);
  swap2.at(2, 1) = QPoly(1);
  CHECK(det_bareiss(swap2) == QPoly(-1));  // forces the pivot-search path
  PolyMatrix singular(2);
  singular.at(1, 1) = QPoly::monomial(1);
  singular.at(2, 1) = QPoly::monomial(2);
  CHECK(det_bareiss(singular) == QPoly());
  CHECK_THROWS_AS(det_leibniz(PolyMatrix(10)), std::invalid_argument);
  CHECK(det(PolyMatrix(0)) == QPoly(1));
}

TEST_CASE("exact division") {
  std::mt19937 rng(99);
  for (int t = 0; t < 100; ++t) {
    const QPoly a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    CHECK(QPoly::div_exact(a * b, b) == a);
  }
  CHECK_THROWS_AS(QPoly::div_exact(QPoly::from_coeffs({1, 1}), QPoly::monomial(1)), std::logic_error);
  CHECK_THROWS_AS(QPoly::div_exact(QPoly(1), QPoly()), std::logic_error);
  CHECK(QPoly::from_coeffs({0, 0, 1, 1}).shifted_down_exact(2) == QPoly::from_coeffs({1, 1}));
  CHECK_THROWS_AS(QPoly::from_coeffs({0, 1}).shifted_down_exact(2), std::logic_error);
}

TEST_CASE("evaluation at one") {
  CHECK(QPoly().eval_at_one() == 0);
  CHECK(QPoly::from_coeffs({1, 1, 1}).eval_at_one() == 3);
  CHECK(QPoly::from_coeffs({1, 2, 3, 4, 4, 2, 1}).eval_at_one() == 17);
}

TEST_CASE("text and serialized forms") {
  CHECK(QPoly().str() == "0");
  CHECK(QPoly::from_coeffs({1, 2, 3}).str() == "1 + 2q + 3q^2");
  CHECK(QPoly::from_coeffs({0, 1, 0, 1}).str() == "q + q^3");
  CHECK(QPoly::from_coeffs({-1, 1}).str() == "-1 + q");
  CHECK(QPoly::from_coeffs({1, -2}).str() == "1 - 2q");
  CHECK(QPoly().coeff_strings().empty());
  const std::vector<std::string> expect{"1", "2"};
  CHECK(QPoly::from_coeffs({1, 2}).coeff_strings() == expect);
  const Int big("123456789012345678901234567890");
  CHECK(QPoly(big).coeff_strings().front() == "123456789012345678901234567890");
}
