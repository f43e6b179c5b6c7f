#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "permchow/decomposition.hpp"
#include "permchow/permanent.hpp"

using namespace permchow;

namespace {

bool bijection_indicator(const std::vector<Rational>& coeffs, std::size_t n) {
  for (std::uint64_t idx = 0; idx < coeffs.size(); ++idx) {
    const Rational expected = unrank_fun(n, idx).is_bijective() ? 1 : 0;
    if (coeffs[idx] != expected) return false;
  }
  return true;
}

// sum_f c_f prod_i a_{i,f(i)} computed straight from a coefficient table.
template <class T>
T expand(const std::vector<T>& coeffs, const Matrix<T>& a) {
  const std::size_t n = a.dim();
  T total(0);
  for (std::uint64_t idx = 0; idx < coeffs.size(); ++idx) {
    std::uint64_t rest = idx;
    T mono(1);
    for (std::size_t i = 0; i < n; ++i) {
      mono *= a(i, rest % n);
      rest /= n;
    }
    total += coeffs[idx] * mono;
  }
  return total;
}

}  // namespace

TEST_CASE("coefficient") {
  const auto ones = all_ones<Rational>(3);
  for (std::uint64_t idx = 0; idx < 27; ++idx) CHECK(coefficient(ones, unrank_fun(3, idx)) == 1);

  RowStructuredDecomposition<Integer> diag(1, 2, {Integer(1), Integer(0), Integer(0), Integer(1)});
  CHECK(coefficient(diag, FunctionTable::identity(2)) == 1);
  CHECK(coefficient(diag, FunctionTable({1, 0})) == 0);

  // Glynn at n=3, f = id: four delta vectors, each contributing
  // (prod delta) * delta_0 delta_1 delta_2 / 4 = 1/4.
  CHECK(coefficient(build_glynn<Rational>(3), FunctionTable::identity(3)) == 1);

  CHECK_THROWS_AS(coefficient(diag, FunctionTable::identity(3)), DimensionMismatch);
}

TEST_CASE("evaluate") {
  std::mt19937_64 rng(101);
  const auto a = oracle::random_rational_matrix(4, rng);
  Rational rowprod(1);
  for (std::size_t i = 0; i < 4; ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < 4; ++j) s += a(i, j);
    rowprod *= s;
  }
  CHECK(evaluate(all_ones<Rational>(4), a) == rowprod);
  CHECK(evaluate(build_glynn<Rational>(4), a) == per_naive(a));
  CHECK(evaluate(build_ryser<Rational>(4), a) == per_naive(a));

  GeneralDecomposition<Complex> g(1, 1, 3);
  g.constant(0, 0) = Complex(2.5, -1.0);
  const std::vector<Complex> x{{1, 2}, {3, 4}, {-5, 0}};
  CHECK(evaluate(g, std::span<const Complex>(x)) == Complex(2.5, -1.0));
  CHECK_THROWS_AS(evaluate(g, std::span<const Complex>(std::vector<Complex>(2))), DimensionMismatch);
}

TEST_CASE("extract_all_coefficients") {
  for (const auto& c : extract_all_coefficients(all_ones<Rational>(2))) CHECK(c == 1);

  const auto ryser3 = extract_all_coefficients(build_ryser<Rational>(3));
  CHECK(ryser3.size() == 27);
  CHECK(bijection_indicator(ryser3, 3));

  std::mt19937_64 rng(103);
  std::vector<Rational> b(3 * 4);
  for (auto& x : b) x = oracle::random_rational_matrix(1, rng)(0, 0);
  RowStructuredDecomposition<Rational> d(3, 2, b);
  Rational sum(0);
  for (const auto& c : extract_all_coefficients(d)) sum += c;
  CHECK(sum == evaluate(d, Matrix<Rational>::ones(2)));

  CHECK_THROWS_AS(extract_all_coefficients(all_ones<Rational>(8)), GuardError);
}

TEST_CASE("build_ryser") {
  const auto r1 = build_ryser<Integer>(1);
  CHECK(r1.rho() == 1);
  CHECK(r1.at(0, 0, 0) == 1);
  CHECK(build_ryser<Integer>(3).rho() == 7);
  CHECK(evaluate(build_ryser<Integer>(2), Matrix<Integer>(2, {Integer(1), Integer(2), Integer(3), Integer(4)})) == 10);
}

TEST_CASE("build_glynn") {
  const auto g2 = build_glynn<Rational>(2);
  REQUIRE(g2.rho() == 2);
  // term 0: (1/2)(a00 + a01)(a10 + a11); term 1: -(1/2)(a00 - a01)(a10 - a11)
  const Rational half(1, 2);
  CHECK(g2.at(0, 0, 0) == half);
  CHECK(g2.at(0, 0, 1) == half);
  CHECK(g2.at(0, 1, 0) == 1);
  CHECK(g2.at(0, 1, 1) == 1);
  CHECK(g2.at(1, 0, 0) == -half);
  CHECK(g2.at(1, 0, 1) == half);
  CHECK(g2.at(1, 1, 0) == 1);
  CHECK(g2.at(1, 1, 1) == -1);
  CHECK(bijection_indicator(extract_all_coefficients(g2), 2));

  CHECK(build_glynn<Rational>(3).rho() == 4);
  const auto g4 = extract_all_coefficients(build_glynn<Rational>(4));
  CHECK(g4.size() == 256);
  CHECK(bijection_indicator(g4, 4));
}

TEST_CASE("property: certificate coefficients and ranks") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(bijection_indicator(extract_all_coefficients(build_ryser<Rational>(n)), n));
    CHECK(bijection_indicator(extract_all_coefficients(build_glynn<Rational>(n)), n));
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(build_glynn<Rational>(n).rho() == (std::size_t{1} << (n - 1)));
    CHECK(build_ryser<Integer>(n).rho() == (std::size_t{1} << n) - 1);
  }
}

TEST_CASE("property: evaluation agrees with coefficient expansion") {
  std::mt19937_64 rng(107);
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t rho : {1, 2, 3}) {
      std::vector<Rational> b(rho * n * n);
      for (auto& x : b) x = oracle::random_rational_matrix(1, rng)(0, 0);
      RowStructuredDecomposition<Rational> d(rho, n, b);
      const auto a = oracle::random_rational_matrix(n, rng);
      CHECK(evaluate(d, a) == expand(extract_all_coefficients(d), a));
    }
}

TEST_CASE("target_coefficient") {
  const auto per = TargetSpec::permanent(3);
  CHECK(target_coefficient(per, FunctionTable::identity(3)) == 1);
  CHECK(target_coefficient(per, FunctionTable({1, 1, 0})) == 0);
  const auto sgn = TargetSpec::signed_default(3);
  CHECK(target_coefficient(sgn, FunctionTable({1, 1, 0})) == -1);
  CHECK(target_coefficient(sgn, FunctionTable({2, 1, 0})) == 1);
  const auto plus = TargetSpec::signed_pattern(SignPattern::constant(3, 1));
  for (std::uint64_t idx = 0; idx < 27; ++idx) CHECK(target_coefficient(plus, unrank_fun(3, idx)) == 1);
  CHECK_THROWS_AS(target_coefficient(per, FunctionTable::identity(2)), DimensionMismatch);
}

TEST_CASE("property: signed targets are constant on orbits") {
  std::mt19937_64 rng(109);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::map<Partition, int> omega;
    for (const auto& lambda : partitions_of(n)) omega[lambda] = (rng() & 1u) ? 1 : -1;
    const auto target = TargetSpec::signed_pattern(SignPattern(n, omega));
    for (std::uint64_t idx = 0; idx < function_count(n); ++idx) {
      const auto f = unrank_fun(n, idx);
      const int c = target_coefficient(target, f);
      for (const auto& g : orbit(f)) REQUIRE(target_coefficient(target, g) == c);
    }
  }
}

TEST_CASE("verify_against_target") {
  const auto report = verify_against_target(build_glynn<Rational>(4), TargetSpec::permanent(4));
  CHECK(report.passed());
  CHECK(report.max_error == 0.0);
  CHECK(report.checked == 256);

  CHECK(verify_against_target(all_ones<Integer>(3), TargetSpec::signed_pattern(SignPattern::constant(3, 1))).passed());

  auto broken = build_glynn<Rational>(3);
  broken.at(2, 1, 0) += 1;
  const auto bad = verify_against_target(broken, TargetSpec::permanent(3));
  CHECK_FALSE(bad.passed());
  CHECK(bad.violations >= 1);

  // Floating fields use the tolerance.
  auto approx = build_glynn<Complex>(3);
  approx.at(0, 0, 0) += Complex(1e-12, 0.0);
  CHECK(verify_against_target(approx, TargetSpec::permanent(3), 1e-9).passed());
  CHECK_FALSE(verify_against_target(approx, TargetSpec::permanent(3), 1e-14).passed());
}

TEST_CASE("n=2 closed-form rank-1 decomposition of 2 Per - prod row sums") {
  // (a00 - a01)(a11 - a10) = a00 a11 + a01 a10 - a00 a10 - a01 a11
  RowStructuredDecomposition<Integer> d(1, 2, {Integer(1), Integer(-1), Integer(-1), Integer(1)});
  const auto target = TargetSpec::signed_pattern(SignPattern(2, {{{1, 1}, 1}, {{2}, -1}}));
  const auto report = verify_against_target(d, target);
  CHECK(report.passed());
  CHECK(report.checked == 4);

  std::mt19937_64 rng(113);
  const auto a = oracle::random_int_matrix(2, -9, 9, rng);
  const Integer rowprod = (a(0, 0) + a(0, 1)) * (a(1, 0) + a(1, 1));
  CHECK(evaluate(d, a) == 2 * per_naive(a) - rowprod);
}

TEST_CASE("concurrent extraction over disjoint ranges matches sequential") {
  const auto d = build_glynn<Rational>(4);
  const auto all = extract_all_coefficients(d);
  auto lo = extract_coefficients_range(d, 0, 100);
  const auto hi = extract_coefficients_range(d, 100, 256);
  lo.insert(lo.end(), hi.begin(), hi.end());
  CHECK(lo == all);
  CHECK_THROWS_AS(extract_coefficients_range(d, 10, 300), std::out_of_range);
}
