#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "permchow/io.hpp"

using namespace permchow;

TEST_CASE("scalar parsing") {
  CHECK(parse_integer(json(-12)) == -12);
  CHECK(parse_integer(json("123456789012345678901234567890")) == Integer("123456789012345678901234567890", 10));
  CHECK_THROWS_AS(parse_integer(json("12a")), ParseError);
  CHECK_THROWS_AS(parse_integer(json(1.5)), ParseError);

  CHECK(parse_rational(json("6/4")) == Rational(3, 2));
  CHECK(parse_rational(json("-6/4")) == Rational(-3, 2));
  CHECK(parse_rational(json(7)) == 7);
  CHECK(parse_rational(json("7")) == 7);
  CHECK_THROWS_AS(parse_rational(json("1/0")), ParseError);
  CHECK_THROWS_AS(parse_rational(json("6/-4")), ParseError);
  CHECK_THROWS_AS(parse_rational(json("1/2/3")), ParseError);

  CHECK(parse_complex(json::array({1.5, -2})) == Complex(1.5, -2));
  CHECK(parse_complex(json(3)) == Complex(3, 0));
  CHECK_THROWS_AS(parse_complex(json::array({1})), ParseError);
}

TEST_CASE("matrix documents") {
  const auto doc = json::parse(R"({"n": 2, "field": "int", "entries": [[1, "2"], [3, 4]]})");
  const auto m = std::get<Matrix<Integer>>(matrix_from_json(doc));
  CHECK(m(0, 1) == 2);
  CHECK(m(1, 0) == 3);
  // exact values are written as strings
  CHECK(matrix_to_json(m)["entries"][0][0] == "1");

  const auto q = matrix_from_json(json::parse(R"({"n": 1, "field": "rational", "entries": [["-2/6"]]})"));
  CHECK(std::get<Matrix<Rational>>(q)(0, 0) == Rational(-1, 3));

  const auto c = matrix_from_json(json::parse(R"({"n": 1, "field": "complex", "entries": [[[1, 2]]]})"));
  CHECK(std::get<Matrix<Complex>>(c)(0, 0) == Complex(1, 2));

  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"n": 2, "field": "int", "entries": [[1, 2]]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"n": 0, "field": "int", "entries": []})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"n": 1, "field": "quaternion", "entries": [[1]]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"field": "int", "entries": [[1]]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[1, 2]")), ParseError);
}

TEST_CASE("property: documents round-trip exactly") {
  std::mt19937_64 rng(151);
  for (std::size_t n = 1; n <= 5; ++n) {
    const AnyMatrix q = oracle::random_rational_matrix(n, rng);
    CHECK(matrix_from_json(json::parse(matrix_to_json(q).dump())) == q);
    const AnyMatrix c = oracle::random_complex_matrix(n, rng);
    CHECK(matrix_from_json(json::parse(matrix_to_json(c).dump())) == c);

    const AnyDecomposition g = build_glynn<Rational>(n);
    CHECK(decomposition_from_json(json::parse(decomposition_to_json(g).dump())) == g);
    const AnyDecomposition gc = build_glynn<Complex>(n);
    CHECK(decomposition_from_json(json::parse(decomposition_to_json(gc).dump())) == gc);
  }
}

TEST_CASE("decomposition documents") {
  const auto doc = decomposition_to_json(AnyDecomposition(build_ryser<Integer>(2)));
  CHECK(doc["n"] == 2);
  CHECK(doc["rho"] == 3);
  CHECK(doc["field"] == "int");
  CHECK(doc["B"].size() == 3);

  auto bad = doc;
  bad["rho"] = 4;
  CHECK_THROWS_AS(decomposition_from_json(bad), ParseError);
  bad = doc;
  bad["B"][0][1] = json::array({1});
  CHECK_THROWS_AS(decomposition_from_json(bad), ParseError);

  const auto real = decomposition_from_json(json::parse(R"({"n": 1, "rho": 1, "field": "real", "B": [[[0.5]]]})"));
  CHECK(std::get<RowStructuredDecomposition<double>>(real).at(0, 0, 0) == 0.5);
}

TEST_CASE("sign pattern documents") {
  const auto p = SignPattern::permanent_contrast(4);
  const auto back = sign_pattern_from_json(sign_pattern_to_json(p));
  CHECK(back.omega() == p.omega());

  CHECK_THROWS_AS(sign_pattern_from_json(json::parse(R"({"n": 2, "omega": [{"partition": [1, 1], "sign": 1}]})")),
                  ParseError);
  CHECK_THROWS_AS(
      sign_pattern_from_json(json::parse(
          R"({"n": 2, "omega": [{"partition": [1, 1], "sign": 1}, {"partition": [3], "sign": 1}]})")),
      ParseError);
  CHECK_THROWS_AS(
      sign_pattern_from_json(json::parse(
          R"({"n": 2, "omega": [{"partition": [1, 1], "sign": 1}, {"partition": [2], "sign": 2}]})")),
      ParseError);
}
