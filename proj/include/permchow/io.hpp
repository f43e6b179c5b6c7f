#pragma once

// JSON documents shared by the library and the command-line tool.
//
//   matrix:         {"n": 2, "field": "int", "entries": [["1", "2"], ["3", "4"]]}
//   decomposition:  {"n": 2, "rho": 3, "field": "rational", "B": [[[...]]]}
//   sign pattern:   {"n": 3, "omega": [{"partition": [2, 1], "sign": -1}, ...]}
//
// Integers are JSON integers or decimal strings, rationals "p/q" strings,
// complex values [re, im] pairs and real values plain numbers. Exact values
// are always written as strings.

#include <json.hpp>

#include <string>
#include <variant>

#include "permchow/decomposition.hpp"
#include "permchow/matrix.hpp"
#include "permchow/monoid.hpp"

namespace permchow {

using json = nlohmann::json;

using AnyDecomposition =
    std::variant<RowStructuredDecomposition<Integer>, RowStructuredDecomposition<Rational>,
                 RowStructuredDecomposition<double>, RowStructuredDecomposition<Complex>>;

Integer parse_integer(const json& v);
Rational parse_rational(const json& v);
double parse_real(const json& v);
Complex parse_complex(const json& v);

json to_json(const Integer& x);
json to_json(const Rational& x);
json to_json(double x);
json to_json(const Complex& x);

/// Throws ParseError on any schema violation.
AnyMatrix matrix_from_json(const json& doc);
json matrix_to_json(const AnyMatrix& m);

AnyDecomposition decomposition_from_json(const json& doc);
json decomposition_to_json(const AnyDecomposition& d);

SignPattern sign_pattern_from_json(const json& doc);
json sign_pattern_to_json(const SignPattern& p);

/// Reads and parses a JSON file; ParseError on I/O or syntax failure.
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& doc);

std::string field_name(const AnyDecomposition& d);

}  // namespace permchow
