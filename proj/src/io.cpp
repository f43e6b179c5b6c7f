#include "permchow/io.hpp"

#include <fstream>
#include <sstream>

#include "permchow/errors.hpp"

namespace permchow {
namespace {

bool is_decimal_integer(const std::string& s) {
  std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') return false;
  return true;
}

std::size_t require_size(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() <= 0)
    throw ParseError(std::string("\"") + key + "\" must be a positive integer");
  return doc[key].get<std::size_t>();
}

template <class T, class Parse>
Matrix<T> parse_entries(const json& rows, std::size_t n, Parse parse) {
  if (!rows.is_array() || rows.size() != n) throw ParseError("\"entries\" must be an array of n rows");
  std::vector<T> flat;
  flat.reserve(n * n);
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != n) throw ParseError("each matrix row must have n entries");
    for (const json& v : row) flat.push_back(parse(v));
  }
  return Matrix<T>(n, std::move(flat));
}

template <class T, class Parse>
RowStructuredDecomposition<T> parse_hypermatrix(const json& b, std::size_t rho, std::size_t n, Parse parse) {
  if (!b.is_array() || b.size() != rho) throw ParseError("\"B\" must have rho slices");
  std::vector<T> flat;
  flat.reserve(rho * n * n);
  for (const json& slice : b) {
    if (!slice.is_array() || slice.size() != n) throw ParseError("each B slice must have n rows");
    for (const json& row : slice) {
      if (!row.is_array() || row.size() != n) throw ParseError("each B row must have n entries");
      for (const json& v : row) flat.push_back(parse(v));
    }
  }
  return RowStructuredDecomposition<T>(rho, n, std::move(flat));
}

}  // namespace

Integer parse_integer(const json& v) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (is_decimal_integer(s)) return Integer(s[0] == '+' ? s.substr(1) : s, 10);
  }
  throw ParseError("expected an integer, got " + v.dump());
}

Rational parse_rational(const json& v) {
  if (v.is_number_integer()) return Rational(parse_integer(v));
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(v));
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (is_decimal_integer(num) && is_decimal_integer(den) && den[0] != '-') {
      Rational q(Integer(num[0] == '+' ? num.substr(1) : num, 10), Integer(den[0] == '+' ? den.substr(1) : den, 10));
      if (q.get_den() == 0) throw ParseError("zero denominator in " + s);
      q.canonicalize();
      return q;
    }
  }
  throw ParseError("expected a rational \"p/q\", got " + v.dump());
}

double parse_real(const json& v) {
  if (v.is_number()) return v.get<double>();
  throw ParseError("expected a number, got " + v.dump());
}

Complex parse_complex(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw ParseError("expected a complex [re, im] pair, got " + v.dump());
}

json to_json(const Integer& x) { return x.get_str(); }
json to_json(const Rational& x) { return x.get_str(); }
json to_json(double x) { return x; }
json to_json(const Complex& x) { return json::array({x.real(), x.imag()}); }

AnyMatrix matrix_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("matrix document must be a JSON object");
  const std::size_t n = require_size(doc, "n");
  if (!doc.contains("field") || !doc["field"].is_string()) throw ParseError("\"field\" must be a string");
  if (!doc.contains("entries")) throw ParseError("missing \"entries\"");
  const auto field = doc["field"].get<std::string>();
  const json& rows = doc["entries"];
  if (field == "int") return parse_entries<Integer>(rows, n, parse_integer);
  if (field == "rational") return parse_entries<Rational>(rows, n, parse_rational);
  if (field == "complex") return parse_entries<Complex>(rows, n, parse_complex);
  throw ParseError("unknown field \"" + field + "\"");
}

json matrix_to_json(const AnyMatrix& m) {
  return std::visit(
      [](const auto& mat) {
        using T = typename std::decay_t<decltype(mat)>::value_type;
        json rows = json::array();
        for (std::size_t i = 0; i < mat.dim(); ++i) {
          json row = json::array();
          for (const T& x : mat.row(i)) row.push_back(to_json(x));
          rows.push_back(std::move(row));
        }
        return json{{"n", mat.dim()}, {"field", to_string(ScalarTraits<T>::kind)}, {"entries", std::move(rows)}};
      },
      m);
}

AnyDecomposition decomposition_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("decomposition document must be a JSON object");
  const std::size_t n = require_size(doc, "n");
  const std::size_t rho = require_size(doc, "rho");
  if (!doc.contains("field") || !doc["field"].is_string()) throw ParseError("\"field\" must be a string");
  if (!doc.contains("B")) throw ParseError("missing \"B\"");
  const auto field = doc["field"].get<std::string>();
  const json& b = doc["B"];
  if (field == "int") return parse_hypermatrix<Integer>(b, rho, n, parse_integer);
  if (field == "rational") return parse_hypermatrix<Rational>(b, rho, n, parse_rational);
  if (field == "real") return parse_hypermatrix<double>(b, rho, n, parse_real);
  if (field == "complex") return parse_hypermatrix<Complex>(b, rho, n, parse_complex);
  throw ParseError("unknown field \"" + field + "\"");
}

std::string field_name(const AnyDecomposition& d) {
  switch (d.index()) {
    case 0: return "int";
    case 1: return "rational";
    case 2: return "real";
    default: return "complex";
  }
}

json decomposition_to_json(const AnyDecomposition& d) {
  json b = std::visit(
      [](const auto& dec) {
        json slices = json::array();
        for (std::size_t u = 0; u < dec.rho(); ++u) {
          json slice = json::array();
          for (std::size_t i = 0; i < dec.n(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < dec.n(); ++j) row.push_back(to_json(dec.at(u, i, j)));
            slice.push_back(std::move(row));
          }
          slices.push_back(std::move(slice));
        }
        return slices;
      },
      d);
  const auto [n, rho] = std::visit([](const auto& dec) { return std::pair{dec.n(), dec.rho()}; }, d);
  return json{{"n", n}, {"rho", rho}, {"field", field_name(d)}, {"B", std::move(b)}};
}

SignPattern sign_pattern_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("sign pattern document must be a JSON object");
  const std::size_t n = require_size(doc, "n");
  if (!doc.contains("omega") || !doc["omega"].is_array()) throw ParseError("\"omega\" must be an array");
  std::map<Partition, int> omega;
  for (const json& entry : doc["omega"]) {
    if (!entry.is_object() || !entry.contains("partition") || !entry.contains("sign"))
      throw ParseError("omega entries need \"partition\" and \"sign\"");
    Partition lambda;
    try {
      lambda = entry["partition"].get<Partition>();
    } catch (const json::exception&) {
      throw ParseError("partition must be an array of integers");
    }
    if (!entry["sign"].is_number_integer()) throw ParseError("sign must be +1 or -1");
    if (!is_partition_of(lambda, n)) throw ParseError("not a partition of n: " + entry["partition"].dump());
    if (!omega.emplace(std::move(lambda), entry["sign"].get<int>()).second)
      throw ParseError("duplicate partition in sign pattern");
  }
  try {
    return SignPattern(n, std::move(omega));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json sign_pattern_to_json(const SignPattern& p) {
  json omega = json::array();
  for (const auto& [lambda, sign] : p.omega()) omega.push_back({{"partition", lambda}, {"sign", sign}});
  return json{{"n", p.n()}, {"omega", std::move(omega)}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace permchow
