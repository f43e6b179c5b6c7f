#include "permchow/scalar.hpp"

#include <cstdio>

namespace permchow {

std::string to_string(FieldKind k) {
  switch (k) {
    case FieldKind::Integer: return "int";
    case FieldKind::Rational: return "rational";
    case FieldKind::Complex: return "complex";
  }
  return "unknown";
}

std::string ScalarTraits<double>::str(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string ScalarTraits<Complex>::str(const Complex& x) {
  return "[" + ScalarTraits<double>::str(x.real()) + ", " + ScalarTraits<double>::str(x.imag()) + "]";
}

}  // namespace permchow
