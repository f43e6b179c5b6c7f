#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <type_traits>

#include "permchow/errors.hpp"

namespace permchow {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

enum class FieldKind { Integer, Rational, Complex };

std::string to_string(FieldKind k);

// Scalar traits. Exact fields compare with ==, floating fields with a tolerance.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Integer> {
  static constexpr bool exact = true;
  static constexpr FieldKind kind = FieldKind::Integer;
  static double magnitude(const Integer& x) { return std::fabs(x.get_d()); }
  static std::string str(const Integer& x) { return x.get_str(); }
  /// Divides by d and throws InexactDivision on a nonzero remainder.
  static Integer exact_div(const Integer& x, const Integer& d) {
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    if (r != 0) throw InexactDivision("integer division " + x.get_str() + " / " + d.get_str() + " is not exact");
    return q;
  }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr FieldKind kind = FieldKind::Rational;
  static double magnitude(const Rational& x) { return std::fabs(x.get_d()); }
  static std::string str(const Rational& x) { return x.get_str(); }
  static Rational exact_div(const Rational& x, const Rational& d) { return Rational(x / d); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double magnitude(double x) { return std::fabs(x); }
  static std::string str(double x);
  static double exact_div(double x, double d) { return x / d; }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static constexpr FieldKind kind = FieldKind::Complex;
  static double magnitude(const Complex& x) { return std::abs(x); }
  static std::string str(const Complex& x);
  static Complex exact_div(const Complex& x, const Complex& d) { return x / d; }
};

template <class T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

template <class T>
T pow_int(const T& base, std::size_t e) {
  T r(1);
  for (std::size_t k = 0; k < e; ++k) r *= base;
  return r;
}

template <class T>
T power_of_two(std::size_t e) {
  return pow_int(T(2), e);
}

template <class T>
bool is_zero(const T& x) {
  if constexpr (is_exact_v<T>) {
    return x == 0;
  } else {
    return ScalarTraits<T>::magnitude(x) == 0.0;
  }
}

}  // namespace permchow
