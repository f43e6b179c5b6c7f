#pragma once

// Chow (product-rank) decompositions.
//
// A row-structured decomposition with coefficient hypermatrix B (rho x n x n)
// represents
//
//   sum_u prod_i ( sum_j B[u,i,j] a_ij )
//
// whose coefficient on the monomial prod_i a_{i,f(i)} is
// sum_u prod_i B[u,i,f(i)] for each f in Z_n^Z_n.

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "permchow/errors.hpp"
#include "permchow/guard.hpp"
#include "permchow/matrix.hpp"
#include "permchow/monoid.hpp"
#include "permchow/scalar.hpp"

namespace permchow {

template <class T>
class RowStructuredDecomposition {
public:
  using value_type = T;

  RowStructuredDecomposition(std::size_t rho, std::size_t n) : rho_(rho), n_(n), b_(rho * n * n, T(0)) { check(); }

  RowStructuredDecomposition(std::size_t rho, std::size_t n, std::vector<T> b)
      : rho_(rho), n_(n), b_(std::move(b)) {
    check();
    if (b_.size() != rho_ * n_ * n_) throw DimensionMismatch("hypermatrix B must have rho*n*n entries");
  }

  std::size_t rho() const noexcept { return rho_; }
  std::size_t n() const noexcept { return n_; }

  T& at(std::size_t u, std::size_t i, std::size_t j) { return b_[(u * n_ + i) * n_ + j]; }
  const T& at(std::size_t u, std::size_t i, std::size_t j) const { return b_[(u * n_ + i) * n_ + j]; }

  std::span<const T> flat() const noexcept { return b_; }
  std::span<T> flat() noexcept { return b_; }

  friend bool operator==(const RowStructuredDecomposition&, const RowStructuredDecomposition&) = default;

private:
  void check() const {
    if (rho_ == 0 || n_ == 0) throw std::invalid_argument("decomposition needs rho >= 1 and n >= 1");
  }

  std::size_t rho_;
  std::size_t n_;
  std::vector<T> b_;
};

/// rho products of d affine forms in N variables; H[u,v,N] is the constant term.
template <class T>
class GeneralDecomposition {
public:
  GeneralDecomposition(std::size_t rho, std::size_t degree, std::size_t vars)
      : rho_(rho), d_(degree), vars_(vars), h_(rho * degree * (vars + 1), T(0)) {}

  std::size_t rho() const noexcept { return rho_; }
  std::size_t degree() const noexcept { return d_; }
  std::size_t variables() const noexcept { return vars_; }

  T& at(std::size_t u, std::size_t v, std::size_t w) { return h_[(u * d_ + v) * (vars_ + 1) + w]; }
  const T& at(std::size_t u, std::size_t v, std::size_t w) const { return h_[(u * d_ + v) * (vars_ + 1) + w]; }
  T& constant(std::size_t u, std::size_t v) { return at(u, v, vars_); }
  const T& constant(std::size_t u, std::size_t v) const { return at(u, v, vars_); }

private:
  std::size_t rho_;
  std::size_t d_;
  std::size_t vars_;
  std::vector<T> h_;
};

/// The polynomial a decomposition is meant to represent.
struct TargetSpec {
  enum class Kind { Permanent, Signed };

  Kind kind;
  std::size_t n;
  std::optional<SignPattern> pattern;

  static TargetSpec permanent(std::size_t n) { return {Kind::Permanent, n, std::nullopt}; }
  static TargetSpec signed_pattern(SignPattern p) {
    const std::size_t n = p.n();
    return {Kind::Signed, n, std::move(p)};
  }
  /// Signed target for 2 Per(A) - prod row sums.
  static TargetSpec signed_default(std::size_t n) { return signed_pattern(SignPattern::permanent_contrast(n)); }
};

/// Permanent: 1 on bijections, 0 elsewhere. Signed: omega[fiber_partition(f)].
int target_coefficient(const TargetSpec& target, const FunctionTable& f);

struct VerifyReport {
  double max_error = 0.0;
  std::size_t violations = 0;
  std::size_t checked = 0;
  double tol = 0.0;
  bool passed() const noexcept { return violations == 0; }
};

template <class T>
T coefficient(const RowStructuredDecomposition<T>& d, const FunctionTable& f) {
  if (f.size() != d.n()) throw DimensionMismatch("coefficient: function size differs from decomposition n");
  T total(0);
  for (std::size_t u = 0; u < d.rho(); ++u) {
    T prod(1);
    for (std::size_t i = 0; i < d.n(); ++i) prod *= d.at(u, i, f[i]);
    total += prod;
  }
  return total;
}

template <class T>
T evaluate(const RowStructuredDecomposition<T>& d, const Matrix<T>& a) {
  if (a.dim() != d.n()) throw DimensionMismatch("evaluate: matrix dimension differs from decomposition n");
  const std::size_t n = d.n();
  T total(0);
  for (std::size_t u = 0; u < d.rho(); ++u) {
    T prod(1);
    for (std::size_t i = 0; i < n; ++i) {
      T s(0);
      for (std::size_t j = 0; j < n; ++j) s += d.at(u, i, j) * a(i, j);
      prod *= s;
    }
    total += prod;
  }
  return total;
}

template <class T>
T evaluate(const GeneralDecomposition<T>& g, std::span<const T> x) {
  if (x.size() != g.variables()) throw DimensionMismatch("evaluate: point dimension differs from variable count");
  T total(0);
  for (std::size_t u = 0; u < g.rho(); ++u) {
    T prod(1);
    for (std::size_t v = 0; v < g.degree(); ++v) {
      T form = g.constant(u, v);
      for (std::size_t w = 0; w < g.variables(); ++w) form += g.at(u, v, w) * x[w];
      prod *= form;
    }
    total += prod;
  }
  return total;
}

/// Coefficients for lex_fun indices in [begin, end).
template <class T>
std::vector<T> extract_coefficients_range(const RowStructuredDecomposition<T>& d, std::uint64_t begin,
                                          std::uint64_t end) {
  const std::size_t n = d.n();
  if (end > function_count(n) || begin > end) throw std::out_of_range("extract_coefficients_range: bad range");
  std::vector<T> out;
  out.reserve(end - begin);
  for (std::uint64_t idx = begin; idx < end; ++idx) out.push_back(coefficient(d, unrank_fun(n, idx)));
  return out;
}

/// All n^n coefficients indexed by lex_fun.
template <class T>
std::vector<T> extract_all_coefficients(const RowStructuredDecomposition<T>& d) {
  check_guard("extract_all_coefficients", d.n(), limits::kExtraction);
  return extract_coefficients_range(d, 0, function_count(d.n()));
}

namespace detail {

template <class T>
void accumulate_error(VerifyReport& report, const T& got, const T& expected) {
  T diff = got;
  diff -= expected;
  const double err = ScalarTraits<T>::magnitude(diff);
  bool bad;
  if constexpr (is_exact_v<T>)
    bad = diff != 0;
  else
    bad = !(err <= report.tol);  // NaN counts as a violation
  if (err > report.max_error || err != err) report.max_error = err;
  if (bad) ++report.violations;
  ++report.checked;
}

}  // namespace detail

/// Checks every coefficient equation against the target. Exact fields ignore
/// tol and demand equality.
template <class T>
VerifyReport verify_against_target(const RowStructuredDecomposition<T>& d, const TargetSpec& target,
                                   double tol = 1e-9) {
  if (target.n != d.n()) throw DimensionMismatch("verify: target n differs from decomposition n");
  check_guard("verify_against_target", d.n(), limits::kExtraction);
  VerifyReport report;
  report.tol = is_exact_v<T> ? 0.0 : tol;
  const std::uint64_t count = function_count(d.n());
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const FunctionTable f = unrank_fun(d.n(), idx);
    detail::accumulate_error(report, coefficient(d, f), T(target_coefficient(target, f)));
  }
  return report;
}

/// Same check against an explicit coefficient table indexed by lex_fun.
template <class T>
VerifyReport verify_against_coefficients(const RowStructuredDecomposition<T>& d, std::span<const T> expected,
                                         double tol = 1e-9) {
  check_guard("verify_against_coefficients", d.n(), limits::kExtraction);
  const std::uint64_t count = function_count(d.n());
  if (expected.size() != count) throw DimensionMismatch("verify: expected table must have n^n entries");
  VerifyReport report;
  report.tol = is_exact_v<T> ? 0.0 : tol;
  for (std::uint64_t idx = 0; idx < count; ++idx)
    detail::accumulate_error(report, coefficient(d, unrank_fun(d.n(), idx)), expected[idx]);
  return report;
}

/// Ryser certificate: one term per nonempty column subset S (term u <-> mask
/// u+1), B[u,i,j] = [j in S], with (-1)^(n-|S|) folded into row 0.
template <class T>
RowStructuredDecomposition<T> build_ryser(std::size_t n) {
  check_guard("build_ryser", n, limits::kCertificate);
  const std::size_t rho = (std::size_t{1} << n) - 1;
  RowStructuredDecomposition<T> d(rho, n);
  for (std::size_t u = 0; u < rho; ++u) {
    const std::uint64_t mask = u + 1;
    const bool negate = (n - std::popcount(mask)) % 2 == 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((mask >> j) & 1u) d.at(u, i, j) = (i == 0 && negate) ? T(-1) : T(1);
  }
  return d;
}

/// Glynn certificate: one term per delta in {+-1}^n with delta_0 = +1
/// (bit j-1 of u set <-> delta_j = -1), B[u,i,j] = delta_j, with
/// (prod delta) / 2^(n-1) folded into row 0.
template <class T>
RowStructuredDecomposition<T> build_glynn(std::size_t n) {
  static_assert(!std::is_same_v<T, Integer>, "the Glynn certificate has non-integer coefficients");
  check_guard("build_glynn", n, limits::kCertificate);
  const std::size_t rho = std::size_t{1} << (n - 1);
  const T scale = T(1) / power_of_two<T>(n - 1);
  RowStructuredDecomposition<T> d(rho, n);
  for (std::size_t u = 0; u < rho; ++u) {
    const bool odd = std::popcount(u) % 2 == 1;
    for (std::size_t j = 0; j < n; ++j) {
      const int delta = (j > 0 && ((u >> (j - 1)) & 1u)) ? -1 : 1;
      for (std::size_t i = 0; i < n; ++i) d.at(u, i, j) = T(delta);
      d.at(u, 0, j) *= odd ? T(-scale) : scale;
    }
  }
  return d;
}

/// The all-ones rank-1 decomposition: prod_i (sum_j a_ij), which represents
/// the constant +1 sign pattern.
template <class T>
RowStructuredDecomposition<T> all_ones(std::size_t n) {
  return RowStructuredDecomposition<T>(1, n, std::vector<T>(n * n, T(1)));
}

}  // namespace permchow
