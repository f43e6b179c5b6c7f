#pragma once

// Exact permanents: the defining n!-term sum, Ryser's and Glynn's subset
// formulas, and the finite-difference pipeline that evaluates the row-product
// form F_A on a two-point grid and applies the Walsh-Hadamard transform.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "permchow/errors.hpp"
#include "permchow/guard.hpp"
#include "permchow/matrix.hpp"
#include "permchow/scalar.hpp"

namespace permchow {

/// Coordinates (x_0, ..., x_{n-1}) plus the finite-difference step h.
template <class T>
struct EvaluationPoint {
  std::vector<T> coords;
  T step = T(1);
};

enum class HadamardScheme {
  Ryser01,    ///< grid {h, 0}^n, divide by h^n
  GlynnPlusMinus,  ///< grid {h, -h}^n, divide by (2h)^n
};

/// Sum over all permutations of the diagonal products.
template <class T>
T per_naive(const Matrix<T>& a, std::size_t limit = limits::kNaive) {
  const std::size_t n = a.dim();
  check_guard("per_naive", n, limit);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  T total(0);
  do {
    T prod(1);
    for (std::size_t i = 0; i < n; ++i) prod *= a(i, sigma[i]);
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

namespace detail {

template <class T>
T ryser_gray(const Matrix<T>& a) {
  const std::size_t n = a.dim();
  std::vector<T> sums(n, T(0));
  T total(0);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < count; ++k) {
    const int col = std::countr_zero(k);
    const std::uint64_t gray = k ^ (k >> 1);
    const bool added = (gray >> col) & 1u;
    for (std::size_t i = 0; i < n; ++i) {
      if (added)
        sums[i] += a(i, col);
      else
        sums[i] -= a(i, col);
    }
    T prod(1);
    for (const T& s : sums) prod *= s;
    // sign (-1)^(n - |S|)
    if ((n - std::popcount(gray)) % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  return total;
}

/// Undivided Glynn sum over delta in {+-1}^n with delta_0 = +1.
template <class T>
T glynn_gray(const Matrix<T>& a) {
  const std::size_t n = a.dim();
  std::vector<T> sums(n, T(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sums[i] += a(i, j);
  std::vector<int> delta(n, 1);
  bool negative = false;
  T total(0);
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t k = 0; k < count; ++k) {
    if (k > 0) {
      const std::size_t col = static_cast<std::size_t>(std::countr_zero(k)) + 1;
      for (std::size_t i = 0; i < n; ++i) {
        T twice = a(i, col);
        twice += a(i, col);
        if (delta[col] > 0)
          sums[i] -= twice;
        else
          sums[i] += twice;
      }
      delta[col] = -delta[col];
      negative = !negative;
    }
    T prod(1);
    for (const T& s : sums) prod *= s;
    if (negative)
      total -= prod;
    else
      total += prod;
  }
  return total;
}

}  // namespace detail

/// Ryser's inclusion-exclusion formula with Gray-code row-sum updates.
template <class T>
T per_ryser(const Matrix<T>& a, std::size_t limit = limits::kSubsetSum) {
  check_guard("per_ryser", a.dim(), limit);
  return detail::ryser_gray(a);
}

/// Glynn's formula: 2^(n-1) signed products, one exact division at the end.
template <class T>
T per_glynn(const Matrix<T>& a, std::size_t limit = limits::kSubsetSum) {
  check_guard("per_glynn", a.dim(), limit);
  return ScalarTraits<T>::exact_div(detail::glynn_gray(a), power_of_two<T>(a.dim() - 1));
}

// Integer overloads take a 128-bit fast path when the row-sum bound allows it.
Integer per_ryser(const Matrix<Integer>& a, std::size_t limit = limits::kSubsetSum);
Integer per_glynn(const Matrix<Integer>& a, std::size_t limit = limits::kSubsetSum);

/// F_A(x) = prod_i (sum_j a_ij x_j).
template <class T>
T eval_product_form(const Matrix<T>& a, std::span<const T> x) {
  const std::size_t n = a.dim();
  if (x.size() != n)
    throw DimensionMismatch("evaluation point has " + std::to_string(x.size()) + " coordinates, expected " +
                            std::to_string(n));
  T prod(1);
  for (std::size_t i = 0; i < n; ++i) {
    T s(0);
    for (std::size_t j = 0; j < n; ++j) s += a(i, j) * x[j];
    prod *= s;
  }
  return prod;
}

template <class T>
T eval_product_form(const Matrix<T>& a, const EvaluationPoint<T>& x) {
  return eval_product_form(a, std::span<const T>(x.coords));
}

/// In-place Walsh-Hadamard transform: v <- ((1,1),(1,-1))^{(x)k} v.
template <class T>
void fwht_inplace(std::span<T> v) {
  const std::size_t len = v.size();
  if (len == 0 || !std::has_single_bit(len))
    throw std::invalid_argument("fwht: length " + std::to_string(len) + " is not a power of two");
  for (std::size_t half = 1; half < len; half <<= 1) {
    for (std::size_t base = 0; base < len; base += 2 * half) {
      for (std::size_t k = base; k < base + half; ++k) {
        T lo = v[k];
        T hi = v[k + half];
        v[k] = lo + hi;
        v[k + half] = lo - hi;
      }
    }
  }
}

template <class T>
std::vector<T> fwht(std::vector<T> v) {
  fwht_inplace(std::span<T>(v));
  return v;
}

/// Grid point for a flattened index: bit b selects coordinate x_{n-1-b},
/// 0 -> h and 1 -> low. Index 0 is (h,...,h), index 2^n-1 is (low,...,low).
template <class T>
void grid_point(std::uint64_t index, const T& h, const T& low, std::span<T> x) {
  const std::size_t n = x.size();
  for (std::size_t b = 0; b < n; ++b) x[n - 1 - b] = ((index >> b) & 1u) ? low : h;
}

/// F_A sampled on the scheme's grid, in the transform's input order.
template <class T>
std::vector<T> hadamard_samples(const Matrix<T>& a, HadamardScheme scheme, const T& h) {
  const std::size_t n = a.dim();
  const T low = scheme == HadamardScheme::Ryser01 ? T(0) : T(-h);
  std::vector<T> samples(std::size_t{1} << n, T(0));
  std::vector<T> x(n, T(0));
  for (std::uint64_t idx = 0; idx < samples.size(); ++idx) {
    grid_point<T>(idx, h, low, x);
    samples[idx] = eval_product_form(a, std::span<const T>(x));
  }
  return samples;
}

/// Permanent as entry [2^n - 1] of the transformed grid samples,
/// divided by h^n (Ryser01) or (2h)^n (GlynnPlusMinus).
template <class T>
T per_via_hadamard(const Matrix<T>& a, HadamardScheme scheme, const T& h = T(1),
                   std::size_t limit = limits::kSubsetSum) {
  if (is_zero(h)) throw std::invalid_argument("per_via_hadamard: step h must be nonzero");
  const std::size_t n = a.dim();
  check_guard("per_via_hadamard", n, limit);
  std::vector<T> samples = hadamard_samples(a, scheme, h);
  fwht_inplace(std::span<T>(samples));
  T step = h;
  if (scheme == HadamardScheme::GlynnPlusMinus) step += h;
  return ScalarTraits<T>::exact_div(samples.back(), pow_int(step, n));
}

/// F_A(x) + (-1)^(n+1) F_A(-x) == 0, exactly or within tol for floating fields.
template <class T>
bool check_parity_dependence(const Matrix<T>& a, std::span<const T> x, double tol = 1e-12) {
  std::vector<T> neg(x.begin(), x.end());
  for (T& c : neg) c = -c;
  const T plus = eval_product_form(a, x);
  const T minus = eval_product_form(a, std::span<const T>(neg));
  T combined = plus;
  if (a.dim() % 2 == 0)
    combined -= minus;
  else
    combined += minus;
  if constexpr (is_exact_v<T>)
    return combined == 0;
  else
    return ScalarTraits<T>::magnitude(combined) < tol;
}

template <class T>
bool check_parity_dependence(const Matrix<T>& a, const EvaluationPoint<T>& x, double tol = 1e-12) {
  return check_parity_dependence(a, std::span<const T>(x.coords), tol);
}

}  // namespace permchow
