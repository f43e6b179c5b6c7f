#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "permchow/scalar.hpp"

namespace permchow {

/// Dense n x n matrix. Entry (i, j) lives at flat index n*i + j.
template <class T>
class Matrix {
public:
  using value_type = T;

  explicit Matrix(std::size_t n) : n_(n), a_(n * n, T(0)) { check_dim(); }

  Matrix(std::size_t n, std::vector<T> entries) : n_(n), a_(std::move(entries)) {
    check_dim();
    if (a_.size() != n_ * n_)
      throw DimensionMismatch("matrix of dimension " + std::to_string(n_) + " needs " +
                              std::to_string(n_ * n_) + " entries, got " + std::to_string(a_.size()));
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix ones(std::size_t n) { return Matrix(n, std::vector<T>(n * n, T(1))); }

  std::size_t dim() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[n_ * i + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[n_ * i + j]; }

  std::span<const T> row(std::size_t i) const { return {a_.data() + n_ * i, n_}; }
  std::span<const T> flat() const noexcept { return a_; }

  Matrix transposed() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Entry (i, j) moves to (row_perm[i], col_perm[j]).
  Matrix permuted(std::span<const int> row_perm, std::span<const int> col_perm) const {
    if (row_perm.size() != n_ || col_perm.size() != n_) throw DimensionMismatch("permutation length mismatch");
    Matrix p(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) p(row_perm[i], col_perm[j]) = (*this)(i, j);
    return p;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

private:
  void check_dim() const {
    if (n_ == 0) throw std::invalid_argument("matrix dimension must be positive");
  }

  std::size_t n_;
  std::vector<T> a_;
};

/// A matrix over one of the three supported fields, as read from a file.
using AnyMatrix = std::variant<Matrix<Integer>, Matrix<Rational>, Matrix<Complex>>;

template <class T>
Matrix<T> convert_entries(const Matrix<Integer>& m) {
  std::vector<T> out;
  out.reserve(m.dim() * m.dim());
  for (const Integer& x : m.flat()) {
    if constexpr (std::is_same_v<T, Complex> || std::is_same_v<T, double>)
      out.emplace_back(x.get_d());
    else
      out.emplace_back(x);
  }
  return Matrix<T>(m.dim(), std::move(out));
}

}  // namespace permchow
