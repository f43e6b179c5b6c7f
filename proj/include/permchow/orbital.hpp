#pragma once

// Coefficient-matching systems for row-structured decompositions: the full
// system (one equation per f in Z_n^Z_n) and the reduced orbital system (one
// orbit-sum and one anchored-representative equation per InDegIso class).

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "permchow/decomposition.hpp"
#include "permchow/monoid.hpp"
#include "permchow/scalar.hpp"

namespace permchow {

enum class EquationKind { Full, OrbitSum, Representative };

/// sum over f in functions of (sum_u prod_i B[u,i,f(i)]) = rhs.
struct CoefficientEquation {
  EquationKind kind;
  std::vector<std::uint64_t> functions;  // lex_fun indices
  Complex rhs;
};

struct CoefficientSystem {
  std::size_t n;
  std::vector<CoefficientEquation> equations;
};

CoefficientSystem build_full_system(std::size_t n, const TargetSpec& target);

/// Orbit-sum equations (rhs = orbit size * omega) for every class, followed by
/// the representative equations (rhs = omega) at canonical_representative.
CoefficientSystem build_reduced_system(std::size_t n, const TargetSpec& target);

/// Full system whose right-hand sides are the coefficients of a given
/// decomposition (a planted solution).
CoefficientSystem build_planted_system(const RowStructuredDecomposition<Complex>& planted);

/// Functions of each equation flattened to digit rows, for repeated evaluation.
class CompiledSystem {
public:
  explicit CompiledSystem(const CoefficientSystem& system);

  std::size_t n() const noexcept { return n_; }
  std::size_t equations() const noexcept { return offsets_.size() - 1; }
  const Complex& rhs(std::size_t e) const { return rhs_[e]; }

  /// Digit rows of the functions in equation e: [begin, end) into digits().
  std::size_t begin(std::size_t e) const { return offsets_[e]; }
  std::size_t end(std::size_t e) const { return offsets_[e + 1]; }
  const int* function(std::size_t k) const { return digits_.data() + k * n_; }

private:
  std::size_t n_;
  std::vector<int> digits_;
  std::vector<std::size_t> offsets_;
  std::vector<Complex> rhs_;
};

template <class T>
using DenseMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

/// r_e = (sum of coefficient sums over the equation's functions) - rhs_e.
template <class T>
std::vector<T> residual(const RowStructuredDecomposition<T>& b, const CompiledSystem& system);
template <class T>
std::vector<T> residual(const RowStructuredDecomposition<T>& b, const CoefficientSystem& system) {
  return residual(b, CompiledSystem(system));
}

/// d r_e / d B[u,i,j], columns in flat B order (u*n + i)*n + j. For complex
/// B this is the holomorphic derivative.
template <class T>
DenseMatrix<T> jacobian(const RowStructuredDecomposition<T>& b, const CompiledSystem& system);
template <class T>
DenseMatrix<T> jacobian(const RowStructuredDecomposition<T>& b, const CoefficientSystem& system) {
  return jacobian(b, CompiledSystem(system));
}

extern template std::vector<double> residual(const RowStructuredDecomposition<double>&, const CompiledSystem&);
extern template std::vector<Complex> residual(const RowStructuredDecomposition<Complex>&, const CompiledSystem&);
extern template DenseMatrix<double> jacobian(const RowStructuredDecomposition<double>&, const CompiledSystem&);
extern template DenseMatrix<Complex> jacobian(const RowStructuredDecomposition<Complex>&, const CompiledSystem&);

/// One factor Z[row, col, slice] of an orbital-matrix entry.
struct OrbitalTriple {
  int row;
  int col;
  std::uint64_t slice;
  friend bool operator==(const OrbitalTriple&, const OrbitalTriple&) = default;
};

/// Entry i*n + j lists the (n!)^2 factors Z[sigma(i), gamma(j), lex_pair(sigma, gamma)]
/// of the orbital matrix entry (i, j), ordered by slice.
std::vector<std::vector<OrbitalTriple>> orbital_exponent_table(std::size_t n);

/// B'[u,i,j] = B[u, sigma^{-1}(i), gamma^{-1}(j)].
template <class T>
RowStructuredDecomposition<T> act_on_decomposition(const RowStructuredDecomposition<T>& b, const FunctionTable& sigma,
                                                   const FunctionTable& gamma) {
  const std::size_t n = b.n();
  if (sigma.size() != n || gamma.size() != n) throw DimensionMismatch("act_on_decomposition: size mismatch");
  RowStructuredDecomposition<T> out(b.rho(), n);
  for (std::size_t u = 0; u < b.rho(); ++u)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.at(u, sigma[i], gamma[j]) = b.at(u, i, j);
  return out;
}

}  // namespace permchow
