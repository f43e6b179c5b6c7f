#pragma once

#include "permchow/decomposition.hpp"
#include "permchow/scalar.hpp"

namespace permchow {

/// P(x0, x1) = a + b0 x0 + b1 x1 + [x0 x1] C [x0 x1]^T.
struct BivariateQuadratic {
  Complex a, b0, b1;
  Complex c00, c01, c10, c11;

  Complex operator()(Complex x0, Complex x1) const;
};

/// Rank <= 2 decomposition: (a + b0 x0 + b1 x1) * 1 plus the factorization of
/// the quadratic part after adding a skew term that makes its matrix singular.
/// Terms that vanish are dropped, so the result has rho in {1, 2}.
GeneralDecomposition<Complex> decompose_bivariate_quadratic(const BivariateQuadratic& p);

}  // namespace permchow
