#include "permchow/quadratic.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <utility>

namespace permchow {
namespace {

constexpr double kPivotFloor = 1e-12;

using Form = std::array<Complex, 2>;

// Rank-one split M = u v^T of a singular 2x2 matrix via its largest entry.
std::optional<std::pair<Form, Form>> split_rank_one(const std::array<std::array<Complex, 2>, 2>& m) {
  std::size_t p = 0, q = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (std::abs(m[i][j]) > best) {
        best = std::abs(m[i][j]);
        p = i;
        q = j;
      }
  if (best < kPivotFloor) return std::nullopt;
  const Form u{m[0][q], m[1][q]};
  const Form v{m[p][0] / m[p][q], m[p][1] / m[p][q]};
  return std::make_pair(u, v);
}

}  // namespace

Complex BivariateQuadratic::operator()(Complex x0, Complex x1) const {
  return a + b0 * x0 + b1 * x1 + c00 * x0 * x0 + (c01 + c10) * x0 * x1 + c11 * x1 * x1;
}

GeneralDecomposition<Complex> decompose_bivariate_quadratic(const BivariateQuadratic& p) {
  // Same quadratic form with the cross term moved to the upper corner:
  // M(alpha) = [[c00, c01 + c10 + alpha], [-alpha, c11]],
  // det M = alpha^2 + (c01 + c10) alpha + c00 c11.
  const Complex cross = p.c01 + p.c10;
  const Complex root = std::sqrt(cross * cross - 4.0 * p.c00 * p.c11);

  std::optional<std::pair<Form, Form>> factors;
  for (const Complex alpha : {(-cross + root) / 2.0, (-cross - root) / 2.0}) {
    const std::array<std::array<Complex, 2>, 2> m{{{p.c00, cross + alpha}, {-alpha, p.c11}}};
    factors = split_rank_one(m);
    if (factors) break;
  }

  GeneralDecomposition<Complex> g(factors ? 2 : 1, 2, 2);
  g.at(0, 0, 0) = p.b0;
  g.at(0, 0, 1) = p.b1;
  g.constant(0, 0) = p.a;
  g.constant(0, 1) = 1.0;
  if (factors) {
    const auto& [u, v] = *factors;
    g.at(1, 0, 0) = u[0];
    g.at(1, 0, 1) = u[1];
    g.at(1, 1, 0) = v[0];
    g.at(1, 1, 1) = v[1];
  }
  return g;
}

}  // namespace permchow
