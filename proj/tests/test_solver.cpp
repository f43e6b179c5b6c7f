#include <doctest.h>

#include <random>

#include "permchow/solver.hpp"

using namespace permchow;

namespace {

RowStructuredDecomposition<Complex> gaussian_complex(std::size_t rho, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> b(rho * n * n);
  for (auto& x : b) x = Complex(g(rng), 0.0);
  return {rho, n, std::move(b)};
}

}  // namespace

TEST_CASE("config validation") {
  SolverConfig cfg;
  cfg.restarts = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.residual_tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.rho = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK_THROWS_AS(solve(5, TargetSpec::permanent(5), SolverConfig{}), GuardError);
}

TEST_CASE("rank-1 search for 2 Per - prod row sums at n=2") {
  SolverConfig cfg;
  cfg.rho = 1;
  cfg.seed = 1;
  cfg.restarts = 20;
  const auto report = solve(2, TargetSpec::signed_default(2), cfg);
  REQUIRE(report.converged);
  REQUIRE(report.verification);
  CHECK(report.verification->passed());
  CHECK(report.verification->max_error < 10 * cfg.residual_tol);
  // Up to rescaling the two row forms are (a00 - a01) and (a11 - a10).
  const auto b = real_part(report.best);
  CHECK(b.at(0, 0, 1) / b.at(0, 0, 0) == doctest::Approx(-1.0));
  CHECK(b.at(0, 1, 0) / b.at(0, 1, 1) == doctest::Approx(-1.0));
}

TEST_CASE("planted solution is recovered") {
  const auto planted = gaussian_complex(2, 2, 99);
  SolverConfig cfg;
  cfg.rho = 2;
  cfg.seed = 3;
  cfg.restarts = 20;
  const auto report = solve_system(build_planted_system(planted), cfg);
  CHECK(report.converged);
  CHECK(report.best_residual < 1e-10);
  CHECK_FALSE(report.verification.has_value());
  const auto expected = extract_all_coefficients(planted);
  CHECK(verify_against_coefficients(report.best, std::span<const Complex>(expected), 1e-8).passed());
}

TEST_CASE("complex field search") {
  SolverConfig cfg;
  cfg.rho = 1;
  cfg.field = SolverField::Complex;
  cfg.seed = 5;
  cfg.restarts = 20;
  const auto report = solve(2, TargetSpec::signed_default(2), cfg);
  CHECK(report.converged);
  CHECK(report.verification->passed());
}

TEST_CASE("determinism across runs and thread counts") {
  SolverConfig cfg;
  cfg.rho = 2;
  cfg.seed = 42;
  cfg.restarts = 12;
  cfg.max_iters = 60;
  const auto target = TargetSpec::signed_default(3);
  const auto a = solve(3, target, cfg);
  const auto b = solve(3, target, cfg);
  CHECK(a.best == b.best);
  CHECK(a.best_restart == b.best_restart);
  REQUIRE(a.restarts.size() == b.restarts.size());
  for (std::size_t k = 0; k < a.restarts.size(); ++k) CHECK(a.restarts[k].residual == b.restarts[k].residual);

  cfg.threads = 4;
  const auto c = solve(3, target, cfg);
  CHECK(c.best == a.best);
  CHECK(c.restarts.size() == a.restarts.size());
  CHECK(c.best_residual == a.best_residual);
}

TEST_CASE("first converged restart is reported identically in parallel") {
  SolverConfig cfg;
  cfg.rho = 1;
  cfg.seed = 0;
  cfg.restarts = 40;
  const auto seq = solve(2, TargetSpec::signed_default(2), cfg);
  cfg.threads = 8;
  const auto par = solve(2, TargetSpec::signed_default(2), cfg);
  REQUIRE(seq.converged);
  CHECK(par.best_restart == seq.best_restart);
  CHECK(par.restarts.size() == seq.best_restart + 1);
  CHECK(par.best == seq.best);
}

TEST_CASE("reduced-only mode reports full verification separately") {
  SolverConfig cfg;
  cfg.rho = 1;
  cfg.seed = 2;
  cfg.restarts = 5;
  cfg.reduced_only = true;
  const auto report = solve(3, TargetSpec::signed_pattern(SignPattern::constant(3, 1)), cfg);
  CHECK(report.converged);
  REQUIRE(report.verification);
  CHECK(report.verification->checked == 27);
}

TEST_CASE("real_part / to_complex") {
  const auto d = build_glynn<double>(3);
  CHECK(real_part(to_complex(d)) == d);
}
