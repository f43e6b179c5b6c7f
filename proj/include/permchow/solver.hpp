#pragma once

// Damped least-squares (Levenberg-Marquardt) search for row-structured
// decompositions of a given rank that satisfy a coefficient system.

#include <cstdint>
#include <optional>
#include <vector>

#include "permchow/decomposition.hpp"
#include "permchow/orbital.hpp"

namespace permchow {

enum class SolverField { Real, Complex };

struct SolverConfig {
  std::size_t rho = 1;
  SolverField field = SolverField::Real;
  std::uint64_t seed = 0;
  std::size_t restarts = 1;
  std::size_t max_iters = 500;  // trial steps per restart
  double residual_tol = 1e-10;  // on max |r_e|
  double initial_damping = 1e-3;
  double damping_increase = 2.0;
  double damping_decrease = 0.5;
  double max_damping = 1e12;  // restart is abandoned beyond this
  double init_stddev = 1.0;
  bool reduced_only = false;
  /// Stop at the first converged restart (lowest index).
  bool stop_at_first_converged = true;
  std::size_t threads = 1;

  void validate() const;
};

struct RestartOutcome {
  double residual;  // max |r_e| at the end of the restart
  std::size_t iterations;
  bool converged;
};

struct SolveReport {
  bool converged = false;
  double best_residual = 0.0;
  std::size_t best_restart = 0;
  std::vector<RestartOutcome> restarts;  // restarts actually counted, in index order
  SolverField field = SolverField::Real;
  /// Imaginary parts are zero for the real field.
  RowStructuredDecomposition<Complex> best{1, 1};
  /// Independent check of the best candidate against the target polynomial,
  /// at tolerance 10 * residual_tol. Absent for planted systems.
  std::optional<VerifyReport> verification;
};

/// Runs cfg.restarts independent LM restarts on the system. Restart k draws its
/// Gaussian start from seed + k. The reported best is the minimum-residual
/// restart, ties to the lowest index; with stop_at_first_converged only
/// restarts 0..k (k the first converged) are counted, so the result does not
/// depend on cfg.threads.
SolveReport solve_system(const CoefficientSystem& system, const SolverConfig& cfg);

/// Solves the full system for the target (or the reduced system when
/// cfg.reduced_only) and verifies the best candidate against the target.
SolveReport solve(std::size_t n, const TargetSpec& target, const SolverConfig& cfg);

RowStructuredDecomposition<double> real_part(const RowStructuredDecomposition<Complex>& b);
RowStructuredDecomposition<Complex> to_complex(const RowStructuredDecomposition<double>& b);

}  // namespace permchow
