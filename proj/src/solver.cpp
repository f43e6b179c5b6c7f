#include "permchow/solver.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "permchow/guard.hpp"

namespace permchow {

void SolverConfig::validate() const {
  if (rho == 0) throw std::invalid_argument("solver: rho must be positive");
  if (restarts == 0) throw std::invalid_argument("solver: restarts must be at least 1");
  if (!(residual_tol > 0.0)) throw std::invalid_argument("solver: residual_tol must be positive");
  if (!(initial_damping > 0.0) || !(damping_increase > 1.0) || !(damping_decrease > 0.0 && damping_decrease < 1.0))
    throw std::invalid_argument("solver: invalid damping parameters");
  if (threads == 0) throw std::invalid_argument("solver: threads must be at least 1");
}

RowStructuredDecomposition<double> real_part(const RowStructuredDecomposition<Complex>& b) {
  std::vector<double> v;
  v.reserve(b.flat().size());
  for (const Complex& c : b.flat()) v.push_back(c.real());
  return {b.rho(), b.n(), std::move(v)};
}

RowStructuredDecomposition<Complex> to_complex(const RowStructuredDecomposition<double>& b) {
  return {b.rho(), b.n(), std::vector<Complex>(b.flat().begin(), b.flat().end())};
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Real least-squares view of the system. Complex B is split into
// [Re B; Im B]; since the residual is holomorphic in B, the real Jacobian is
// [[Re J, -Im J], [Im J, Re J]].
class RealProblem {
public:
  RealProblem(const CompiledSystem& system, std::size_t rho, SolverField field)
      : system_(system), rho_(rho), field_(field), m_(rho * system.n() * system.n()) {}

  std::size_t parameters() const { return field_ == SolverField::Real ? m_ : 2 * m_; }

  VectorXd residual(const VectorXd& theta) const {
    if (field_ == SolverField::Real) {
      const auto r = permchow::residual(real_decomposition(theta), system_);
      return Eigen::Map<const VectorXd>(r.data(), static_cast<Eigen::Index>(r.size()));
    }
    const auto r = permchow::residual(complex_decomposition(theta), system_);
    const auto e = static_cast<Eigen::Index>(r.size());
    VectorXd out(2 * e);
    for (Eigen::Index k = 0; k < e; ++k) {
      out(k) = r[k].real();
      out(e + k) = r[k].imag();
    }
    return out;
  }

  MatrixXd jacobian(const VectorXd& theta) const {
    if (field_ == SolverField::Real) return permchow::jacobian(real_decomposition(theta), system_);
    const DenseMatrix<Complex> j = permchow::jacobian(complex_decomposition(theta), system_);
    const Eigen::Index e = j.rows(), m = j.cols();
    MatrixXd out(2 * e, 2 * m);
    out.topLeftCorner(e, m) = j.real();
    out.topRightCorner(e, m) = -j.imag();
    out.bottomLeftCorner(e, m) = j.imag();
    out.bottomRightCorner(e, m) = j.real();
    return out;
  }

  RowStructuredDecomposition<Complex> decomposition(const VectorXd& theta) const {
    if (field_ == SolverField::Real) return to_complex(real_decomposition(theta));
    return complex_decomposition(theta);
  }

private:
  RowStructuredDecomposition<double> real_decomposition(const VectorXd& theta) const {
    return {rho_, system_.n(), std::vector<double>(theta.data(), theta.data() + m_)};
  }

  RowStructuredDecomposition<Complex> complex_decomposition(const VectorXd& theta) const {
    std::vector<Complex> v(m_);
    for (std::size_t k = 0; k < m_; ++k) v[k] = Complex(theta(k), theta(m_ + k));
    return {rho_, system_.n(), std::move(v)};
  }

  const CompiledSystem& system_;
  std::size_t rho_;
  SolverField field_;
  std::size_t m_;
};

struct RestartResult {
  RestartOutcome outcome;
  VectorXd theta;
};

RestartResult run_restart(const RealProblem& problem, const SolverConfig& cfg, std::size_t index) {
  std::mt19937_64 rng(cfg.seed + index);
  std::normal_distribution<double> normal(0.0, cfg.init_stddev);
  VectorXd theta(problem.parameters());
  for (Eigen::Index k = 0; k < theta.size(); ++k) theta(k) = normal(rng);

  VectorXd r = problem.residual(theta);
  double cost = r.squaredNorm();
  double damping = cfg.initial_damping;
  MatrixXd normal_matrix;
  VectorXd gradient;
  bool fresh = true;  // jacobian must be recomputed
  std::size_t iter = 0;
  for (; iter < cfg.max_iters; ++iter) {
    if (r.lpNorm<Eigen::Infinity>() < cfg.residual_tol) break;
    if (fresh) {
      const MatrixXd jac = problem.jacobian(theta);
      normal_matrix = jac.transpose() * jac;
      gradient = jac.transpose() * r;
      fresh = false;
    }
    MatrixXd lhs = normal_matrix;
    lhs.diagonal().array() += damping;
    const VectorXd step = lhs.ldlt().solve(-gradient);
    const VectorXd trial = theta + step;
    const VectorXd trial_r = problem.residual(trial);
    const double trial_cost = trial_r.squaredNorm();
    if (std::isfinite(trial_cost) && trial_cost < cost) {
      theta = trial;
      r = trial_r;
      cost = trial_cost;
      damping = std::max(damping * cfg.damping_decrease, 1e-15);
      fresh = true;
    } else {
      damping *= cfg.damping_increase;
      if (damping > cfg.max_damping) break;
    }
  }
  const double res = r.lpNorm<Eigen::Infinity>();
  return {{res, iter, res < cfg.residual_tol}, std::move(theta)};
}

}  // namespace

SolveReport solve_system(const CoefficientSystem& system, const SolverConfig& cfg) {
  cfg.validate();
  const CompiledSystem compiled(system);
  const RealProblem problem(compiled, cfg.rho, cfg.field);

  std::vector<std::optional<RestartResult>> results(cfg.restarts);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_converged{cfg.restarts};

  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= cfg.restarts) return;
      if (cfg.stop_at_first_converged && k > first_converged.load()) return;
      results[k] = run_restart(problem, cfg, k);
      if (cfg.stop_at_first_converged && results[k]->outcome.converged) {
        std::size_t cur = first_converged.load();
        while (k < cur && !first_converged.compare_exchange_weak(cur, k)) {
        }
      }
    }
  };

  const std::size_t threads = std::min(cfg.threads, cfg.restarts);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Every index below first_converged was dispensed and has finished.
  const std::size_t counted =
      cfg.stop_at_first_converged ? std::min(cfg.restarts, first_converged.load() + 1) : cfg.restarts;
  SolveReport report;
  report.field = cfg.field;
  report.best_residual = std::numeric_limits<double>::infinity();
  const VectorXd* best_theta = nullptr;
  for (std::size_t k = 0; k < counted; ++k) {
    const RestartResult& res = *results[k];
    report.restarts.push_back(res.outcome);
    const double key = std::isnan(res.outcome.residual) ? std::numeric_limits<double>::infinity()
                                                        : res.outcome.residual;
    if (best_theta == nullptr || key < report.best_residual) {
      report.best_residual = key;
      report.best_restart = k;
      best_theta = &res.theta;
    }
  }
  report.converged = report.best_residual < cfg.residual_tol;
  report.best = problem.decomposition(*best_theta);
  return report;
}

SolveReport solve(std::size_t n, const TargetSpec& target, const SolverConfig& cfg) {
  check_guard("solve", n, limits::kSolve);
  const CoefficientSystem system = cfg.reduced_only ? build_reduced_system(n, target) : build_full_system(n, target);
  SolveReport report = solve_system(system, cfg);
  const double tol = 10.0 * cfg.residual_tol;
  if (cfg.field == SolverField::Real)
    report.verification = verify_against_target(real_part(report.best), target, tol);
  else
    report.verification = verify_against_target(report.best, target, tol);
  return report;
}

}  // namespace permchow
