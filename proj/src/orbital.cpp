#include "permchow/orbital.hpp"

#include "permchow/guard.hpp"

namespace permchow {

CoefficientSystem build_full_system(std::size_t n, const TargetSpec& target) {
  check_guard("build_full_system", n, limits::kSystem);
  if (target.n != n) throw DimensionMismatch("build_full_system: target n differs");
  CoefficientSystem sys{n, {}};
  const std::uint64_t count = function_count(n);
  sys.equations.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx)
    sys.equations.push_back(
        {EquationKind::Full, {idx}, Complex(target_coefficient(target, unrank_fun(n, idx)), 0.0)});
  return sys;
}

CoefficientSystem build_reduced_system(std::size_t n, const TargetSpec& target) {
  check_guard("build_reduced_system", n, limits::kSystem);
  if (target.n != n) throw DimensionMismatch("build_reduced_system: target n differs");
  CoefficientSystem sys{n, {}};
  std::vector<CoefficientEquation> representatives;
  for (const Partition& lambda : partitions_of(n)) {
    const FunctionTable rep = canonical_representative(lambda);
    const double omega = target_coefficient(target, rep);
    CoefficientEquation orbit_eq{EquationKind::OrbitSum, {}, {}};
    for (const FunctionTable& g : orbit(rep)) orbit_eq.functions.push_back(lex_fun(g));
    orbit_eq.rhs = Complex(static_cast<double>(orbit_eq.functions.size()) * omega, 0.0);
    sys.equations.push_back(std::move(orbit_eq));
    representatives.push_back({EquationKind::Representative, {lex_fun(rep)}, Complex(omega, 0.0)});
  }
  for (auto& eq : representatives) sys.equations.push_back(std::move(eq));
  return sys;
}

CoefficientSystem build_planted_system(const RowStructuredDecomposition<Complex>& planted) {
  const std::size_t n = planted.n();
  check_guard("build_planted_system", n, limits::kSystem);
  CoefficientSystem sys{n, {}};
  const std::uint64_t count = function_count(n);
  for (std::uint64_t idx = 0; idx < count; ++idx)
    sys.equations.push_back({EquationKind::Full, {idx}, coefficient(planted, unrank_fun(n, idx))});
  return sys;
}

CompiledSystem::CompiledSystem(const CoefficientSystem& system) : n_(system.n) {
  offsets_.push_back(0);
  for (const auto& eq : system.equations) {
    for (std::uint64_t idx : eq.functions) {
      const FunctionTable f = unrank_fun(n_, idx);
      digits_.insert(digits_.end(), f.values().begin(), f.values().end());
    }
    offsets_.push_back(offsets_.back() + eq.functions.size());
    rhs_.push_back(eq.rhs);
  }
}

namespace {

template <class T>
T rhs_as(const Complex& c) {
  if constexpr (std::is_same_v<T, Complex>)
    return c;
  else
    return c.real();
}

}  // namespace

template <class T>
std::vector<T> residual(const RowStructuredDecomposition<T>& b, const CompiledSystem& system) {
  if (b.n() != system.n()) throw DimensionMismatch("residual: decomposition n differs from system n");
  const std::size_t n = b.n();
  std::vector<T> r(system.equations());
  for (std::size_t e = 0; e < system.equations(); ++e) {
    T lhs(0);
    for (std::size_t k = system.begin(e); k < system.end(e); ++k) {
      const int* f = system.function(k);
      for (std::size_t u = 0; u < b.rho(); ++u) {
        T prod(1);
        for (std::size_t i = 0; i < n; ++i) prod *= b.at(u, i, f[i]);
        lhs += prod;
      }
    }
    r[e] = lhs - rhs_as<T>(system.rhs(e));
  }
  return r;
}

template <class T>
DenseMatrix<T> jacobian(const RowStructuredDecomposition<T>& b, const CompiledSystem& system) {
  if (b.n() != system.n()) throw DimensionMismatch("jacobian: decomposition n differs from system n");
  const std::size_t n = b.n();
  DenseMatrix<T> jac = DenseMatrix<T>::Zero(static_cast<Eigen::Index>(system.equations()),
                                            static_cast<Eigen::Index>(b.rho() * n * n));
  std::vector<T> prefix(n + 1), suffix(n + 1);
  for (std::size_t e = 0; e < system.equations(); ++e) {
    for (std::size_t k = system.begin(e); k < system.end(e); ++k) {
      const int* f = system.function(k);
      for (std::size_t u = 0; u < b.rho(); ++u) {
        prefix[0] = T(1);
        for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * b.at(u, i, f[i]);
        suffix[n] = T(1);
        for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * b.at(u, i, f[i]);
        for (std::size_t i = 0; i < n; ++i) {
          const auto col = static_cast<Eigen::Index>((u * n + i) * n + static_cast<std::size_t>(f[i]));
          jac(static_cast<Eigen::Index>(e), col) += prefix[i] * suffix[i + 1];
        }
      }
    }
  }
  return jac;
}

template std::vector<double> residual(const RowStructuredDecomposition<double>&, const CompiledSystem&);
template std::vector<Complex> residual(const RowStructuredDecomposition<Complex>&, const CompiledSystem&);
template DenseMatrix<double> jacobian(const RowStructuredDecomposition<double>&, const CompiledSystem&);
template DenseMatrix<Complex> jacobian(const RowStructuredDecomposition<Complex>&, const CompiledSystem&);

std::vector<std::vector<OrbitalTriple>> orbital_exponent_table(std::size_t n) {
  check_guard("orbital_exponent_table", n, limits::kExponentTable);
  const auto perms = all_permutations(n);  // ordered by lex_perm
  const std::uint64_t nf = perms.size();
  std::vector<std::vector<OrbitalTriple>> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto& entry = table[i * n + j];
      entry.reserve(nf * nf);
      for (std::uint64_t s = 0; s < nf; ++s)
        for (std::uint64_t g = 0; g < nf; ++g)
          entry.push_back({perms[s][i], perms[g][j], nf * s + g});
    }
  return table;
}

}  // namespace permchow
