#include "permchow/monoid.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include "permchow/errors.hpp"
#include "permchow/guard.hpp"

namespace permchow {

std::uint64_t factorial(std::size_t n) {
  if (n > 20) throw std::overflow_error("factorial: " + std::to_string(n) + "! does not fit in 64 bits");
  std::uint64_t r = 1;
  for (std::size_t k = 2; k <= n; ++k) r *= k;
  return r;
}

std::uint64_t function_count(std::size_t n) {
  if (n > kMaxCountN) throw std::overflow_error("function_count: n=" + std::to_string(n) + " too large");
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < n; ++k) r *= n;
  return r;
}

std::uint64_t lex_fun(const FunctionTable& f) {
  const std::size_t n = f.size();
  if (n > kMaxCountN) throw std::overflow_error("lex_fun: n=" + std::to_string(n) + " too large");
  std::uint64_t index = 0;
  for (std::size_t i = n; i-- > 0;) index = index * n + static_cast<std::uint64_t>(f[i]);
  return index;
}

FunctionTable unrank_fun(std::size_t n, std::uint64_t index) {
  if (n == 0) throw std::invalid_argument("unrank_fun: n must be positive");
  if (index >= function_count(n))
    throw std::out_of_range("unrank_fun: index " + std::to_string(index) + " outside [0, n^n)");
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<int>(index % n);
    index /= n;
  }
  return FunctionTable(std::move(v));
}

std::uint64_t lex_perm(const FunctionTable& sigma) {
  if (!sigma.is_bijective()) throw std::invalid_argument("lex_perm: input is not a permutation");
  const std::size_t n = sigma.size();
  if (n > 20) throw std::overflow_error("lex_perm: n too large");
  std::uint64_t index = 0;
  std::uint64_t weight = 1;  // k!
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) weight *= k;
    std::uint64_t digit = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (sigma[i] > sigma[k]) ++digit;
    index += digit * weight;
  }
  return index;
}

FunctionTable unrank_perm(std::size_t n, std::uint64_t index) {
  if (n == 0) throw std::invalid_argument("unrank_perm: n must be positive");
  if (index >= factorial(n))
    throw std::out_of_range("unrank_perm: index " + std::to_string(index) + " outside [0, n!)");
  std::vector<std::uint64_t> digits(n);
  for (std::size_t k = 1; k <= n; ++k) {
    digits[k - 1] = index % k;  // digit of weight (k-1)! ranges over [0, k)
    index /= k;
  }
  // Position k holds the digit-th largest of the values not used by later positions.
  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<int> v(n);
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t pos = remaining.size() - 1 - digits[k];
    v[k] = remaining[pos];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  return FunctionTable(std::move(v));
}

std::uint64_t lex_pair(const FunctionTable& sigma, const FunctionTable& gamma) {
  if (sigma.size() != gamma.size()) throw DimensionMismatch("lex_pair: permutations of different sizes");
  return factorial(sigma.size()) * lex_perm(sigma) + lex_perm(gamma);
}

std::vector<FunctionTable> all_permutations(std::size_t n) {
  check_guard("all_permutations", n, limits::kNaive);
  const std::uint64_t count = factorial(n);
  std::vector<FunctionTable> out;
  out.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) out.push_back(unrank_perm(n, r));
  return out;
}

FunctionTable act(const FunctionTable& sigma, const FunctionTable& gamma, const FunctionTable& f) {
  if (sigma.size() != f.size() || gamma.size() != f.size()) throw DimensionMismatch("act: size mismatch");
  return gamma.after(f.after(sigma.inverse()));
}

namespace {

std::vector<int> fiber_sizes(const FunctionTable& f) {
  std::vector<int> sizes(f.size(), 0);
  for (int x : f.values()) ++sizes[x];
  return sizes;
}

}  // namespace

Partition fiber_partition(const FunctionTable& f) {
  Partition p;
  for (int s : fiber_sizes(f))
    if (s > 0) p.push_back(s);
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

std::uint64_t stabilizer_order(const FunctionTable& f) {
  const std::size_t n = f.size();
  if (n > kMaxCountN) throw std::overflow_error("stabilizer_order: n too large");
  const std::vector<int> sizes = fiber_sizes(f);
  std::vector<std::size_t> multiplicity(n + 1, 0);
  std::uint64_t order = 1;
  for (int s : sizes) {
    order *= factorial(static_cast<std::size_t>(s));
    ++multiplicity[s];
  }
  for (std::size_t m : multiplicity) order *= factorial(m);
  return order;
}

std::uint64_t stabilizer_order_brute_force(const FunctionTable& f) {
  check_guard("stabilizer_order_brute_force", f.size(), limits::kOrbit);
  const auto perms = all_permutations(f.size());
  std::uint64_t count = 0;
  for (const auto& sigma : perms) {
    const FunctionTable f_sigma_inv = f.after(sigma.inverse());
    for (const auto& gamma : perms)
      if (gamma.after(f_sigma_inv) == f) ++count;
  }
  return count;
}

std::vector<FunctionTable> orbit(const FunctionTable& f) {
  check_guard("orbit", f.size(), limits::kOrbit);
  const auto perms = all_permutations(f.size());
  std::set<std::uint64_t> seen;
  for (const auto& sigma : perms) {
    const FunctionTable f_sigma_inv = f.after(sigma.inverse());
    for (const auto& gamma : perms) seen.insert(lex_fun(gamma.after(f_sigma_inv)));
  }
  std::vector<FunctionTable> out;
  out.reserve(seen.size());
  for (std::uint64_t idx : seen) out.push_back(unrank_fun(f.size(), idx));
  return out;
}

bool is_partition_of(const Partition& lambda, std::size_t n) {
  if (lambda.empty()) return false;
  long total = 0;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (lambda[k] <= 0) return false;
    if (k > 0 && lambda[k] > lambda[k - 1]) return false;
    total += lambda[k];
  }
  return total == static_cast<long>(n);
}

std::vector<Partition> partitions_of(std::size_t n) {
  if (n == 0) throw std::invalid_argument("partitions_of: n must be positive");
  std::vector<Partition> out;
  Partition current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(static_cast<int>(n), static_cast<int>(n));
  std::sort(out.begin(), out.end());
  return out;
}

FunctionTable canonical_representative(const Partition& lambda) {
  long total = 0;
  for (int p : lambda) total += p;
  if (total <= 0 || !is_partition_of(lambda, static_cast<std::size_t>(total)))
    throw std::invalid_argument("canonical_representative: not a partition");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(total));
  for (std::size_t block = 0; block < lambda.size(); ++block)
    for (int k = 0; k < lambda[block]; ++k) v.push_back(static_cast<int>(block));
  return FunctionTable(std::move(v));
}

std::vector<ClassRecord> enumerate_classes(std::size_t n) {
  check_guard("enumerate_classes", n, limits::kClasses);
  if (n > kMaxCountN) throw std::overflow_error("enumerate_classes: n too large for 64-bit counts");
  const std::uint64_t group_order = factorial(n) * factorial(n);
  std::vector<ClassRecord> out;
  for (Partition& lambda : partitions_of(n)) {
    FunctionTable rep = canonical_representative(lambda);
    const std::uint64_t stab = stabilizer_order(rep);
    out.push_back(ClassRecord{std::move(lambda), std::move(rep), group_order / stab, stab});
  }
  return out;
}

Integer partition_count(std::size_t n) {
  std::vector<Integer> p(n + 1, Integer(0));
  p[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Integer acc(0);
    for (std::size_t k = 1;; ++k) {
      const std::size_t g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const std::size_t g2 = k * (3 * k + 1) / 2;
      Integer term = p[m - g1];
      if (g2 <= m) term += p[m - g2];
      if (k % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    p[m] = acc;
  }
  return p[n];
}

double hardy_ramanujan_estimate(std::size_t n) {
  if (n == 0) throw std::invalid_argument("hardy_ramanujan_estimate: n must be positive");
  const double x = static_cast<double>(n);
  return std::exp(std::numbers::pi * std::sqrt(2.0 * x / 3.0)) / (4.0 * x * std::sqrt(3.0));
}

SignPattern::SignPattern(std::size_t n, std::map<Partition, int> omega) : n_(n), omega_(std::move(omega)) {
  const auto parts = partitions_of(n);
  if (omega_.size() != parts.size())
    throw std::invalid_argument("sign pattern must assign a sign to each of the " + std::to_string(parts.size()) +
                                " partitions of " + std::to_string(n));
  for (const auto& lambda : parts) {
    auto it = omega_.find(lambda);
    if (it == omega_.end()) throw std::invalid_argument("sign pattern is missing a partition");
    if (it->second != 1 && it->second != -1) throw std::invalid_argument("sign pattern values must be +1 or -1");
  }
}

SignPattern SignPattern::permanent_contrast(std::size_t n) {
  std::map<Partition, int> omega;
  for (auto& lambda : partitions_of(n)) {
    const bool bijective = lambda.size() == n;
    omega.emplace(std::move(lambda), bijective ? 1 : -1);
  }
  return SignPattern(n, std::move(omega));
}

SignPattern SignPattern::constant(std::size_t n, int sign) {
  std::map<Partition, int> omega;
  for (auto& lambda : partitions_of(n)) omega.emplace(std::move(lambda), sign);
  return SignPattern(n, std::move(omega));
}

int SignPattern::sign(const Partition& lambda) const {
  auto it = omega_.find(lambda);
  if (it == omega_.end()) throw std::invalid_argument("sign pattern has no entry for the given partition");
  return it->second;
}

}  // namespace permchow
