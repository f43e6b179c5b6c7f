#pragma once

// The transformation monoid Z_n^Z_n under the two-sided action
// (sigma, gamma) . f = gamma o f o sigma^{-1} of S_n x S_n.

#include <cstdint>
#include <map>
#include <vector>

#include "permchow/function_table.hpp"
#include "permchow/scalar.hpp"

namespace permchow {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

std::uint64_t factorial(std::size_t n);
/// n^n; throws std::overflow_error past kMaxCountN.
std::uint64_t function_count(std::size_t n);

/// Base-n rank: sum_i f(i) n^i.
std::uint64_t lex_fun(const FunctionTable& f);
FunctionTable unrank_fun(std::size_t n, std::uint64_t index);

/// Factorial-number-system rank sum_k c_k k!, c_k = |{i < k : sigma(i) > sigma(k)}|.
std::uint64_t lex_perm(const FunctionTable& sigma);
FunctionTable unrank_perm(std::size_t n, std::uint64_t index);

/// n! lex_perm(sigma) + lex_perm(gamma).
std::uint64_t lex_pair(const FunctionTable& sigma, const FunctionTable& gamma);

/// All of S_n, ordered by lex_perm.
std::vector<FunctionTable> all_permutations(std::size_t n);

/// gamma o f o sigma^{-1}.
FunctionTable act(const FunctionTable& sigma, const FunctionTable& gamma, const FunctionTable& f);

/// Sorted fiber sizes |f^{-1}(j)|, empty fibers dropped.
Partition fiber_partition(const FunctionTable& f);

/// |Aut(f)| = prod_j |f^{-1}(j)|! * prod_s m_s!, m_s = number of targets with
/// fiber size s (s = 0 included).
std::uint64_t stabilizer_order(const FunctionTable& f);

/// |Aut(f)| by testing all (n!)^2 pairs.
std::uint64_t stabilizer_order_brute_force(const FunctionTable& f);

/// Distinct members of the orbit of f, sorted by lex_fun.
std::vector<FunctionTable> orbit(const FunctionTable& f);

bool is_partition_of(const Partition& lambda, std::size_t n);

/// All partitions of n in ascending lexicographic order, so [1,...,1] first
/// and [n] last.
std::vector<Partition> partitions_of(std::size_t n);

/// Blocks of sizes lambda_1 >= lambda_2 >= ... map consecutive domain points to
/// targets 0, 1, 2, ...; in particular g(0) = 0.
FunctionTable canonical_representative(const Partition& lambda);

struct ClassRecord {
  Partition partition;
  FunctionTable representative;
  std::uint64_t orbit_size;
  std::uint64_t stabilizer_order;
};

/// One record per partition of n, in partitions_of order.
std::vector<ClassRecord> enumerate_classes(std::size_t n);

/// Exact number of partitions via Euler's pentagonal-number recurrence.
Integer partition_count(std::size_t n);

/// exp(pi sqrt(2n/3)) / (4 n sqrt(3)).
double hardy_ramanujan_estimate(std::size_t n);

/// A +-1 sign for every InDegIso class of Z_n^Z_n, keyed by fiber partition.
class SignPattern {
public:
  /// Throws std::invalid_argument unless omega covers exactly the partitions
  /// of n with values in {+1, -1}.
  SignPattern(std::size_t n, std::map<Partition, int> omega);

  /// +1 on bijections, -1 elsewhere: the coefficients of 2 Per(A) - prod row sums.
  static SignPattern permanent_contrast(std::size_t n);
  static SignPattern constant(std::size_t n, int sign);

  std::size_t n() const noexcept { return n_; }
  int sign(const Partition& lambda) const;
  int sign_of(const FunctionTable& f) const { return sign(fiber_partition(f)); }
  const std::map<Partition, int>& omega() const noexcept { return omega_; }

private:
  std::size_t n_;
  std::map<Partition, int> omega_;
};

}  // namespace permchow
