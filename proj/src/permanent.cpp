#include "permchow/permanent.hpp"

#include <optional>

namespace permchow {
namespace {

using i128 = __int128;

Integer from_i128(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  Integer r = hi;
  r <<= 64;
  r += lo;
  return neg ? Integer(-r) : r;
}

// Machine-word copy of the matrix when every product of n row sums, and the
// sum of 2^n of them, provably fits in a signed 128-bit accumulator.
std::optional<std::vector<std::int64_t>> narrow_entries(const Matrix<Integer>& a) {
  const std::size_t n = a.dim();
  std::vector<std::int64_t> out;
  out.reserve(n * n);
  Integer bound(0);
  for (std::size_t i = 0; i < n; ++i) {
    Integer row(0);
    for (std::size_t j = 0; j < n; ++j) {
      const Integer& x = a(i, j);
      if (!x.fits_slong_p()) return std::nullopt;
      out.push_back(x.get_si());
      row += abs(x);
    }
    if (row > bound) bound = row;
  }
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  if (bits > 62 || bits * n + n + 2 > 126) return std::nullopt;
  return out;
}

i128 ryser_i128(const std::vector<std::int64_t>& a, std::size_t n) {
  std::vector<std::int64_t> sums(n, 0);
  i128 total = 0;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < count; ++k) {
    const int col = std::countr_zero(k);
    const std::uint64_t gray = k ^ (k >> 1);
    const bool added = (gray >> col) & 1u;
    for (std::size_t i = 0; i < n; ++i) sums[i] += added ? a[n * i + col] : -a[n * i + col];
    i128 prod = 1;
    for (std::int64_t s : sums) prod *= s;
    total += ((n - std::popcount(gray)) % 2 == 0) ? prod : -prod;
  }
  return total;
}

i128 glynn_i128(const std::vector<std::int64_t>& a, std::size_t n) {
  std::vector<std::int64_t> sums(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sums[i] += a[n * i + j];
  std::vector<int> delta(n, 1);
  bool negative = false;
  i128 total = 0;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t k = 0; k < count; ++k) {
    if (k > 0) {
      const std::size_t col = static_cast<std::size_t>(std::countr_zero(k)) + 1;
      for (std::size_t i = 0; i < n; ++i) sums[i] -= 2 * delta[col] * a[n * i + col];
      delta[col] = -delta[col];
      negative = !negative;
    }
    i128 prod = 1;
    for (std::int64_t s : sums) prod *= s;
    total += negative ? -prod : prod;
  }
  return total;
}

}  // namespace

Integer per_ryser(const Matrix<Integer>& a, std::size_t limit) {
  check_guard("per_ryser", a.dim(), limit);
  if (auto narrow = narrow_entries(a)) return from_i128(ryser_i128(*narrow, a.dim()));
  return detail::ryser_gray(a);
}

Integer per_glynn(const Matrix<Integer>& a, std::size_t limit) {
  check_guard("per_glynn", a.dim(), limit);
  const Integer divisor = power_of_two<Integer>(a.dim() - 1);
  if (auto narrow = narrow_entries(a))
    return ScalarTraits<Integer>::exact_div(from_i128(glynn_i128(*narrow, a.dim())), divisor);
  return ScalarTraits<Integer>::exact_div(detail::glynn_gray(a), divisor);
}

}  // namespace permchow
