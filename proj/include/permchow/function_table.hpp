#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace permchow {

/// A function f: Z_n -> Z_n stored as its value array. Permutations are the
/// bijective tables.
class FunctionTable {
public:
  /// Throws std::invalid_argument if empty or any value is outside [0, n).
  explicit FunctionTable(std::vector<int> values);

  static FunctionTable identity(std::size_t n);
  static FunctionTable constant(std::size_t n, int value);

  std::size_t size() const noexcept { return v_.size(); }
  int operator[](std::size_t i) const { return v_[i]; }
  std::span<const int> values() const noexcept { return v_; }

  bool is_bijective() const;

  /// Requires a bijection.
  FunctionTable inverse() const;

  /// (*this o g)(i) = this[g[i]].
  FunctionTable after(const FunctionTable& g) const;

  /// Digit string, e.g. "012".
  std::string digits() const;

  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;
  friend auto operator<=>(const FunctionTable&, const FunctionTable&) = default;

private:
  std::vector<int> v_;
};

}  // namespace permchow
