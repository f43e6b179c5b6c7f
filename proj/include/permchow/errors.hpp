#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permchow {

/// A dimension limit (factorial, n^n, 2^n) was exceeded.
class GuardError : public std::runtime_error {
public:
  GuardError(const std::string& what, std::size_t n, std::size_t limit)
      : std::runtime_error(what + ": n=" + std::to_string(n) + " exceeds limit " +
                           std::to_string(limit)),
        n_(n), limit_(limit) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t limit() const noexcept { return limit_; }

private:
  std::size_t n_;
  std::size_t limit_;
};

/// An integer division that was supposed to be exact left a remainder.
/// Never caused by legitimate input.
class InexactDivision : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class DimensionMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed matrix / decomposition / sign-pattern documents.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace permchow
