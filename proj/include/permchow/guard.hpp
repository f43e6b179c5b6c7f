#pragma once

#include <cstddef>
#include <string_view>

namespace permchow {

/// Default dimension limits. Each can be lifted process-wide by setting
/// PERMCHOW_GUARD_OVERRIDE to a non-empty value other than "0".
namespace limits {
inline constexpr std::size_t kNaive = 10;          // n! terms
inline constexpr std::size_t kSubsetSum = 30;      // Ryser, Glynn, Hadamard: 2^n terms
inline constexpr std::size_t kCertificate = 16;    // rho * n^2 stored entries, rho ~ 2^n
inline constexpr std::size_t kExtraction = 7;      // n^n coefficients
inline constexpr std::size_t kOrbit = 5;           // (n!)^2 group pairs per orbit
inline constexpr std::size_t kClasses = 6;
inline constexpr std::size_t kSystem = 5;
inline constexpr std::size_t kSolve = 4;
inline constexpr std::size_t kExponentTable = 4;
}  // namespace limits

/// Hard representational limit for 64-bit counts ((n!)^2 and n^n).
/// Not affected by the override.
inline constexpr std::size_t kMaxCountN = 12;

bool guards_overridden();

/// Throws GuardError when n > limit, unless guards are overridden.
void check_guard(std::string_view what, std::size_t n, std::size_t limit);

}  // namespace permchow
