#include "permchow/guard.hpp"

#include <cstdlib>
#include <string>

#include "permchow/errors.hpp"

namespace permchow {

bool guards_overridden() {
  const char* v = std::getenv("PERMCHOW_GUARD_OVERRIDE");
  return v != nullptr && *v != '\0' && std::string_view(v) != "0";
}

void check_guard(std::string_view what, std::size_t n, std::size_t limit) {
  if (n > limit && !guards_overridden()) throw GuardError(std::string(what), n, limit);
}

}  // namespace permchow
