#include "permchow/decomposition.hpp"

namespace permchow {

int target_coefficient(const TargetSpec& target, const FunctionTable& f) {
  if (f.size() != target.n) throw DimensionMismatch("target_coefficient: function size differs from target n");
  switch (target.kind) {
    case TargetSpec::Kind::Permanent:
      return f.is_bijective() ? 1 : 0;
    case TargetSpec::Kind::Signed:
      if (!target.pattern) throw std::invalid_argument("signed target without a sign pattern");
      return target.pattern->sign_of(f);
  }
  return 0;
}

}  // namespace permchow
