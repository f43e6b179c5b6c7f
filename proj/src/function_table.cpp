#include "permchow/function_table.hpp"

#include <numeric>
#include <stdexcept>

#include "permchow/errors.hpp"

namespace permchow {

FunctionTable::FunctionTable(std::vector<int> values) : v_(std::move(values)) {
  if (v_.empty()) throw std::invalid_argument("function table must have positive length");
  const int n = static_cast<int>(v_.size());
  for (int x : v_)
    if (x < 0 || x >= n)
      throw std::invalid_argument("function value " + std::to_string(x) + " outside [0, " + std::to_string(n) + ")");
}

FunctionTable FunctionTable::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return FunctionTable(std::move(v));
}

FunctionTable FunctionTable::constant(std::size_t n, int value) { return FunctionTable(std::vector<int>(n, value)); }

bool FunctionTable::is_bijective() const {
  std::vector<bool> seen(v_.size(), false);
  for (int x : v_) {
    if (seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

FunctionTable FunctionTable::inverse() const {
  if (!is_bijective()) throw std::invalid_argument("inverse of a non-bijective function");
  std::vector<int> inv(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) inv[v_[i]] = static_cast<int>(i);
  return FunctionTable(std::move(inv));
}

FunctionTable FunctionTable::after(const FunctionTable& g) const {
  if (g.size() != size()) throw DimensionMismatch("composing functions of different sizes");
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = v_[g[i]];
  return FunctionTable(std::move(out));
}

std::string FunctionTable::digits() const {
  std::string s;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (v_.size() > 10 && i > 0) s += ',';
    s += std::to_string(v_[i]);
  }
  return s;
}

}  // namespace permchow
