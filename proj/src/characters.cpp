#include "capelli/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace capelli {

namespace {

// Beta-set (first-column hook lengths) of λ padded to `len` rows.
std::vector<int> beta_set(const std::vector<int>& parts, int len) {
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    const int part = i < static_cast<int>(parts.size()) ? parts[static_cast<std::size_t>(i)] : 0;
    beta[static_cast<std::size_t>(i)] = part + (len - 1 - i);
  }
  return beta;
}

std::vector<int> parts_from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

using Key = std::pair<std::vector<int>, std::vector<int>>;

std::mutex memo_mutex;
std::map<Key, long long>& memo() {
  static std::map<Key, long long> table;
  return table;
}

// Removes rim hooks of length cycles.front() in every possible way.
long long murnaghan_nakayama(const std::vector<int>& parts, const std::vector<int>& cycles) {
  if (cycles.empty()) return parts.empty() ? 1 : 0;
  const Key key{parts, cycles};
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo().find(key); it != memo().end()) return it->second;
  }
  const int k = cycles.front();
  const std::vector<int> rest(cycles.begin() + 1, cycles.end());
  const int len = static_cast<int>(parts.size());
  const std::vector<int> beta = beta_set(parts, len);
  long long total = 0;
  for (int b : beta) {
    const int target = b - k;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int x : beta)
      if (x > target && x < b) ++between;
    std::vector<int> moved = beta;
    *std::find(moved.begin(), moved.end(), b) = target;
    const long long sub = murnaghan_nakayama(parts_from_beta(std::move(moved)), rest);
    total += (between % 2 == 0 ? sub : -sub);
  }
  std::lock_guard lock(memo_mutex);
  memo().emplace(key, total);
  return total;
}

}  // namespace

long long character_std(const Partition& shape, const Partition& cycle_type) {
  if (shape.weight() != cycle_type.weight())
    throw std::invalid_argument("character: shape and cycle type have different weights");
  return murnaghan_nakayama(shape.parts(), cycle_type.parts());
}

long long character_swapped(const Partition& shape, const Permutation& sigma) {
  if (shape.weight() != sigma.degree())
    throw std::invalid_argument("character: shape weight differs from permutation degree");
  return character_std(shape.conjugate(), sigma.cycle_type());
}

std::uint64_t dim_irrep(const Partition& shape) {
  std::uint64_t fact = 1;
  for (int k = 2; k <= shape.weight(); ++k) fact *= static_cast<std::uint64_t>(k);
  return fact / shape.hook_number();
}

}  // namespace capelli
