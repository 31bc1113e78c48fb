#include "bperm/window_ops.hpp"

namespace bperm::wops {

std::uint64_t group_order(int n) {
  std::uint64_t order = 1;
  for (int k = 1; k <= n; ++k) order *= 2 * static_cast<std::uint64_t>(k);
  return order;
}

}  // namespace bperm::wops
