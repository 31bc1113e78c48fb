#pragma once

// Shared helpers for the property suites. Every randomized test draws from
// mt19937_64 seeded with kPropertySeed so failures replay deterministically;
// the acceptance runner prints the seed it used.

#include <numeric>
#include <random>
#include <vector>

#include "bperm/signed_permutation.hpp"

namespace bperm::testsupport {

inline constexpr std::uint64_t kPropertySeed = 0x5ee0b5eedULL;

inline SignedPermutation random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(w[static_cast<size_t>(i)], w[static_cast<size_t>(pick(rng))]);
  }
  std::uniform_int_distribution<int> coin(0, 1);
  for (int& v : w)
    if (coin(rng)) v = -v;
  return SignedPermutation(std::move(w));
}

inline int random_size(std::mt19937_64& rng, int lo = 2, int hi = 8) {
  std::uniform_int_distribution<int> pick(lo, hi);
  return pick(rng);
}

}  // namespace bperm::testsupport
