#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "bperm/signed_permutation.hpp"

namespace bperm {

/// A set of interior peak positions for windows of a fixed size n: strictly
/// increasing indices, each in {2..n-1}.
class PeakSet {
public:
  /// Empty set over windows of size n.
  explicit PeakSet(int n);

  /// Validates the index invariants; throws Error (out_of_range,
  /// malformed_token for non-increasing input, invalid_size).
  PeakSet(std::vector<int> indices, int n);

  /// Parses "{}", "∅" or "{2,4}" (spaces after commas tolerated).
  static PeakSet parse(std::string_view text, int n);

  const std::vector<int>& indices() const noexcept { return indices_; }
  int ambient_size() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(indices_.size()); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(int i) const;

  /// Text form "{}" or "{2,4}": comma-separated, no spaces.
  std::string str() const;

  bool operator==(const PeakSet&) const = default;
  auto operator<=>(const PeakSet&) const = default;

private:
  std::vector<int> indices_;
  int n_;
};

/// Peak positions of sigma: indices i in {2..n-1} with
/// sigma(i-1) < sigma(i) > sigma(i+1) under signed comparison.
PeakSet peak_set(const SignedPermutation& sigma);

/// True iff some element of S^B_n has peak set exactly S; equivalently,
/// S contains no two consecutive integers. Requires ambient size >= 2.
bool is_admissible(const PeakSet& s);

/// All admissible peak sets for window size n, sorted by (cardinality,
/// lexicographic index order); always includes the empty set. n >= 2.
std::vector<PeakSet> admissible_sets(int n);

/// Exchanges the magnitudes value and value+1 wherever they appear, each
/// position keeping its sign. Requires 2 <= value <= n-1 (value_out_of_range)
/// and that the two magnitudes do not sit in adjacent window positions
/// (adjacent_values). The peak set is provably unchanged; the implementation
/// re-checks and would throw std::logic_error on violation.
SignedPermutation peak_preserving_value_swap(const SignedPermutation& sigma, int value);

/// Swaps the entries -n and -(n-1); both must be present (values_absent).
/// Preserves the peak set even when the two are adjacent.
SignedPermutation bar_n_swap(const SignedPermutation& sigma);

}  // namespace bperm
