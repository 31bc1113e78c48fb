#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "bperm/signed_permutation.hpp"

namespace bperm {

enum class MetricKind { hamming, l_inf, word };

const char* to_string(MetricKind kind);

/// Parses "hamming"/"ham", "linf"/"l-inf", "word"; throws malformed_token.
MetricKind parse_metric(std::string_view text);

/// Number of window positions where the two permutations differ (<= n).
int hamming(const SignedPermutation& sigma, const SignedPermutation& rho);

/// Maximum absolute entrywise window difference (<= 2n).
int l_infinity(const SignedPermutation& sigma, const SignedPermutation& rho);

int negatives(const SignedPermutation& sigma);

/// Pairs i < j with sigma(i) > sigma(j).
int inversions(const SignedPermutation& sigma);

/// Pairs i < j with sigma(i) + sigma(j) < 0.
int negative_sum_pairs(const SignedPermutation& sigma);

/// Coxeter length of sigma with respect to {s_0, ..., s_{n-1}}, computed as
/// negatives + inversions + negative_sum_pairs (<= n^2). The BFS oracle
/// certifies the equality with the minimum-generator-count definition.
int length_b(const SignedPermutation& sigma);

/// Word metric: length_b(compose(pi.inverse(), sigma)), the Cayley-graph
/// distance under right multiplication by the Coxeter generators.
int word_distance(const SignedPermutation& sigma, const SignedPermutation& pi);

/// Dispatch over MetricKind.
int distance(MetricKind kind, const SignedPermutation& sigma, const SignedPermutation& rho);

/// Cayley-graph distances from the identity for every element of S^B_n,
/// stored as a flat array indexed by the dense mixed-radix rank.
class DistanceTable {
public:
  DistanceTable(int n, std::vector<std::uint8_t> distances);

  int window_size() const noexcept { return n_; }
  std::uint64_t element_count() const noexcept { return distances_.size(); }

  /// Distance of sigma from the identity; throws size_mismatch on wrong n.
  int at(const SignedPermutation& sigma) const;

private:
  int n_;
  std::vector<std::uint8_t> distances_;
};

/// Breadth-first search over the Cayley graph of S^B_n with generators
/// applied by right multiplication. Independent oracle for length_b.
/// Supported for 2 <= n <= 6 (46080 states at n = 6); throws size_cap.
DistanceTable bfs_word_lengths(int n);

}  // namespace bperm
