#pragma once

#include <utility>

#include "bperm/metrics.hpp"
#include "bperm/peaks.hpp"
#include "bperm/signed_permutation.hpp"

namespace bperm {

// Canonical members of the peak class P^B(S;n), built from the identity, its
// negation, its reversal, and its negated reversal by local position swaps
// determined by S. Every constructor validates that the result's peak set is
// exactly S (std::logic_error otherwise) and throws Error(inadmissible) when
// S has consecutive entries. The ambient size is taken from S.

/// Identity with window positions k, k+1 swapped for each k in S.
SignedPermutation e_of(const PeakSet& s);

/// Negated identity with window positions k-1, k swapped for each k in S.
SignedPermutation e_bar_of(const PeakSet& s);

/// Reversed identity with window positions k-1, k swapped for each k in S.
SignedPermutation e_star_of(const PeakSet& s);

/// Negated reversed identity with window positions k, k+1 swapped for each k in S.
SignedPermutation e_bar_star_of(const PeakSet& s);

using PermutationPair = std::pair<SignedPermutation, SignedPermutation>;

/// The pair (sigma, pi) in P^B(S;n) x P^B(S;n) attaining the maximum word
/// distance n^2 - |S|:
///   sigma(j) = n-j+1 if j,j+1 not in S;  n-j+2 if j in S;  -(n-j) if j+1 in S
///   pi(j)    = -(n-j+1) if j not in S;   n-j+1 if j in S.
PermutationPair word_attainment_pair(const PeakSet& s);

struct MinWitnesses {
  SignedPermutation base;                  // e[S]
  SignedPermutation hamming_word_witness;  // e[S] with first entry negated
  SignedPermutation linf_witness;          // e[S] with values 1 and 2 exchanged
};

/// Witnesses for the minimum distance 1 inside P^B(S;n):
/// hamming(base, hamming_word_witness) == word_distance(...) == 1 and
/// l_infinity(base, linf_witness) == 1. Requires n >= 2.
MinWitnesses min_witnesses(const PeakSet& s);

/// A pair in P^B(S;n) attaining the maximum of the given metric:
///   hamming -> (e[S], ebar[S]), distance n;
///   l_inf   -> (e*[S], ebar*[S]) when 2 is not in S or {2, n-1} is a subset
///              of S, else (e[S], ebar[S]); distance 2n-1 or 2n per the case;
///   word    -> word_attainment_pair, distance n^2 - |S|.
/// The achieved distance is re-checked against the closed form.
PermutationPair max_witnesses(const PeakSet& s, MetricKind kind);

}  // namespace bperm
