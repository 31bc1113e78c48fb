#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bperm/constructions.hpp"
#include "bperm/metrics.hpp"
#include "bperm/peaks.hpp"
#include "bperm/signed_permutation.hpp"

namespace bperm {

/// Streams every element of S^B_n exactly once, in lexicographic window
/// order (signed comparison), so (-n, ..., -1) first and (n, ..., 1) last.
/// Supported for 1 <= n <= 8; throws size_cap.
class GroupStream {
public:
  explicit GroupStream(int n);

  /// Next element, or nullopt when exhausted.
  std::optional<SignedPermutation> next();

  std::uint64_t total() const noexcept { return total_; }

private:
  int n_;
  std::uint64_t total_;
  bool done_ = false;
  bool started_ = false;
  std::vector<int> window_;
  std::vector<bool> used_;  // magnitude m taken <=> used_[m]
};

/// Filter of GroupStream by peak_set == s; empty iff s is inadmissible.
/// Requires ambient size >= 2.
class ClassStream {
public:
  explicit ClassStream(const PeakSet& s);
  std::optional<SignedPermutation> next();

private:
  PeakSet target_;
  GroupStream stream_;
};

struct ScanOptions {
  bool long_run = false;  // lifts the pairwise cap from n <= 5 to n <= 6
  int threads = 0;        // 0 = all hardware threads; 1 = fully sequential
};

/// Closed-form (min, max) of the metric over distinct pairs of P^B(S;n):
/// min 1 for every kind; max n (hamming), 2n-1 if {2, n-1} is a subset of S
/// else 2n (l_inf), n^2 - |S| (word). Throws inadmissible.
std::pair<int, int> predicted_extremes(const PeakSet& s, MetricKind kind);

/// Closed-form (min, max) over distinct pairs of the whole group S^B_n:
/// (1, n), (1, 2n), (1, n^2).
std::pair<int, int> predicted_overall(int n, MetricKind kind);

/// Result of one brute-force class scan for one metric. Witnesses are the
/// lexicographically smallest pairs (a < b in window order) attaining the
/// observed values, so reports are byte-deterministic for fixed inputs
/// regardless of thread count.
struct ExtremalReport {
  int n;
  std::optional<PeakSet> peak_set;  // nullopt for the whole-group row
  MetricKind metric;
  std::uint64_t class_size;
  int observed_min;
  int observed_max;
  int predicted_min;
  int predicted_max;
  PermutationPair min_witness;
  PermutationPair max_witness;
  bool agrees;  // observed == predicted on both ends
};

/// Scans all distinct unordered pairs of P^B(S;n). Pairwise cap: n <= 5,
/// or n <= 6 with long_run (throws size_cap beyond).
ExtremalReport brute_extremes(const PeakSet& s, MetricKind kind, const ScanOptions& opts = {});

/// Observed (min, max) over all distinct pairs of S^B_n, same caps.
std::pair<int, int> overall_extremes(int n, MetricKind kind, const ScanOptions& opts = {});

/// One report per admissible S per metric (classes in (cardinality, lex)
/// order, metrics in word, hamming, l_inf order) followed by the three
/// whole-group rows: one table block per window size.
/// Requires 3 <= n, pairwise caps as above.
std::vector<ExtremalReport> extremal_table(int n, const ScanOptions& opts = {});

struct VerifyClause {
  std::string name;
  bool pass;
  std::string detail;  // first counterexample on failure
};

struct VerifyReport {
  int n;
  std::vector<VerifyClause> clauses;
  bool all_pass() const;
};

/// Exhaustively checks, for every admissible S and every metric:
///   - class minima over distinct pairs equal 1 and the constructive
///     min witnesses attain 1;
///   - class maxima equal the closed forms and the constructive max
///     witnesses attain them;
///   - the word bound d_W <= n^2 - |S| holds for every scanned pair;
///   - whole-group extremes equal (1, n), (1, 2n), (1, n^2).
/// With oracle = true additionally checks bfs_word_lengths == length_b
/// over all of S^B_n. Requires 2 <= n <= pairwise cap.
VerifyReport verify(int n, bool oracle = false, const ScanOptions& opts = {});

/// CSV with header "n,peak_set,metric,class_size,obs_min,obs_max,pred_min,
/// pred_max,agrees,min_witness,max_witness". peak_set and witness cells are
/// quoted; witnesses are rendered "sigma | rho" in canonical text form.
std::string reports_to_csv(const std::vector<ExtremalReport>& reports);

/// JSON object {"n": ..., "reports": [...]} with per-report field names
/// identical to the CSV header.
std::string reports_to_json(int n, const std::vector<ExtremalReport>& reports);

}  // namespace bperm
