#include "bperm/extremal.hpp"

#include <atomic>
#include <climits>
#include <cstdint>
#include <thread>
#include <utility>

#include <json.hpp>

#include "bperm/window_ops.hpp"

namespace bperm {

namespace {

constexpr int kDefaultPairwiseCap = 5;
constexpr int kLongRunPairwiseCap = 6;
constexpr int kStreamCap = 8;
constexpr int kMaxWindow = 8;  // packed scan buffers are sized for this

int pairwise_cap(const ScanOptions& opts) {
  return opts.long_run ? kLongRunPairwiseCap : kDefaultPairwiseCap;
}

int resolve_threads(const ScanOptions& opts) {
  if (opts.threads > 0) return opts.threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

bool window_has_peaks(const std::vector<int>& w, const std::vector<int>& peaks) {
  auto it = peaks.begin();
  const int n = static_cast<int>(w.size());
  for (int i = 2; i <= n - 1; ++i) {
    if (w[i - 2] < w[i - 1] && w[i - 1] > w[i]) {
      if (it == peaks.end() || *it != i) return false;
      ++it;
    }
  }
  return it == peaks.end();
}

// A peak class (or the whole group) as contiguous int8 windows in
// lexicographic order, ready for the pair scan.
struct PackedClass {
  int n = 0;
  std::size_t count = 0;
  std::vector<std::int8_t> data;

  const std::int8_t* window(std::size_t i) const { return data.data() + i * n; }

  SignedPermutation unpack(std::size_t i) const {
    const std::int8_t* w = window(i);
    return SignedPermutation(std::vector<int>(w, w + n));
  }
};

PackedClass collect(int n, const PeakSet* filter) {
  PackedClass out;
  out.n = n;
  GroupStream stream(n);
  while (auto sigma = stream.next()) {
    if (filter != nullptr && !window_has_peaks(sigma->window(), filter->indices())) continue;
    for (const int v : sigma->window()) out.data.push_back(static_cast<std::int8_t>(v));
    ++out.count;
  }
  return out;
}

// (distance, index pair) accumulator. The class vector is sorted, so index
// pair order coincides with window pair order and ties resolve to the
// lexicographically smallest witness pair no matter how rows are scheduled.
struct Extreme {
  int min_d = INT_MAX;
  std::uint32_t min_a = 0, min_b = 0;
  int max_d = -1;
  std::uint32_t max_a = 0, max_b = 0;

  void update(int d, std::uint32_t a, std::uint32_t b) {
    if (d < min_d || (d == min_d && (a < min_a || (a == min_a && b < min_b)))) {
      min_d = d;
      min_a = a;
      min_b = b;
    }
    if (d > max_d || (d == max_d && (a < max_a || (a == max_a && b < max_b)))) {
      max_d = d;
      max_a = a;
      max_b = b;
    }
  }

  void merge(const Extreme& o) {
    if (o.max_d >= 0) {
      update(o.min_d, o.min_a, o.min_b);
      update(o.max_d, o.max_a, o.max_b);
    }
  }
};

struct ScanResult {
  Extreme hamming, l_inf, word;
};

// Scans all unordered distinct index pairs (a < b). Row b is the unit of
// work; each row caches the inverse of its window for the word metric.
ScanResult scan_pairs(const PackedClass& cls, int threads) {
  const int n = cls.n;
  const std::size_t count = cls.count;

  auto scan_rows = [&](std::atomic<std::uint64_t>& next_row, ScanResult& local) {
    std::int8_t inv_b[kMaxWindow];
    std::int8_t scratch[kMaxWindow];
    for (;;) {
      const std::uint64_t b = next_row.fetch_add(1, std::memory_order_relaxed);
      if (b >= count) break;
      const std::int8_t* wb = cls.window(b);
      wops::inverse_into(inv_b, wb, n);
      for (std::uint64_t a = 0; a < b; ++a) {
        const std::int8_t* wa = cls.window(a);
        local.hamming.update(wops::hamming(wa, wb, n), static_cast<std::uint32_t>(a),
                             static_cast<std::uint32_t>(b));
        local.l_inf.update(wops::l_inf(wa, wb, n), static_cast<std::uint32_t>(a),
                           static_cast<std::uint32_t>(b));
        local.word.update(wops::word_with_inverse(inv_b, wa, n, scratch),
                          static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
      }
    }
  };

  std::atomic<std::uint64_t> next_row{1};  // row 0 has no earlier partner
  if (threads <= 1 || count < 64) {
    ScanResult result;
    scan_rows(next_row, result);
    return result;
  }

  std::vector<ScanResult> partial(static_cast<std::size_t>(threads));
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t)
    workers.emplace_back([&, t] { scan_rows(next_row, partial[static_cast<std::size_t>(t)]); });
  for (auto& w : workers) w.join();

  ScanResult result;
  for (const auto& p : partial) {
    result.hamming.merge(p.hamming);
    result.l_inf.merge(p.l_inf);
    result.word.merge(p.word);
  }
  return result;
}

const Extreme& pick(const ScanResult& r, MetricKind kind) {
  switch (kind) {
    case MetricKind::hamming: return r.hamming;
    case MetricKind::l_inf: return r.l_inf;
    default: return r.word;
  }
}

ExtremalReport make_report(const PackedClass& cls, const ScanResult& scan,
                           std::optional<PeakSet> s, MetricKind kind) {
  const Extreme& e = pick(scan, kind);
  const auto predicted =
      s.has_value() ? predicted_extremes(*s, kind) : predicted_overall(cls.n, kind);
  ExtremalReport report{
      cls.n,
      std::move(s),
      kind,
      cls.count,
      e.min_d,
      e.max_d,
      predicted.first,
      predicted.second,
      {cls.unpack(e.min_a), cls.unpack(e.min_b)},
      {cls.unpack(e.max_a), cls.unpack(e.max_b)},
      false,
  };
  report.agrees =
      report.observed_min == report.predicted_min && report.observed_max == report.predicted_max;
  return report;
}

void require_scan_size(int n, const ScanOptions& opts) {
  if (n < 2 || n > pairwise_cap(opts))
    throw Error(ErrorCode::size_cap,
                "pairwise scans support 2 <= n <= " + std::to_string(pairwise_cap(opts)) +
                    (opts.long_run ? "" : " (6 with long_run)") + ", got " + std::to_string(n));
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

std::string witness_cell(const PermutationPair& pair) {
  return format(pair.first) + " | " + format(pair.second);
}

std::string peak_set_cell(const ExtremalReport& r) {
  return r.peak_set.has_value() ? r.peak_set->str() : "Overall";
}

}  // namespace

GroupStream::GroupStream(int n) : n_(n) {
  if (n < 1 || n > kStreamCap)
    throw Error(ErrorCode::size_cap,
                "enumeration supports 1 <= n <= " + std::to_string(kStreamCap) + ", got " +
                    std::to_string(n));
  total_ = wops::group_order(n);
  window_.resize(static_cast<size_t>(n));
  used_.assign(static_cast<size_t>(n) + 1, false);
}

std::optional<SignedPermutation> GroupStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    // Lexicographically smallest window: all entries negative, magnitudes
    // descending, i.e. (-n, -(n-1), ..., -1).
    for (int i = 0; i < n_; ++i) window_[i] = -(n_ - i);
    std::fill(used_.begin() + 1, used_.end(), true);
    started_ = true;
    return SignedPermutation(window_);
  }
  // Standard odometer: free suffix magnitudes right to left, bump the first
  // position that has a larger available signed value, refill minimally.
  for (int i = n_ - 1; i >= 0; --i) {
    used_[std::abs(window_[i])] = false;
    int replacement = 0;
    for (int v = window_[i] + 1; v <= n_; ++v) {
      if (v != 0 && !used_[std::abs(v)]) {
        replacement = v;
        break;
      }
    }
    if (replacement == 0) continue;
    window_[i] = replacement;
    used_[std::abs(replacement)] = true;
    int slot = i + 1;
    for (int m = n_; m >= 1; --m) {
      if (!used_[m]) {
        window_[slot++] = -m;
        used_[m] = true;
      }
    }
    return SignedPermutation(window_);
  }
  done_ = true;
  return std::nullopt;
}

namespace {

int class_ambient(const PeakSet& s) {
  if (s.ambient_size() < 2) throw Error(ErrorCode::size_cap, "peak classes need n >= 2");
  return s.ambient_size();
}

}  // namespace

ClassStream::ClassStream(const PeakSet& s) : target_(s), stream_(class_ambient(s)) {}

std::optional<SignedPermutation> ClassStream::next() {
  while (auto sigma = stream_.next()) {
    if (window_has_peaks(sigma->window(), target_.indices())) return sigma;
  }
  return std::nullopt;
}

std::pair<int, int> predicted_extremes(const PeakSet& s, MetricKind kind) {
  if (!is_admissible(s))
    throw Error(ErrorCode::inadmissible, "peak set " + s.str() + " has consecutive entries");
  const int n = s.ambient_size();
  switch (kind) {
    case MetricKind::hamming: return {1, n};
    case MetricKind::l_inf: return {1, s.contains(2) && s.contains(n - 1) ? 2 * n - 1 : 2 * n};
    default: return {1, n * n - s.size()};
  }
}

std::pair<int, int> predicted_overall(int n, MetricKind kind) {
  if (n < 2) throw Error(ErrorCode::invalid_size, "extremes need n >= 2");
  switch (kind) {
    case MetricKind::hamming: return {1, n};
    case MetricKind::l_inf: return {1, 2 * n};
    default: return {1, n * n};
  }
}

ExtremalReport brute_extremes(const PeakSet& s, MetricKind kind, const ScanOptions& opts) {
  if (!is_admissible(s))
    throw Error(ErrorCode::inadmissible, "peak set " + s.str() + " has consecutive entries");
  require_scan_size(s.ambient_size(), opts);
  const PackedClass cls = collect(s.ambient_size(), &s);
  const ScanResult scan = scan_pairs(cls, resolve_threads(opts));
  return make_report(cls, scan, s, kind);
}

std::pair<int, int> overall_extremes(int n, MetricKind kind, const ScanOptions& opts) {
  require_scan_size(n, opts);
  const PackedClass cls = collect(n, nullptr);
  const ScanResult scan = scan_pairs(cls, resolve_threads(opts));
  const Extreme& e = pick(scan, kind);
  return {e.min_d, e.max_d};
}

std::vector<ExtremalReport> extremal_table(int n, const ScanOptions& opts) {
  if (n < 3)
    throw Error(ErrorCode::size_cap, "the data table starts at n = 3, got " + std::to_string(n));
  require_scan_size(n, opts);
  const int threads = resolve_threads(opts);
  constexpr MetricKind kColumnOrder[] = {MetricKind::word, MetricKind::hamming, MetricKind::l_inf};

  std::vector<ExtremalReport> reports;
  for (const PeakSet& s : admissible_sets(n)) {
    const PackedClass cls = collect(n, &s);
    const ScanResult scan = scan_pairs(cls, threads);
    for (const MetricKind kind : kColumnOrder) reports.push_back(make_report(cls, scan, s, kind));
  }
  const PackedClass all = collect(n, nullptr);
  const ScanResult scan = scan_pairs(all, threads);
  for (const MetricKind kind : kColumnOrder)
    reports.push_back(make_report(all, scan, std::nullopt, kind));
  return reports;
}

bool VerifyReport::all_pass() const {
  for (const auto& c : clauses)
    if (!c.pass) return false;
  return true;
}

VerifyReport verify(int n, bool oracle, const ScanOptions& opts) {
  require_scan_size(n, opts);
  const int threads = resolve_threads(opts);
  constexpr MetricKind kKinds[] = {MetricKind::word, MetricKind::hamming, MetricKind::l_inf};

  VerifyReport report{n, {}};
  VerifyClause minima{"class minima equal 1", true, ""};
  VerifyClause min_wit{"constructive min witnesses attain 1", true, ""};
  VerifyClause maxima{"class maxima equal closed forms", true, ""};
  VerifyClause max_wit{"constructive max witnesses attain the maxima", true, ""};
  VerifyClause word_bound{"word distance bounded by n^2 - |S|", true, ""};

  auto fail = [](VerifyClause& clause, const std::string& detail) {
    if (clause.pass) {
      clause.pass = false;
      clause.detail = detail;
    }
  };

  for (const PeakSet& s : admissible_sets(n)) {
    const PackedClass cls = collect(n, &s);
    const ScanResult scan = scan_pairs(cls, threads);
    for (const MetricKind kind : kKinds) {
      const ExtremalReport r = make_report(cls, scan, s, kind);
      if (r.observed_min != 1)
        fail(minima, "S=" + s.str() + " " + to_string(kind) + ": observed min " +
                         std::to_string(r.observed_min) + " via " + witness_cell(r.min_witness));
      if (r.observed_max != r.predicted_max)
        fail(maxima, "S=" + s.str() + " " + to_string(kind) + ": observed max " +
                         std::to_string(r.observed_max) + " != predicted " +
                         std::to_string(r.predicted_max) + " via " + witness_cell(r.max_witness));
      const int pred_max = predicted_extremes(s, kind).second;
      const PermutationPair wit = max_witnesses(s, kind);
      if (distance(kind, wit.first, wit.second) != pred_max)
        fail(max_wit, "S=" + s.str() + " " + to_string(kind) + ": witness pair misses " +
                          std::to_string(pred_max));
    }
    const int bound = n * n - s.size();
    if (scan.word.max_d > bound)
      fail(word_bound, "S=" + s.str() + ": word distance " + std::to_string(scan.word.max_d) +
                           " exceeds " + std::to_string(bound));
    const MinWitnesses mw = min_witnesses(s);
    if (hamming(mw.base, mw.hamming_word_witness) != 1 ||
        word_distance(mw.base, mw.hamming_word_witness) != 1 ||
        l_infinity(mw.base, mw.linf_witness) != 1)
      fail(min_wit, "S=" + s.str() + ": constructive witness distance is not 1");
  }

  VerifyClause overall{"whole-group extremes match the closed forms", true, ""};
  {
    const PackedClass all = collect(n, nullptr);
    const ScanResult scan = scan_pairs(all, threads);
    for (const MetricKind kind : kKinds) {
      const auto [pmin, pmax] = predicted_overall(n, kind);
      const Extreme& e = pick(scan, kind);
      if (e.min_d != pmin || e.max_d != pmax)
        fail(overall, std::string(to_string(kind)) + ": observed (" + std::to_string(e.min_d) +
                          "," + std::to_string(e.max_d) + ") != (" + std::to_string(pmin) + "," +
                          std::to_string(pmax) + ")");
    }
  }

  report.clauses = {minima, min_wit, maxima, max_wit, word_bound, overall};

  if (oracle) {
    VerifyClause clause{"BFS word lengths equal length_b", true, ""};
    const DistanceTable table = bfs_word_lengths(n);
    GroupStream stream(n);
    while (auto sigma = stream.next()) {
      if (table.at(*sigma) != length_b(*sigma)) {
        fail(clause, "gamma = " + format(*sigma) + ": BFS " + std::to_string(table.at(*sigma)) +
                         " != length_b " + std::to_string(length_b(*sigma)));
        break;
      }
    }
    report.clauses.push_back(clause);
  }
  return report;
}

std::string reports_to_csv(const std::vector<ExtremalReport>& reports) {
  std::string out =
      "n,peak_set,metric,class_size,obs_min,obs_max,pred_min,pred_max,agrees,min_witness,max_witness\n";
  for (const ExtremalReport& r : reports) {
    out += std::to_string(r.n) + ',' + csv_quote(peak_set_cell(r)) + ',' + to_string(r.metric) +
           ',' + std::to_string(r.class_size) + ',' + std::to_string(r.observed_min) + ',' +
           std::to_string(r.observed_max) + ',' + std::to_string(r.predicted_min) + ',' +
           std::to_string(r.predicted_max) + ',' + (r.agrees ? "true" : "false") + ',' +
           csv_quote(witness_cell(r.min_witness)) + ',' + csv_quote(witness_cell(r.max_witness)) +
           '\n';
  }
  return out;
}

std::string reports_to_json(int n, const std::vector<ExtremalReport>& reports) {
  nlohmann::ordered_json root;
  root["n"] = n;
  auto& list = root["reports"] = nlohmann::ordered_json::array();
  for (const ExtremalReport& r : reports) {
    nlohmann::ordered_json item;
    item["n"] = r.n;
    item["peak_set"] = peak_set_cell(r);
    item["metric"] = to_string(r.metric);
    item["class_size"] = r.class_size;
    item["obs_min"] = r.observed_min;
    item["obs_max"] = r.observed_max;
    item["pred_min"] = r.predicted_min;
    item["pred_max"] = r.predicted_max;
    item["agrees"] = r.agrees;
    item["min_witness"] = witness_cell(r.min_witness);
    item["max_witness"] = witness_cell(r.max_witness);
    list.push_back(std::move(item));
  }
  return root.dump() + "\n";
}

}  // namespace bperm
