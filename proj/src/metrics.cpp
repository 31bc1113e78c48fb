#include "bperm/metrics.hpp"

#include <cstdint>
#include <deque>
#include <utility>

#include "bperm/window_ops.hpp"

namespace bperm {

namespace {

void require_same_size(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::size_mismatch,
                "sizes " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

}  // namespace

const char* to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::hamming: return "hamming";
    case MetricKind::l_inf: return "linf";
    case MetricKind::word: return "word";
  }
  return "?";
}

MetricKind parse_metric(std::string_view text) {
  if (text == "hamming" || text == "ham") return MetricKind::hamming;
  if (text == "linf" || text == "l-inf" || text == "linfty") return MetricKind::l_inf;
  if (text == "word") return MetricKind::word;
  throw Error(ErrorCode::malformed_token, "unknown metric '" + std::string(text) + "'");
}

int hamming(const SignedPermutation& sigma, const SignedPermutation& rho) {
  require_same_size(sigma, rho);
  return wops::hamming(sigma.window().data(), rho.window().data(), sigma.size());
}

int l_infinity(const SignedPermutation& sigma, const SignedPermutation& rho) {
  require_same_size(sigma, rho);
  return wops::l_inf(sigma.window().data(), rho.window().data(), sigma.size());
}

int negatives(const SignedPermutation& sigma) {
  return wops::negatives(sigma.window().data(), sigma.size());
}

int inversions(const SignedPermutation& sigma) {
  return wops::inversions(sigma.window().data(), sigma.size());
}

int negative_sum_pairs(const SignedPermutation& sigma) {
  return wops::negative_sum_pairs(sigma.window().data(), sigma.size());
}

int length_b(const SignedPermutation& sigma) {
  return wops::length_b(sigma.window().data(), sigma.size());
}

int word_distance(const SignedPermutation& sigma, const SignedPermutation& pi) {
  require_same_size(sigma, pi);
  return length_b(compose(pi.inverse(), sigma));
}

int distance(MetricKind kind, const SignedPermutation& sigma, const SignedPermutation& rho) {
  switch (kind) {
    case MetricKind::hamming: return hamming(sigma, rho);
    case MetricKind::l_inf: return l_infinity(sigma, rho);
    case MetricKind::word: return word_distance(sigma, rho);
  }
  throw Error(ErrorCode::malformed_token, "bad metric kind");
}

DistanceTable::DistanceTable(int n, std::vector<std::uint8_t> distances)
    : n_(n), distances_(std::move(distances)) {}

int DistanceTable::at(const SignedPermutation& sigma) const {
  if (sigma.size() != n_)
    throw Error(ErrorCode::size_mismatch,
                "table is for n=" + std::to_string(n_) + ", got n=" + std::to_string(sigma.size()));
  return distances_[wops::rank(sigma.window().data(), n_)];
}

DistanceTable bfs_word_lengths(int n) {
  if (n < 2 || n > 6)
    throw Error(ErrorCode::size_cap, "bfs_word_lengths supports 2 <= n <= 6, got " + std::to_string(n));
  const std::uint64_t order = wops::group_order(n);
  constexpr std::uint8_t unvisited = 0xFF;
  std::vector<std::uint8_t> dist(order, unvisited);

  std::vector<int8_t> start(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) start[i] = static_cast<int8_t>(i + 1);
  dist[wops::rank(start.data(), n)] = 0;

  std::deque<std::vector<int8_t>> frontier{std::move(start)};
  while (!frontier.empty()) {
    std::vector<int8_t> u = std::move(frontier.front());
    frontier.pop_front();
    const std::uint8_t du = dist[wops::rank(u.data(), n)];
    for (int k = 0; k < n; ++k) {
      std::vector<int8_t> v(u);
      if (k == 0)
        v[0] = static_cast<int8_t>(-v[0]);
      else
        std::swap(v[k - 1], v[k]);
      std::uint8_t& dv = dist[wops::rank(v.data(), n)];
      if (dv == unvisited) {
        dv = static_cast<std::uint8_t>(du + 1);
        frontier.push_back(std::move(v));
      }
    }
  }
  return DistanceTable(n, std::move(dist));
}

}  // namespace bperm
