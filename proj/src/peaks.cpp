#include "bperm/peaks.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bperm {

namespace {

void validate_indices(const std::vector<int>& idx, int n) {
  if (n < 1) throw Error(ErrorCode::invalid_size, "ambient size must be positive");
  int prev = 0;
  for (const int i : idx) {
    if (i < 2 || i > n - 1)
      throw Error(ErrorCode::out_of_range,
                  "peak index " + std::to_string(i) + " not in {2.." + std::to_string(n - 1) + "}");
    if (i <= prev)
      throw Error(ErrorCode::malformed_token, "peak indices must be strictly increasing");
    prev = i;
  }
}

}  // namespace

PeakSet::PeakSet(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::invalid_size, "ambient size must be positive");
}

PeakSet::PeakSet(std::vector<int> indices, int n) : indices_(std::move(indices)), n_(n) {
  validate_indices(indices_, n_);
}

PeakSet PeakSet::parse(std::string_view text, int n) {
  if (text == "\xE2\x88\x85")  // U+2205 empty set
    return PeakSet(n);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw Error(ErrorCode::malformed_token, "peak set must look like {} or {2,4}");
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<int> idx;
  while (!body.empty()) {
    while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
    size_t end = body.find(',');
    std::string_view tok = body.substr(0, end);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) throw Error(ErrorCode::malformed_token, "empty entry in peak set");
    int value = 0;
    for (const char c : tok) {
      if (c < '0' || c > '9')
        throw Error(ErrorCode::malformed_token, "peak set entry '" + std::string(tok) + "'");
      value = value * 10 + (c - '0');
    }
    idx.push_back(value);
    body = end == std::string_view::npos ? std::string_view{} : body.substr(end + 1);
    if (end != std::string_view::npos && body.empty())
      throw Error(ErrorCode::malformed_token, "trailing ',' in peak set");
  }
  return PeakSet(std::move(idx), n);
}

bool PeakSet::contains(int i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

std::string PeakSet::str() const {
  std::string out = "{";
  for (size_t k = 0; k < indices_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(indices_[k]);
  }
  out += '}';
  return out;
}

PeakSet peak_set(const SignedPermutation& sigma) {
  const auto& w = sigma.window();
  const int n = sigma.size();
  std::vector<int> idx;
  for (int i = 2; i <= n - 1; ++i)
    if (w[i - 2] < w[i - 1] && w[i - 1] > w[i]) idx.push_back(i);
  return PeakSet(std::move(idx), n);
}

bool is_admissible(const PeakSet& s) {
  if (s.ambient_size() < 2) throw Error(ErrorCode::invalid_size, "admissibility needs n >= 2");
  const auto& idx = s.indices();
  for (size_t k = 1; k < idx.size(); ++k)
    if (idx[k] == idx[k - 1] + 1) return false;
  return true;
}

std::vector<PeakSet> admissible_sets(int n) {
  if (n < 2) throw Error(ErrorCode::invalid_size, "admissible_sets needs n >= 2");
  // Enumerate subsets of {2..n-1} without consecutive elements, then order
  // by (cardinality, lexicographic indices).
  std::vector<std::vector<int>> subsets{{}};
  std::vector<int> current;
  auto extend = [&](auto&& self, int from) -> void {
    for (int i = from; i <= n - 1; ++i) {
      current.push_back(i);
      subsets.push_back(current);
      self(self, i + 2);
      current.pop_back();
    }
  };
  extend(extend, 2);
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<PeakSet> out;
  out.reserve(subsets.size());
  for (auto& s : subsets) out.emplace_back(std::move(s), n);
  return out;
}

SignedPermutation peak_preserving_value_swap(const SignedPermutation& sigma, int value) {
  const int n = sigma.size();
  if (value < 2 || value > n - 1)
    throw Error(ErrorCode::value_out_of_range,
                "value " + std::to_string(value) + " not in {2.." + std::to_string(n - 1) + "}");
  const auto& w = sigma.window();
  int p = -1, q = -1;
  for (int i = 0; i < n; ++i) {
    const int m = std::abs(w[i]);
    if (m == value) p = i;
    if (m == value + 1) q = i;
  }
  if (p - q == 1 || q - p == 1)
    throw Error(ErrorCode::adjacent_values,
                "values " + std::to_string(value) + " and " + std::to_string(value + 1) +
                    " occupy adjacent window positions");
  std::vector<int> out(w);
  out[p] = w[p] > 0 ? value + 1 : -(value + 1);
  out[q] = w[q] > 0 ? value : -value;
  SignedPermutation result(std::move(out));
  if (!(peak_set(result) == peak_set(sigma)))
    throw std::logic_error("peak_preserving_value_swap changed the peak set");
  return result;
}

SignedPermutation bar_n_swap(const SignedPermutation& sigma) {
  const int n = sigma.size();
  const auto& w = sigma.window();
  int p = -1, q = -1;
  for (int i = 0; i < n; ++i) {
    if (w[i] == -n) p = i;
    if (n >= 2 && w[i] == -(n - 1)) q = i;
  }
  if (p < 0 || q < 0)
    throw Error(ErrorCode::values_absent,
                "window must contain both -" + std::to_string(n) + " and -" + std::to_string(n - 1));
  std::vector<int> out(w);
  std::swap(out[p], out[q]);
  SignedPermutation result(std::move(out));
  if (!(peak_set(result) == peak_set(sigma)))
    throw std::logic_error("bar_n_swap changed the peak set");
  return result;
}

}  // namespace bperm
