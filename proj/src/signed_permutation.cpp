#include "bperm/signed_permutation.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "bperm/window_ops.hpp"

namespace bperm {

namespace {

void validate_window(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  if (n < 1) throw Error(ErrorCode::invalid_size, "window must have at least one entry");
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (const int v : w) {
    if (v == 0) throw Error(ErrorCode::zero_entry, "window entries must be nonzero");
    const int m = std::abs(v);
    if (m > n)
      throw Error(ErrorCode::out_of_range,
                  "entry " + std::to_string(v) + " out of range for n=" + std::to_string(n));
    if (seen[m])
      throw Error(ErrorCode::repeated_value, "magnitude " + std::to_string(m) + " appears twice");
    seen[m] = true;
  }
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  validate_window(window_);
}

int SignedPermutation::operator()(int i) const {
  const int n = size();
  if (i == 0 || i > n || i < -n)
    throw Error(ErrorCode::index_out_of_range,
                "index " + std::to_string(i) + " not in {-n..-1, 1..n}");
  return i > 0 ? window_[i - 1] : -window_[-i - 1];
}

SignedPermutation SignedPermutation::barred() const {
  std::vector<int> w(window_);
  for (int& v : w) v = -v;
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::reversed() const {
  return SignedPermutation(std::vector<int>(window_.rbegin(), window_.rend()));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> out(window_.size());
  wops::inverse_into(out.data(), window_.data(), size());
  return SignedPermutation(std::move(out));
}

SignedPermutation identity(int n) {
  if (n < 1) throw Error(ErrorCode::invalid_size, "n must be positive, got " + std::to_string(n));
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(std::move(w));
}

SignedPermutation parse(std::string_view text) {
  std::vector<int> window;
  size_t pos = 0;
  bool expect_token = false;  // set right after a comma: empty field is an error
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos == text.size()) break;
    if (text[pos] == ',') {
      if (window.empty() || expect_token)
        throw Error(ErrorCode::malformed_token, "empty token before ','");
      expect_token = true;
      ++pos;
      continue;
    }
    const size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != ',') ++pos;
    const std::string_view tok = text.substr(start, pos - start);
    expect_token = false;

    std::string_view digits = tok;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == 'b')) {
      negative = true;
      digits.remove_prefix(1);
    }
    // Token grammar is ['-'|'b'] digits; from_chars alone would accept a
    // second sign.
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
      throw Error(ErrorCode::malformed_token, "token '" + std::string(tok) + "'");
    int value = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec == std::errc::result_out_of_range)
      throw Error(ErrorCode::out_of_range, "token '" + std::string(tok) + "'");
    (void)end;
    if (value == 0) throw Error(ErrorCode::zero_entry, "token '" + std::string(tok) + "'");
    window.push_back(negative ? -value : value);
  }
  if (expect_token) throw Error(ErrorCode::malformed_token, "trailing ','");
  if (window.empty()) throw Error(ErrorCode::invalid_size, "no tokens in input");
  return SignedPermutation(std::move(window));
}

std::string format(const SignedPermutation& sigma) {
  std::string out;
  for (const int v : sigma.window()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

SignedPermutation compose(const SignedPermutation& tau, const SignedPermutation& sigma) {
  if (tau.size() != sigma.size())
    throw Error(ErrorCode::size_mismatch, "compose: sizes " + std::to_string(tau.size()) +
                                              " vs " + std::to_string(sigma.size()));
  std::vector<int> out(sigma.window().size());
  wops::compose_into(out.data(), tau.window().data(), sigma.window().data(), sigma.size());
  return SignedPermutation(std::move(out));
}

SignedPermutation generator(int n, int k) {
  if (n < 1) throw Error(ErrorCode::invalid_size, "n must be positive");
  if (k < 0 || k > n - 1)
    throw Error(ErrorCode::index_out_of_range,
                "generator index " + std::to_string(k) + " not in {0.." + std::to_string(n - 1) + "}");
  return apply_generator_right(identity(n), k);
}

SignedPermutation apply_generator_right(const SignedPermutation& sigma, int k) {
  const int n = sigma.size();
  if (k < 0 || k > n - 1)
    throw Error(ErrorCode::index_out_of_range,
                "generator index " + std::to_string(k) + " not in {0.." + std::to_string(n - 1) + "}");
  std::vector<int> w(sigma.window());
  if (k == 0)
    w[0] = -w[0];
  else
    std::swap(w[k - 1], w[k]);
  return SignedPermutation(std::move(w));
}

}  // namespace bperm
