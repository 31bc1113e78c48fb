#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "bperm/error.hpp"

namespace bperm {

/// An element of the hyperoctahedral group S^B_n, stored as its one-line
/// window (sigma(1), ..., sigma(n)). Entries are nonzero signed integers
/// whose absolute values are exactly {1, ..., n}; the action on negative
/// arguments is determined by sigma(-i) = -sigma(i), so the window is the
/// whole element. Immutable after construction.
class SignedPermutation {
public:
  /// Validates the window invariants; throws Error on violation
  /// (zero_entry, out_of_range, repeated_value, invalid_size).
  explicit SignedPermutation(std::vector<int> window);

  int size() const noexcept { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const noexcept { return window_; }

  /// Sign-extended application: valid for i in {-n..-1, 1..n}.
  int operator()(int i) const;

  /// Window with every entry negated (the "bar" of the permutation).
  SignedPermutation barred() const;

  /// Window read right to left.
  SignedPermutation reversed() const;

  /// Group-theoretic inverse: compose(*this, inverse()) == identity.
  SignedPermutation inverse() const;

  bool operator==(const SignedPermutation&) const = default;

  /// Lexicographic order on windows (signed entry comparison).
  auto operator<=>(const SignedPermutation& other) const {
    return window_ <=> other.window_;
  }

private:
  std::vector<int> window_;
};

/// The identity of S^B_n. Throws invalid_size for n < 1.
SignedPermutation identity(int n);

/// Parses whitespace- or comma-separated signed decimal tokens. A leading
/// 'b' on a token is a synonym for a minus sign ("b5,2,b4" == "-5 2 -4").
SignedPermutation parse(std::string_view text);

/// Canonical text form: space-separated signed decimals; parse(format(s)) == s.
std::string format(const SignedPermutation& sigma);

/// Group product with sigma applied first: (tau*sigma)(i) = tau(sigma(i)),
/// sign-extended, i.e. sign(sigma(i)) * tau(|sigma(i)|).
SignedPermutation compose(const SignedPermutation& tau, const SignedPermutation& sigma);

/// Coxeter generator of S^B_n: k = 0 negates the first window entry
/// ((-1, 2, ..., n)); k in {1..n-1} is the adjacent transposition with
/// window positions k and k+1 swapped. Throws index_out_of_range.
SignedPermutation generator(int n, int k);

/// compose(sigma, generator(n, k)): for k >= 1 swaps window positions
/// k and k+1; for k = 0 negates window position 1.
SignedPermutation apply_generator_right(const SignedPermutation& sigma, int k);

}  // namespace bperm
