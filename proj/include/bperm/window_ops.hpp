#pragma once

// Allocation-free kernels on raw one-line windows. The extremal engine calls
// these ~10^8 times per long-run table scan, so they take pointers + length
// and never touch the heap. Windows are 0-indexed arrays of signed entries
// with |entry| in {1..n}; T is any signed integer type wide enough for 2n.

#include <cstdint>

namespace bperm::wops {

template <class T>
inline void compose_into(T* out, const T* tau, const T* sigma, int n) {
  for (int i = 0; i < n; ++i) {
    const T s = sigma[i];
    out[i] = s > 0 ? tau[s - 1] : static_cast<T>(-tau[-s - 1]);
  }
}

template <class T>
inline void inverse_into(T* out, const T* w, int n) {
  for (int j = 0; j < n; ++j) {
    const T v = w[j];
    if (v > 0)
      out[v - 1] = static_cast<T>(j + 1);
    else
      out[-v - 1] = static_cast<T>(-(j + 1));
  }
}

template <class T>
inline int hamming(const T* a, const T* b, int n) {
  int d = 0;
  for (int i = 0; i < n; ++i) d += (a[i] != b[i]);
  return d;
}

template <class T>
inline int l_inf(const T* a, const T* b, int n) {
  int d = 0;
  for (int i = 0; i < n; ++i) {
    const int diff = a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
    if (diff > d) d = diff;
  }
  return d;
}

template <class T>
inline int negatives(const T* w, int n) {
  int c = 0;
  for (int i = 0; i < n; ++i) c += (w[i] < 0);
  return c;
}

template <class T>
inline int inversions(const T* w, int n) {
  int c = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) c += (w[i] > w[j]);
  return c;
}

template <class T>
inline int negative_sum_pairs(const T* w, int n) {
  int c = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) c += (w[i] + w[j] < 0);
  return c;
}

/// neg + inv + nsp in one fused pass; equals the Coxeter length l_B.
template <class T>
inline int length_b(const T* w, int n) {
  int c = 0;
  for (int i = 0; i < n; ++i) {
    c += (w[i] < 0);
    for (int j = i + 1; j < n; ++j) c += (w[i] > w[j]) + (w[i] + w[j] < 0);
  }
  return c;
}

/// Word distance with the right factor's inverse precomputed:
/// l_B(inv_rho o sigma). `scratch` must hold n entries.
template <class T>
inline int word_with_inverse(const T* inv_rho, const T* sigma, int n, T* scratch) {
  compose_into(scratch, inv_rho, sigma, n);
  return length_b(scratch, n);
}

/// 2^n * n! for n <= 8 (fits comfortably in 64 bits).
std::uint64_t group_order(int n);

/// Dense mixed-radix rank in [0, 2^n * n!): Lehmer code of the magnitude
/// permutation, scaled by 2^n, plus the sign bitmask (bit i set iff w[i] < 0).
template <class T>
inline std::uint64_t rank(const T* w, int n) {
  std::uint64_t perm_rank = 0;
  std::uint64_t signs = 0;
  for (int i = 0; i < n; ++i) {
    const int mi = w[i] > 0 ? w[i] : -w[i];
    int smaller_later = 0;
    for (int j = i + 1; j < n; ++j) {
      const int mj = w[j] > 0 ? w[j] : -w[j];
      smaller_later += (mj < mi);
    }
    perm_rank = perm_rank * (n - i) + smaller_later;
    if (w[i] < 0) signs |= (std::uint64_t{1} << i);
  }
  return (perm_rank << n) | signs;
}

}  // namespace bperm::wops
