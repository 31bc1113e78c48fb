#include "bperm/constructions.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace bperm {

namespace {

void require_admissible(const PeakSet& s) {
  if (!is_admissible(s))
    throw Error(ErrorCode::inadmissible, "peak set " + s.str() + " has consecutive entries");
}

SignedPermutation checked(std::vector<int> w, const PeakSet& s, const char* what) {
  SignedPermutation result(std::move(w));
  if (!(peak_set(result) == s))
    throw std::logic_error(std::string(what) + " produced peak set " + peak_set(result).str() +
                           ", wanted " + s.str());
  return result;
}

std::vector<int> base_window(int n, bool negated, bool reverse) {
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int v = reverse ? n - i : i + 1;
    w[i] = negated ? -v : v;
  }
  return w;
}

// Positions are 1-based; admissibility keeps the swaps disjoint.
std::vector<int> with_swaps(std::vector<int> w, const PeakSet& s, int offset) {
  for (const int k : s.indices()) std::swap(w[k + offset - 1], w[k + offset]);
  return w;
}

}  // namespace

SignedPermutation e_of(const PeakSet& s) {
  require_admissible(s);
  return checked(with_swaps(base_window(s.ambient_size(), false, false), s, 0), s, "e_of");
}

SignedPermutation e_bar_of(const PeakSet& s) {
  require_admissible(s);
  return checked(with_swaps(base_window(s.ambient_size(), true, false), s, -1), s, "e_bar_of");
}

SignedPermutation e_star_of(const PeakSet& s) {
  require_admissible(s);
  return checked(with_swaps(base_window(s.ambient_size(), false, true), s, -1), s, "e_star_of");
}

SignedPermutation e_bar_star_of(const PeakSet& s) {
  require_admissible(s);
  return checked(with_swaps(base_window(s.ambient_size(), true, true), s, 0), s, "e_bar_star_of");
}

PermutationPair word_attainment_pair(const PeakSet& s) {
  require_admissible(s);
  const int n = s.ambient_size();
  std::vector<int> sig(static_cast<size_t>(n)), pi(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) {
    if (s.contains(j))
      sig[j - 1] = n - j + 2;
    else if (s.contains(j + 1))
      sig[j - 1] = -(n - j);
    else
      sig[j - 1] = n - j + 1;
    pi[j - 1] = s.contains(j) ? n - j + 1 : -(n - j + 1);
  }
  return {checked(std::move(sig), s, "word_attainment_pair.sigma"),
          checked(std::move(pi), s, "word_attainment_pair.pi")};
}

MinWitnesses min_witnesses(const PeakSet& s) {
  require_admissible(s);
  const SignedPermutation base = e_of(s);

  std::vector<int> tau(base.window());
  tau[0] = -tau[0];

  // Swap the values 1 and 2; both are positive in e[S].
  std::vector<int> rho(base.window());
  int p1 = -1, p2 = -1;
  for (int i = 0; i < base.size(); ++i) {
    if (rho[i] == 1) p1 = i;
    if (rho[i] == 2) p2 = i;
  }
  std::swap(rho[p1], rho[p2]);

  MinWitnesses out{base, checked(std::move(tau), s, "min_witnesses.tau"),
                   checked(std::move(rho), s, "min_witnesses.rho")};
  if (hamming(out.base, out.hamming_word_witness) != 1 ||
      word_distance(out.base, out.hamming_word_witness) != 1 ||
      l_infinity(out.base, out.linf_witness) != 1)
    throw std::logic_error("min_witnesses distance is not 1");
  return out;
}

PermutationPair max_witnesses(const PeakSet& s, MetricKind kind) {
  require_admissible(s);
  const int n = s.ambient_size();
  PermutationPair pair = [&]() -> PermutationPair {
    switch (kind) {
      case MetricKind::hamming:
        return {e_of(s), e_bar_of(s)};
      case MetricKind::l_inf:
        // 2 not in S puts +-n at position 1 of the starred pair; the
        // {2, n-1} case also uses it (n-1 at position 1 vs -n). Otherwise
        // position n of (e[S], ebar[S]) carries +-n.
        if (!s.contains(2) || s.contains(n - 1)) return {e_star_of(s), e_bar_star_of(s)};
        return {e_of(s), e_bar_of(s)};
      case MetricKind::word:
        return word_attainment_pair(s);
    }
    throw Error(ErrorCode::malformed_token, "bad metric kind");
  }();

  const int expected = [&] {
    switch (kind) {
      case MetricKind::hamming: return n;
      case MetricKind::l_inf: return s.contains(2) && s.contains(n - 1) ? 2 * n - 1 : 2 * n;
      default: return n * n - s.size();
    }
  }();
  if (distance(kind, pair.first, pair.second) != expected)
    throw std::logic_error("max_witnesses pair does not attain the predicted maximum");
  return pair;
}

}  // namespace bperm
