#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "bperm/extremal.hpp"
#include "bperm/metrics.hpp"
#include "bperm/signed_permutation.hpp"
#include "support.hpp"

using namespace bperm;
using testsupport::kPropertySeed;
using testsupport::random_perm;

namespace {

void check_error(ErrorCode expected, const std::function<void()>& f) {
  try {
    f();
    FAIL_CHECK("expected an Error");
  } catch (const Error& e) {
    CHECK(e.code() == expected);
  }
}

}  // namespace

TEST_CASE("hamming counts disagreeing positions") {
  CHECK(hamming(parse("2 1 5 4 3"), parse("3 2 4 1 5")) == 5);
  CHECK(hamming(identity(4), parse("-1 2 3 4")) == 1);
  CHECK(hamming(identity(4), parse("2 3 4 1")) == 4);
  check_error(ErrorCode::size_mismatch, [] { hamming(identity(3), identity(4)); });
}

TEST_CASE("l_infinity takes the max entrywise gap") {
  CHECK(l_infinity(parse("2 1 5 4 3"), parse("3 2 4 1 5")) == 3);
  CHECK(l_infinity(parse("4 3 2 1"), parse("-4 3 2 1")) == 8);
  const SignedPermutation sigma = parse("-5 2 -4 3 -1");
  CHECK(l_infinity(sigma, sigma) == 0);
  check_error(ErrorCode::size_mismatch, [] { l_infinity(identity(3), identity(4)); });
}

TEST_CASE("window statistics") {
  const SignedPermutation sigma = parse("2 1 -4 3");
  CHECK(negatives(sigma) == 1);
  CHECK(inversions(sigma) == 3);
  CHECK(negative_sum_pairs(sigma) == 3);
  CHECK(length_b(sigma) == 7);

  for (int n = 1; n <= 8; ++n) {
    CHECK(negatives(identity(n)) == 0);
    CHECK(inversions(identity(n)) == 0);
    CHECK(negative_sum_pairs(identity(n)) == 0);
    CHECK(length_b(identity(n)) == 0);
    CHECK(length_b(identity(n).barred()) == n * n);
  }
  const SignedPermutation all_barred = parse("-1 -2 -3");
  CHECK(negatives(all_barred) == 3);
  CHECK(inversions(all_barred) == 3);
  CHECK(negative_sum_pairs(all_barred) == 3);
}

TEST_CASE("word distance via the cached-inverse composition") {
  // The value for the 21543/32415 pair is derived, not quoted: the BFS
  // oracle below certifies length_b, and length_b(rho^-1 sigma) = 6.
  const SignedPermutation sigma = parse("2 1 5 4 3");
  const SignedPermutation rho = parse("3 2 4 1 5");
  CHECK(compose(rho.inverse(), sigma) == parse("2 4 5 3 1"));
  CHECK(word_distance(sigma, rho) == 6);

  for (int n = 2; n <= 8; ++n) CHECK(word_distance(identity(n), identity(n).barred()) == n * n);

  CHECK(word_distance(parse("-7 8 6 -4 5 3 2 1"), parse("-8 7 -6 -5 4 -3 -2 -1")) == 62);
  check_error(ErrorCode::size_mismatch, [] { word_distance(identity(3), identity(4)); });
}

TEST_CASE("distance dispatch") {
  const SignedPermutation sigma = parse("2 1 5 4 3");
  const SignedPermutation rho = parse("3 2 4 1 5");
  CHECK(distance(MetricKind::hamming, sigma, rho) == 5);
  CHECK(distance(MetricKind::l_inf, sigma, rho) == 3);
  CHECK(distance(MetricKind::word, sigma, rho) == 6);
}

TEST_CASE("metric names") {
  CHECK(parse_metric("hamming") == MetricKind::hamming);
  CHECK(parse_metric("l-inf") == MetricKind::l_inf);
  CHECK(parse_metric("linf") == MetricKind::l_inf);
  CHECK(parse_metric("word") == MetricKind::word);
  CHECK(std::string(to_string(MetricKind::l_inf)) == "linf");
  check_error(ErrorCode::malformed_token, [] { parse_metric("euclid"); });
}

TEST_CASE("metric axioms on sampled triples") {
  std::mt19937_64 rng(kPropertySeed);
  constexpr MetricKind kinds[] = {MetricKind::hamming, MetricKind::l_inf, MetricKind::word};
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = testsupport::random_size(rng);
    const SignedPermutation a = random_perm(rng, n);
    const SignedPermutation b = random_perm(rng, n);
    const SignedPermutation c = random_perm(rng, n);
    for (const MetricKind kind : kinds) {
      CHECK(distance(kind, a, a) == 0);
      const int ab = distance(kind, a, b);
      CHECK((a == b || ab > 0));
      CHECK(ab == distance(kind, b, a));
      CHECK(ab <= distance(kind, a, c) + distance(kind, c, b));
    }
    CHECK(distance(MetricKind::hamming, a, b) <= n);
    CHECK(distance(MetricKind::l_inf, a, b) <= 2 * n);
    CHECK(distance(MetricKind::word, a, b) <= n * n);
  }
}

TEST_CASE("word metric is left-invariant") {
  std::mt19937_64 rng(kPropertySeed);
  for (int trial = 0; trial < 5000; ++trial) {
    const int n = testsupport::random_size(rng);
    const SignedPermutation a = random_perm(rng, n);
    const SignedPermutation b = random_perm(rng, n);
    const SignedPermutation t = random_perm(rng, n);
    CHECK(word_distance(a, b) == word_distance(compose(t, a), compose(t, b)));
  }
}

TEST_CASE("length is inverse-symmetric and complements under barring") {
  for (int n = 2; n <= 4; ++n) {
    GroupStream stream(n);
    while (auto gamma = stream.next()) {
      CHECK(length_b(*gamma) == length_b(gamma->inverse()));
      CHECK(length_b(*gamma) + length_b(gamma->barred()) == n * n);
    }
  }
}

TEST_CASE("opposite-distance identity") {
  std::mt19937_64 rng(kPropertySeed);
  for (int trial = 0; trial < 5000; ++trial) {
    const int n = testsupport::random_size(rng);
    const SignedPermutation alpha = random_perm(rng, n);
    const SignedPermutation beta = random_perm(rng, n);
    const SignedPermutation opposite = alpha.barred();
    CHECK(word_distance(alpha, opposite) == n * n);
    CHECK(word_distance(alpha, beta) + word_distance(opposite, beta) == n * n);
  }
}

TEST_CASE("BFS oracle") {
  const DistanceTable t2 = bfs_word_lengths(2);
  CHECK(t2.element_count() == 8);
  CHECK(t2.at(identity(2)) == 0);
  CHECK(t2.at(parse("-1 -2")) == 4);

  for (int n = 2; n <= 4; ++n) {
    const DistanceTable table = bfs_word_lengths(n);
    for (int k = 0; k < n; ++k) CHECK(table.at(generator(n, k)) == 1);
    GroupStream stream(n);
    std::uint64_t seen = 0;
    while (auto gamma = stream.next()) {
      CHECK(table.at(*gamma) == length_b(*gamma));
      ++seen;
    }
    CHECK(seen == table.element_count());
  }

  const DistanceTable t4 = bfs_word_lengths(4);
  CHECK(t4.at(parse("2 1 -4 3")) == 7);

  // Generator steps move exactly one BFS layer.
  const DistanceTable t3 = bfs_word_lengths(3);
  GroupStream stream(3);
  while (auto u = stream.next()) {
    for (int k = 0; k < 3; ++k) {
      const int diff = t3.at(apply_generator_right(*u, k)) - t3.at(*u);
      CHECK((diff == 1 || diff == -1));
    }
  }

  check_error(ErrorCode::size_cap, [] { bfs_word_lengths(1); });
  check_error(ErrorCode::size_cap, [] { bfs_word_lengths(7); });
  check_error(ErrorCode::size_mismatch, [&] { t2.at(identity(3)); });
}
