#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "bperm/constructions.hpp"
#include "bperm/extremal.hpp"
#include "bperm/peaks.hpp"
#include "bperm/signed_permutation.hpp"

using namespace bperm;

namespace {

void check_error(ErrorCode expected, const std::function<void()>& f) {
  try {
    f();
    FAIL_CHECK("expected an Error");
  } catch (const Error& e) {
    CHECK(e.code() == expected);
  }
}

PeakSet ps(std::vector<int> idx, int n) { return PeakSet(std::move(idx), n); }

}  // namespace

TEST_CASE("peak positions use signed comparison") {
  CHECK(peak_set(parse("-5 2 -4 3 -1")) == ps({2, 4}, 5));
  CHECK(peak_set(parse("2 4 3 5 1 7 6")) == ps({2, 4, 6}, 7));
  for (int n = 1; n <= 8; ++n) CHECK(peak_set(identity(n)).empty());
  CHECK(peak_set(parse("1")).empty());
  CHECK(peak_set(parse("-2 1")).empty());
}

TEST_CASE("PeakSet validation and text form") {
  CHECK(ps({}, 2).str() == "{}");
  CHECK(ps({2, 4}, 5).str() == "{2,4}");
  CHECK(PeakSet::parse("{2,4}", 5) == ps({2, 4}, 5));
  CHECK(PeakSet::parse("{2, 4}", 5) == ps({2, 4}, 5));
  CHECK(PeakSet::parse("{}", 5) == PeakSet(5));
  CHECK(PeakSet::parse("\xE2\x88\x85", 5) == PeakSet(5));  // the empty-set symbol
  check_error(ErrorCode::out_of_range, [] { ps({1}, 5); });
  check_error(ErrorCode::out_of_range, [] { ps({5}, 5); });
  check_error(ErrorCode::malformed_token, [] { ps({3, 2}, 5); });
  check_error(ErrorCode::malformed_token, [] { ps({2, 2}, 5); });
  check_error(ErrorCode::malformed_token, [] { PeakSet::parse("2,4", 5); });
  check_error(ErrorCode::malformed_token, [] { PeakSet::parse("{2,}", 5); });
  check_error(ErrorCode::malformed_token, [] { PeakSet::parse("{a}", 5); });
}

TEST_CASE("admissibility is the no-consecutive-entries criterion") {
  CHECK(is_admissible(ps({2, 4}, 5)));
  CHECK_FALSE(is_admissible(ps({2, 3}, 5)));
  CHECK(is_admissible(ps({}, 2)));

  // Cross-check against brute force: a subset of {2..n-1} is admissible
  // exactly when some element realizes it as its peak set.
  for (int n = 2; n <= 6; ++n) {
    std::set<std::vector<int>> realized;
    GroupStream stream(n);
    while (auto sigma = stream.next()) realized.insert(peak_set(*sigma).indices());

    const int interior = n - 2;
    for (unsigned mask = 0; mask < (1u << interior); ++mask) {
      std::vector<int> idx;
      for (int b = 0; b < interior; ++b)
        if (mask & (1u << b)) idx.push_back(b + 2);
      const bool admissible = is_admissible(ps(idx, n));
      CHECK(admissible == realized.contains(idx));
    }
  }
}

TEST_CASE("admissible_sets enumerates in (cardinality, lex) order") {
  const auto sets5 = admissible_sets(5);
  REQUIRE(sets5.size() == 5);
  CHECK(sets5[0] == ps({}, 5));
  CHECK(sets5[1] == ps({2}, 5));
  CHECK(sets5[2] == ps({3}, 5));
  CHECK(sets5[3] == ps({4}, 5));
  CHECK(sets5[4] == ps({2, 4}, 5));

  CHECK(admissible_sets(3) == std::vector<PeakSet>{ps({}, 3), ps({2}, 3)});
  const auto sets6 = admissible_sets(6);
  REQUIRE(sets6.size() == 8);
  CHECK(sets6[5] == ps({2, 4}, 6));
  CHECK(sets6[6] == ps({2, 5}, 6));
  CHECK(sets6[7] == ps({3, 5}, 6));

  CHECK(admissible_sets(2).size() == 1);
  CHECK(admissible_sets(4).size() == 3);
  check_error(ErrorCode::invalid_size, [] { admissible_sets(1); });

  for (int n = 2; n <= 8; ++n)
    for (const PeakSet& s : admissible_sets(n)) CHECK(peak_set(e_of(s)) == s);
}

TEST_CASE("value swap preserves the peak set") {
  const SignedPermutation sigma = parse("1 3 2 5 4");
  const SignedPermutation swapped = peak_preserving_value_swap(sigma, 3);
  CHECK(swapped == parse("1 4 2 5 3"));
  CHECK(peak_set(swapped) == ps({2, 4}, 5));

  check_error(ErrorCode::adjacent_values, [&] { peak_preserving_value_swap(sigma, 2); });
  check_error(ErrorCode::value_out_of_range, [&] { peak_preserving_value_swap(sigma, 5); });
  check_error(ErrorCode::value_out_of_range, [&] { peak_preserving_value_swap(sigma, 1); });

  CHECK(peak_preserving_value_swap(parse("2 1 3"), 2) == parse("3 1 2"));
}

TEST_CASE("value swap soundness, exhaustive n <= 6") {
  for (int n = 3; n <= 6; ++n) {
    GroupStream stream(n);
    while (auto sigma = stream.next()) {
      const auto& w = sigma->window();
      for (int value = 2; value <= n - 1; ++value) {
        int p = -1, q = -1;
        for (int i = 0; i < n; ++i) {
          if (std::abs(w[i]) == value) p = i;
          if (std::abs(w[i]) == value + 1) q = i;
        }
        if (std::abs(p - q) == 1) continue;
        // The call itself re-checks peak equality and throws on violation.
        CHECK_NOTHROW(peak_preserving_value_swap(*sigma, value));
      }
    }
  }
}

TEST_CASE("barred top-value swap") {
  CHECK(bar_n_swap(parse("-5 2 -4 3 -1")) == parse("-4 2 -5 3 -1"));
  CHECK(peak_set(bar_n_swap(parse("-5 2 -4 3 -1"))) == ps({2, 4}, 5));
  CHECK(bar_n_swap(parse("-2 -3 1")) == parse("-3 -2 1"));
  check_error(ErrorCode::values_absent, [] { bar_n_swap(parse("1 2 3")); });
  check_error(ErrorCode::values_absent, [] { bar_n_swap(parse("-3 2 1")); });

  for (int n = 2; n <= 6; ++n) {
    GroupStream stream(n);
    while (auto sigma = stream.next()) {
      const auto& w = sigma->window();
      bool top = false, second = false;
      for (const int v : w) {
        top |= (v == -n);
        second |= (v == -(n - 1));
      }
      if (top && second) CHECK_NOTHROW(bar_n_swap(*sigma));
    }
  }
}

TEST_CASE("classes partition the group") {
  for (int n = 2; n <= 6; ++n) {
    std::map<std::vector<int>, std::uint64_t> sizes;
    GroupStream stream(n);
    std::uint64_t total = 0;
    while (auto sigma = stream.next()) {
      ++sizes[peak_set(*sigma).indices()];
      ++total;
    }
    CHECK(total == stream.total());
    std::uint64_t sum = 0;
    for (const PeakSet& s : admissible_sets(n)) sum += sizes.at(s.indices());
    CHECK(sum == total);  // admissible classes cover everything
  }
}
