#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "antipal/enumerate.hpp"
#include "oracles.hpp"

using namespace antipal;
using V = std::vector<std::uint64_t>;

TEST_CASE("small ranges match hand-checked values") {
  CHECK(antipalindromes_in_range(3, {1, 30}) == V{1, 4, 6, 13, 21});
  CHECK(antipalindromes_in_range(2, {1, 16}) == V{2, 10, 12});
  CHECK(antipalindromes_in_range(10, {3270, 3280}) == V{3276});
}

TEST_CASE("stream equals the brute-force filter for bases 2..12") {
  for (std::uint64_t b = 2; b <= 12; ++b)
    CHECK(antipalindromes_in_range(b, {1, 30000}) == oracle::brute_antipalindromes(b, 1, 30000));
}

TEST_CASE("stream output is strictly ascending across length boundaries") {
  AntipalindromeStream s(3, 1);
  std::uint64_t prev = 0;
  for (int i = 0; i < 500; ++i) {
    auto v = s.next();
    REQUIRE(v.has_value());
    CHECK(*v > prev);
    prev = *v;
  }
}

TEST_CASE("lazy stream production") {
  AntipalindromeStream s(2, 1);
  CHECK(s.next() == 2);
  CHECK(s.next() == 10);
  CHECK(s.next() == 12);
}

TEST_CASE("range splitting merges to the identical stream") {
  const std::uint64_t lo = 1, hi = 100000;
  const auto whole = antipalindromes_in_range(5, {lo, hi});
  V merged;
  const std::uint64_t step = (hi - lo) / 7 + 1;
  for (std::uint64_t a = lo; a < hi; a += step) {
    const auto part = antipalindromes_in_range(5, {a, std::min(a + step, hi)});
    merged.insert(merged.end(), part.begin(), part.end());
  }
  CHECK(merged == whole);
}

TEST_CASE("counts by length follow the closed form") {
  CHECK(count_antipalindromes_with_length(2, 2) == 1);
  CHECK(count_antipalindromes_with_length(3, 3) == 2);
  CHECK(count_antipalindromes_with_length(10, 3) == 0);
  CHECK(count_antipalindromes_with_length(3, 1) == 1);
  CHECK(count_antipalindromes_with_length(4, 1) == 0);
  CHECK_THROWS_AS(count_antipalindromes_with_length(2, 130), std::overflow_error);
  CHECK_THROWS_AS(count_antipalindromes_with_length(10, 0), std::invalid_argument);
}

TEST_CASE("counts agree with the constructed stream for bases 2..7, lengths 1..8") {
  for (std::uint64_t b = 2; b <= 7; ++b) {
    std::vector<std::uint64_t> per_length(9, 0);
    AntipalindromeStream s(b, 1);
    while (auto v = s.next()) {
      const auto len = static_cast<std::uint64_t>(digit_count(*v, b));
      if (len > 8) break;
      ++per_length[len];
    }
    for (std::uint64_t len = 1; len <= 8; ++len)
      CHECK(count_antipalindromes_with_length(b, len) == per_length[len]);
  }
}

TEST_CASE("next_antipalindrome matches hand-checked successors") {
  CHECK(next_antipalindrome(10, 3276) == 3366);
  CHECK(next_antipalindrome(3, 1) == 4);
  CHECK(next_antipalindrome(2, 2) == 10);
  CHECK(next_antipalindrome(10, 1) == 18);
}

TEST_CASE("successor walk agrees with brute force") {
  for (std::uint64_t b : {2ull, 3ull, 4ull, 5ull, 10ull}) {
    const auto all = oracle::brute_antipalindromes(b, 1, 5000);
    std::uint64_t cur = 0;
    for (std::uint64_t expected : all) {
      cur = next_antipalindrome(b, cur);
      CHECK(cur == expected);
    }
  }
}

TEST_CASE("successor beyond the 64-bit domain signals overflow") {
  constexpr std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
  CHECK_THROWS_AS(next_antipalindrome(2, top), std::overflow_error);
  CHECK_THROWS_AS(next_antipalindrome(2, top - 1), std::overflow_error);
  AntipalindromeStream s(2, top);
  CHECK_FALSE(s.next().has_value());
}

TEST_CASE("prefix construction covers the expansion layout") {
  CHECK(antipalindrome_from_prefix(3, 3, 1) == 13);   // 111
  CHECK(antipalindrome_from_prefix(3, 3, 2) == 21);   // 210
  CHECK(antipalindrome_from_prefix(2, 4, 2) == 10);   // 1010
  CHECK(antipalindrome_from_prefix(3, 1, 0) == 1);
  CHECK_THROWS_AS(antipalindrome_from_prefix(3, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(antipalindrome_from_prefix(3, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(antipalindrome_from_prefix(10, 3, 1), std::invalid_argument);
}

TEST_CASE("stream positioning lands on the first antipalindrome >= start") {
  for (std::uint64_t b : {2ull, 3ull, 4ull, 9ull, 10ull}) {
    const auto all = oracle::brute_antipalindromes(b, 1, 4000);
    for (std::uint64_t first = 1; first < 3000; ++first) {
      AntipalindromeStream s(b, first);
      const auto got = s.next();
      auto it = std::lower_bound(all.begin(), all.end(), first);
      REQUIRE(it != all.end());
      CHECK(*got == *it);
    }
  }
}

TEST_CASE("range validation") {
  CHECK_THROWS_AS(antipalindromes_in_range(10, {0, 5}), std::invalid_argument);
  CHECK_THROWS_AS(antipalindromes_in_range(10, {7, 3}), std::invalid_argument);
  CHECK(antipalindromes_in_range(10, {5, 5}).empty());
  CHECK_THROWS_AS(antipalindromes_in_range(1, {1, 5}), std::invalid_argument);
}
