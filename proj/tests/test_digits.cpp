#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "antipal/digits.hpp"
#include "antipal/enumerate.hpp"
#include "oracles.hpp"

using namespace antipal;
using D = std::vector<std::uint64_t>;

TEST_CASE("to_digits produces canonical expansions") {
  CHECK(to_digits(1581, 3).digits == D{2, 0, 1, 1, 1, 2, 0});
  CHECK(to_digits(52, 2).digits == D{1, 1, 0, 1, 0, 0});
  CHECK(to_digits(7, 10).digits == D{7});
  CHECK(to_digits(3276, 64).digits == D{51, 12});
  CHECK(to_digits(1, 18446744073709551615ull).digits == D{1});

  CHECK_THROWS_AS(to_digits(0, 10), std::invalid_argument);
  CHECK_THROWS_AS(to_digits(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(to_digits(5, 0), std::invalid_argument);
}

TEST_CASE("from_digits inverts to_digits and rejects junk") {
  CHECK(from_digits(DigitString{2, {1, 0}}) == 2);
  CHECK(from_digits(DigitString{3, {1, 1, 1}}) == 13);
  CHECK(from_digits(DigitString{10, {3, 2, 7, 6}}) == 3276);

  CHECK_THROWS_AS(from_digits(DigitString{10, {}}), std::invalid_argument);
  CHECK_THROWS_AS(from_digits(DigitString{10, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(from_digits(DigitString{10, {10}}), std::invalid_argument);

  DigitString too_big{2, D(65, 1)};
  CHECK_THROWS_AS(from_digits(too_big), std::overflow_error);
}

TEST_CASE("round-trip over m in [1,1e6], bases 2..16") {
  for (std::uint64_t b = 2; b <= 16; ++b)
    for (std::uint64_t m = 1; m <= 1000000; ++m)
      if (from_digits(to_digits(m, b)) != m) {
        FAIL("round-trip broke at m=", m, " b=", b);
      }
}

TEST_CASE("palindrome predicate") {
  CHECK(is_palindrome(DigitString{10, {1, 2, 1}}));
  CHECK_FALSE(is_palindrome(to_digits(52, 2)));
  CHECK(is_palindrome(DigitString{3, {1, 1, 1}}));
}

TEST_CASE("antipalindrome predicate") {
  CHECK(is_antipalindrome(DigitString{10, {3, 9, 5, 4, 0, 6}}));
  CHECK(is_antipalindrome(DigitString{3, {1}}));
  CHECK_FALSE(is_antipalindrome(DigitString{2, {1}}));
  CHECK(is_antipalindromic_number(3276, 10));
  CHECK_FALSE(is_antipalindromic_number(3276, 3));
  CHECK(is_antipalindromic_number(395406, 10));
  CHECK(is_antipalindromic_number(1581, 3));
  CHECK(is_antipalindromic_number(52, 2));
}

TEST_CASE("every m is antipalindromic in base 2m+1") {
  for (std::uint64_t m = 1; m <= 5000; ++m)
    CHECK(is_antipalindromic_number(m, 2 * m + 1));
}

TEST_CASE("predicates agree with the definitional oracle") {
  for (std::uint64_t b = 2; b <= 12; ++b)
    for (std::uint64_t m = 1; m <= 20000; ++m) {
      CHECK(is_antipalindromic_number(m, b) == oracle::ref_is_antipalindromic(m, b));
      CHECK(is_palindromic_number(m, b) == oracle::ref_is_palindromic(m, b));
    }
}

TEST_CASE("complement examples") {
  CHECK(antipalindromic_complement(D{3, 2, 7, 6}, 10) == D{3, 2, 7, 6});
  CHECK(antipalindromic_complement(D{0, 1, 0}, 3) == D{2, 1, 2});
  CHECK(antipalindromic_complement(D{51}, 64) == D{12});
}

TEST_CASE("complement is an involution and fixes exactly the antipalindromes") {
  std::mt19937_64 rng(20240901);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint64_t base = 2 + rng() % 120;
    const std::size_t len = 1 + rng() % 10;
    D u(len);
    for (auto& d : u) d = rng() % base;  // leading zeros allowed
    CHECK(antipalindromic_complement(antipalindromic_complement(u, base), base) == u);
  }
  for (std::uint64_t b = 2; b <= 11; ++b)
    for (std::uint64_t m = 1; m <= 3000; ++m) {
      DigitString d = to_digits(m, b);
      const bool fixed = antipalindromic_complement(d.digits, b) == d.digits;
      CHECK(fixed == is_antipalindrome(d));
    }
}

TEST_CASE("guaranteed divisor by digit-count shape") {
  CHECK(guaranteed_divisor(10, 4) == 9);
  CHECK(guaranteed_divisor(3, 5) == 1);
  CHECK(guaranteed_divisor(28, 2) == 27);
  CHECK(guaranteed_divisor(3, 1) == 1);
  CHECK_THROWS_AS(guaranteed_divisor(10, 3), std::invalid_argument);
  CHECK_THROWS_AS(guaranteed_divisor(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(guaranteed_divisor(10, 0), std::invalid_argument);
  CHECK_THROWS_AS(guaranteed_divisor(1, 2), std::invalid_argument);
}

TEST_CASE("every antipalindrome in bases 2..12 below 1e6 is divisible by its guaranteed divisor") {
  for (std::uint64_t b = 2; b <= 12; ++b)
    for (std::uint64_t m : antipalindromes_in_range(b, SearchRange{1, 1000000})) {
      const auto len = static_cast<std::uint64_t>(digit_count(m, b));
      CHECK(m % guaranteed_divisor(b, len) == 0);
    }
}

TEST_CASE("odd digit counts force an odd base and the middle digit (b-1)/2") {
  for (std::uint64_t b = 2; b <= 12; ++b)
    for (std::uint64_t m : oracle::brute_antipalindromes(b, 1, 100000)) {
      DigitString d = to_digits(m, b);
      if (d.digits.size() % 2 == 1) {
        CHECK(b % 2 == 1);
        CHECK(d.digits[d.digits.size() / 2] == (b - 1) / 2);
      }
    }
}

TEST_CASE("palindromic and antipalindromic at once means constant digits (b-1)/2") {
  for (std::uint64_t b : {3ull, 5ull, 7ull, 9ull})
    for (std::uint64_t m = 1; m <= 100000; ++m) {
      DigitString d = to_digits(m, b);
      const bool both = is_palindrome(d) && is_antipalindrome(d);
      bool constant_mid = true;
      for (std::uint64_t digit : d.digits)
        if (digit != (b - 1) / 2) constant_mid = false;
      CHECK(both == constant_mid);
    }
}

TEST_CASE("digit-sum divisibility by b-1 matches divisibility of the number") {
  for (std::uint64_t b = 3; b <= 12; ++b)
    for (std::uint64_t m = 1; m <= 100000; ++m) {
      std::uint64_t sum = 0;
      for (std::uint64_t digit : to_digits(m, b).digits) sum += digit;
      CHECK((m % (b - 1) == 0) == (sum % (b - 1) == 0));
    }
}
