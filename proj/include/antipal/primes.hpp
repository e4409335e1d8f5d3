#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "antipal/digits.hpp"

namespace antipal {

// Exact primality for the full 64-bit domain: trial division by the small
// witnesses, then deterministic Miller-Rabin with the twelve-prime witness
// set {2,...,37}, which is proven complete far beyond 2^64. No probabilistic
// error is possible for any uint64 input.
bool is_prime(std::uint64_t n) noexcept;

// A prime whose base-3 expansion is an antipalindrome. Every such prime has
// an odd digit count >= 3, leading digit 1, and is congruent to 1 mod 6.
struct PrimeRecord {
  std::uint64_t value = 0;
  DigitString base3_digits;

  bool operator==(const PrimeRecord&) const = default;
};

// Ascending scan of [r.lo, r.hi). Candidates are generated directly from
// odd-digit-count antipalindromes with leading digit 1 (even digit counts
// give even values; a leading 2 forces divisibility by 3), then tested for
// primality - never the other way around, since antipalindromes are ~sqrt(N)
// dense.
void for_each_antipalindromic_prime_base3(SearchRange r,
                                          const std::function<void(const PrimeRecord&)>& fn);

std::vector<PrimeRecord> antipalindromic_primes_base3(SearchRange r);

// Antipalindromic primes in an arbitrary base, ascending. Base 2 has only
// p = 2; base 3 is the real search; any larger base admits at most the
// single-digit prime (b-1)/2 (odd base only).
std::vector<std::uint64_t> antipalindromic_primes_general(std::uint64_t base, SearchRange r);

}  // namespace antipal
