#pragma once

#include <cstdint>
#include <vector>

#include "antipal/digits.hpp"

namespace antipal {

// A number together with every base in which it is antipalindromic,
// ascending by base. The list always contains base 2*value+1, where any
// positive integer is a single digit pairing with itself to 2*value.
struct MultibaseReport {
  std::uint64_t value = 0;
  std::vector<DigitString> entries;

  bool operator==(const MultibaseReport&) const = default;
};

// Two bases witnessing that `value` is multi-base antipalindromic, with the
// verified expansion in each.
struct BasePairWitness {
  std::uint64_t value = 0;
  DigitString first;
  DigitString second;

  bool operator==(const BasePairWitness&) const = default;
};

// Full scan: every base b in [2, 2m+1] where m is antipalindromic. Bases in
// (m, 2m] can never qualify (the expansion is the single digit m, which
// pairs to 2m = b-1 only at b = 2m+1), so only [2, m] is actually walked.
MultibaseReport antipalindromic_bases(std::uint64_t m);

// For composite a = (a/n)*n with n its smallest prime factor: bases
// a/n + 1 (expansion (n-1)(a/n - n + 1)) and 2a + 1 (single digit a).
// Rejects 1 and primes.
BasePairWitness composite_two_bases(std::uint64_t a);

// a = (2n)! is antipalindromic in a/2+1, a/3+1, ..., a/(n+1)+1 and 2a+1.
// Report restricted to those n+1 constructed bases, each verified.
// n > 10 is rejected: 22! leaves the 64-bit domain.
MultibaseReport factorial_construction(std::uint64_t n);

// A number antipalindromic in `base` and in a second, smaller-than-value
// base: 12 for base 2 (also base 4), 72 for base 3 (also base 9), and
// 4*(base-1) for base >= 4 (digits (3)(b-4), and (1)(2b-3) in base 2b-1).
BasePairWitness paired_base_construction(std::uint64_t base);

// With d = gcd(p, q), p = p'*d, q = q'*d, p >= q' > 1 and q >= p' > 1:
// m = p'*q'*d is antipalindromic in p+1 ((q'-1)(p+1-q')) and in q+1
// ((p'-1)(q+1-p')). Violated preconditions name the failing inequality.
BasePairWitness gcd_construction(std::uint64_t p, std::uint64_t q);

// Width-n base-b blocks of an antipalindrome in base b^n.
struct BlockDecomposition {
  std::uint64_t value = 0;
  std::uint64_t block_base = 0;    // b
  std::uint64_t block_length = 0;  // n
  DigitString power_base_digits;   // expansion in b^n
  std::vector<std::vector<std::uint64_t>> blocks;  // zero-padded, width n each
  bool all_blocks_palindromic = false;
};

// Hypotheses (checked in this order, with distinct errors): the top base-b^n
// digit is at least b^(n-1), and m is antipalindromic in base b^n. Under
// them, m is antipalindromic in base b exactly when every width-n block is
// a palindrome; callers can cross-check the verdict against
// is_antipalindromic_number(m, b).
BlockDecomposition block_palindrome_check(std::uint64_t m, std::uint64_t base,
                                          std::uint64_t block_length);

// All m in [r.lo, r.hi) antipalindromic in both bases, ascending. Candidates
// are generated in the larger base (the sparser set) and filtered by the
// smaller: base-10 antipalindromes below 10^10 number ~10^5, against 10^10
// integers to scan the other way.
std::vector<std::uint64_t> common_antipalindromes_in_range(std::uint64_t base1,
                                                           std::uint64_t base2, SearchRange r);

std::vector<std::uint64_t> common_antipalindromes(std::uint64_t base1, std::uint64_t base2,
                                                  std::uint64_t limit);

}  // namespace antipal
