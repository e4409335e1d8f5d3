#pragma once

#include <cstdint>
#include <vector>

#include "antipal/digits.hpp"

namespace antipal {

// An exact k-th power that is antipalindromic in `base`.
struct PowerHit {
  std::uint64_t base = 0;
  std::uint64_t exponent = 0;
  std::uint64_t root = 0;
  std::uint64_t value = 0;  // root^exponent, exact
  DigitString digits;

  bool operator==(const PowerHit&) const = default;
};

// floor(x^(1/k)) by pure integer binary search; no floating point anywhere
// near the decision, so limits like 10^15 are handled exactly.
std::uint64_t integer_kth_root(std::uint64_t x, std::uint64_t k);

// Exact binomial coefficient; throws std::overflow_error when it leaves the
// 64-bit domain.
std::uint64_t binomial_coefficient(std::uint64_t n, std::uint64_t k);

// All m >= 1 with m^k < limit and m^k antipalindromic in `base`, ascending
// by value. Roots run from 1 to the exact integer k-th root of limit-1.
std::vector<PowerHit> antipalindromic_powers(std::uint64_t base, std::uint64_t exponent,
                                             std::uint64_t limit);

std::uint64_t count_antipalindromic_powers(std::uint64_t base, std::uint64_t exponent,
                                           std::uint64_t limit);

// Root-range slice of the same search, for callers that partition work.
// Counts are associative sums over disjoint slices.
std::uint64_t count_antipalindromic_powers_in_root_range(std::uint64_t base,
                                                         std::uint64_t exponent,
                                                         std::uint64_t limit,
                                                         std::uint64_t root_lo,
                                                         std::uint64_t root_hi);
std::vector<PowerHit> antipalindromic_powers_in_root_range(std::uint64_t base,
                                                           std::uint64_t exponent,
                                                           std::uint64_t limit,
                                                           std::uint64_t root_lo,
                                                           std::uint64_t root_hi);

// (m*n)^k in base n^k + 1, for 2 <= m <= n: always the two-digit
// antipalindrome (m^k - 1)(b - m^k). The digits are built from that closed
// form and re-checked against positional expansion.
PowerHit construct_power_family(std::uint64_t n, std::uint64_t k, std::uint64_t m);

// The bound c = C(k, (k-1)/2) * m^k above which every base admits the
// antipalindromic odd power [m*(b-1)]^k.
std::uint64_t odd_power_base_bound(std::uint64_t m, std::uint64_t k);

// [m*(b-1)]^k for odd k > 1, m > 1, base >= odd_power_base_bound(m, k).
// Digits come from the alternating binomial expansion
//   (m^k*C(k,0) - 1) (b - m^k*C(k,1)) (m^k*C(k,2) - 1) ... (b - m^k*C(k,k))
// and must agree with the positional expansion of the value; both routes are
// computed and compared.
PowerHit construct_odd_power(std::uint64_t m, std::uint64_t k, std::uint64_t base);

}  // namespace antipal
