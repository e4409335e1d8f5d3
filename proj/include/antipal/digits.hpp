#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace antipal {

// Canonical base-b expansion of a positive integer, most-significant digit
// first: base >= 2, at least one digit, every digit < base, leading digit
// nonzero. A number m is antipalindromic in base b when every digit pair
// satisfies d[i] + d[n-1-i] = b - 1.
struct DigitString {
  std::uint64_t base = 0;
  std::vector<std::uint64_t> digits;

  bool operator==(const DigitString&) const = default;
};

// Half-open interval [lo, hi) of positive integers; lo >= 1, hi >= lo.
struct SearchRange {
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
};

void validate_range(const SearchRange& r);
void validate_base(std::uint64_t base);

inline constexpr int kMaxDigits = 64;  // base 2 is the worst case

// Little-endian digit extraction into a caller-provided buffer; returns the
// digit count. Allocation-free on purpose: this sits inside every search
// loop in the project.
inline int extract_digits(std::uint64_t m, std::uint64_t base,
                          std::uint64_t (&out)[kMaxDigits]) {
  int n = 0;
  while (m > 0) {
    out[n++] = m % base;
    m /= base;
  }
  return n;
}

int digit_count(std::uint64_t m, std::uint64_t base);

inline bool is_antipalindromic_number(std::uint64_t m, std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("is_antipalindromic_number: base must be >= 2");
  if (m == 0) throw std::invalid_argument("is_antipalindromic_number: m must be positive");
  std::uint64_t d[kMaxDigits];
  const int n = extract_digits(m, base, d);
  const std::uint64_t want = base - 1;
  for (int i = 0, j = n - 1; i <= j; ++i, --j) {
    // written as a subtraction so huge bases can never wrap the sum
    if (d[i] > want || d[j] != want - d[i]) return false;
  }
  return true;
}

inline bool is_palindromic_number(std::uint64_t m, std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("is_palindromic_number: base must be >= 2");
  if (m == 0) throw std::invalid_argument("is_palindromic_number: m must be positive");
  std::uint64_t d[kMaxDigits];
  const int n = extract_digits(m, base, d);
  for (int i = 0, j = n - 1; i < j; ++i, --j)
    if (d[i] != d[j]) return false;
  return true;
}

// Canonical expansion of m >= 1. Rejects m = 0 and base < 2.
DigitString to_digits(std::uint64_t m, std::uint64_t base);

// Exact inverse of to_digits; throws std::overflow_error when the value
// leaves the 64-bit domain.
std::uint64_t from_digits(const DigitString& d);

// Predicates on an already-valid DigitString.
bool is_palindrome(const DigitString& d);
bool is_antipalindrome(const DigitString& d);

// Reversed, digitwise (base-1)-complemented sequence. Input and output are
// raw digit sequences: leading zeros are allowed on both sides, which the
// fixed-width block machinery relies on. Involution: applying it twice
// returns the input. Antipalindromes are exactly its fixed points.
std::vector<std::uint64_t> antipalindromic_complement(
    std::span<const std::uint64_t> digits, std::uint64_t base);

// Divisor guaranteed for every antipalindrome of the given shape:
// base-1 for an even digit count, (base-1)/2 for an odd digit count (which
// forces an odd base). Odd digit count with an even base is rejected: no
// such antipalindrome exists.
std::uint64_t guaranteed_divisor(std::uint64_t base, std::uint64_t digit_count);

}  // namespace antipal
