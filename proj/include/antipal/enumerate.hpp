#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "antipal/digits.hpp"

namespace antipal {

// Antipalindromes are constructed, never filtered. For digit count L the
// first ceil(L/2) digits determine the rest through d[i] + d[L-1-i] = b-1,
// so the generator walks the free prefix (first digit nonzero; for odd L
// the middle digit is forced to (b-1)/2, which needs an odd base) in
// numeric order. Every L-digit value precedes every (L+1)-digit value, and
// within a length the value grows with the prefix, so the stream is
// strictly ascending. Production is lazy: a scan to 2^64-1 costs only what
// the caller consumes.
class AntipalindromeStream {
 public:
  // Positioned on the smallest antipalindrome >= first (first = 0 acts as 1).
  AntipalindromeStream(std::uint64_t base, std::uint64_t first);

  // Next value in ascending order; nullopt once values leave the 64-bit domain.
  std::optional<std::uint64_t> next();

  std::uint64_t base() const { return base_; }

 private:
  bool set_length(std::uint64_t length);
  bool move_to_feasible_length(std::uint64_t from);
  std::optional<std::uint64_t> build() const;
  void advance();

  std::uint64_t base_ = 0;
  std::uint64_t length_ = 0;
  std::uint64_t free_digits_ = 0;              // prefix digits the caller may choose
  std::uint64_t prefix_ = 0;
  std::uint64_t prefix_end_ = 0;               // one past the last prefix
  std::uint64_t pw_[kMaxDigits] = {};          // pw_[i] = base^i
  bool exhausted_ = false;
};

// The antipalindrome of the given digit count whose free prefix (leading
// ceil(L/2) digits as a base-b number, middle digit excluded for odd L) is
// `prefix`; nullopt when the value exceeds the 64-bit domain. Shared
// building block for the stream and the pruned prime search.
std::optional<std::uint64_t> antipalindrome_from_prefix(std::uint64_t base,
                                                        std::uint64_t length,
                                                        std::uint64_t prefix);

// Exactly the antipalindromic numbers in [r.lo, r.hi), ascending.
std::vector<std::uint64_t> antipalindromes_in_range(std::uint64_t base, SearchRange r);

// Closed-form count of base-b antipalindromes with exactly `length` digits:
// (b-1)*b^(L/2-1) for even L, the same with L -> L-1 for odd L in an odd
// base, 0 for odd L in an even base, 1 for L = 1 in an odd base. Throws
// std::overflow_error when the count does not fit.
std::uint64_t count_antipalindromes_with_length(std::uint64_t base, std::uint64_t length);

// Smallest antipalindrome strictly greater than m, found by prefix
// increment rather than a linear scan. Throws std::overflow_error when the
// successor leaves the 64-bit domain.
std::uint64_t next_antipalindrome(std::uint64_t base, std::uint64_t m);

}  // namespace antipal
