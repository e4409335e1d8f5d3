#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "antipal/digits.hpp"

namespace antipal {

// target written as the sum of 1..3 antipalindromic numbers in `base`.
// Terms are descending; repeated terms are allowed.
struct Decomposition {
  std::uint64_t target = 0;
  std::uint64_t base = 0;
  std::vector<std::uint64_t> terms;

  bool operator==(const Decomposition&) const = default;
};

// A decomposition of n into at most max_terms (1..3) antipalindromic
// summands, or nullopt. Among all decompositions the lexicographically
// greatest descending term sequence is returned, so output is deterministic:
// the first term is maximized, then the second, then the third.
std::optional<Decomposition> decompose(std::uint64_t n, std::uint64_t base, unsigned max_terms);

// Shared reachability sets for sum verification: bit v of set t says that v
// is a sum of exactly t antipalindromes below `limit`. Built once (the
// antipalindrome set A is ~sqrt(limit) dense, and each convolution is a
// shifted-or sweep), then queried for every target, so scanning limits like
// 5*10^6 takes seconds rather than hours. Read-only after construction;
// safe to share across threads.
class SumReachability {
 public:
  SumReachability(std::uint64_t base, std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  const std::vector<std::uint64_t>& antipalindromes() const { return terms_; }

  // n expressible as a sum of at most three antipalindromes (n < limit).
  bool representable(std::uint64_t n) const;

  // Ascending list of non-representable targets in [r.lo, r.hi), r.hi <= limit.
  std::vector<std::uint64_t> exceptions_in(SearchRange r) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> terms_;
  std::vector<std::uint64_t> one_, two_, three_;  // bit sets, one word per 64 values
};

// All n < limit with no decomposition into at most three base-3
// antipalindromes, ascending.
std::vector<std::uint64_t> verify_sum_conjecture(std::uint64_t limit);

// Same scan restricted to base-3 palindromes; expected empty.
std::vector<std::uint64_t> verify_palindrome_sum_conjecture(std::uint64_t limit);

}  // namespace antipal
