#include "antipal/sums.hpp"

#include <algorithm>

#include "antipal/enumerate.hpp"

namespace antipal {

namespace {

std::size_t word_count(std::uint64_t bits) { return static_cast<std::size_t>((bits + 63) / 64); }

void set_bit(std::vector<std::uint64_t>& words, std::uint64_t i) {
  words[i >> 6] |= 1ull << (i & 63);
}

bool test_bit(const std::vector<std::uint64_t>& words, std::uint64_t i) {
  return (words[i >> 6] >> (i & 63)) & 1;
}

// dst |= src << shift, truncated to dst's length. shift >= 1 in every use,
// so stray bits above the logical size can only move further out of range.
void or_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                std::uint64_t shift) {
  const std::size_t word_shift = static_cast<std::size_t>(shift >> 6);
  const unsigned bit_shift = static_cast<unsigned>(shift & 63);
  const std::size_t n = dst.size();
  if (bit_shift == 0) {
    for (std::size_t i = n; i-- > word_shift;) dst[i] |= src[i - word_shift];
    return;
  }
  for (std::size_t i = n; i-- > word_shift;) {
    std::uint64_t w = src[i - word_shift] << bit_shift;
    if (i - word_shift > 0) w |= src[i - word_shift - 1] >> (64 - bit_shift);
    dst[i] |= w;
  }
}

}  // namespace

SumReachability::SumReachability(std::uint64_t base, std::uint64_t limit) : limit_(limit) {
  validate_base(base);
  if (limit < 2) throw std::invalid_argument("SumReachability: limit must be >= 2");
  terms_ = antipalindromes_in_range(base, SearchRange{1, limit});
  const std::size_t words = word_count(limit);
  one_.assign(words, 0);
  two_.assign(words, 0);
  three_.assign(words, 0);
  for (std::uint64_t a : terms_) set_bit(one_, a);
  for (std::uint64_t a : terms_) {
    if (a >= limit) break;
    or_shifted(two_, one_, a);
    or_shifted(three_, two_, a);
  }
}

bool SumReachability::representable(std::uint64_t n) const {
  if (n >= limit_) throw std::invalid_argument("SumReachability: n is beyond the built limit");
  return test_bit(one_, n) || test_bit(two_, n) || test_bit(three_, n);
}

std::vector<std::uint64_t> SumReachability::exceptions_in(SearchRange r) const {
  validate_range(r);
  if (r.hi > limit_)
    throw std::invalid_argument("SumReachability: range extends beyond the built limit");
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = r.lo; n < r.hi; ++n)
    if (!representable(n)) out.push_back(n);
  return out;
}

std::optional<Decomposition> decompose(std::uint64_t n, std::uint64_t base, unsigned max_terms) {
  validate_base(base);
  if (n < 1) throw std::invalid_argument("decompose: n must be positive");
  if (max_terms < 1 || max_terms > 3)
    throw std::invalid_argument("decompose: max_terms must be between 1 and 3");

  // all candidate terms, ascending
  std::vector<std::uint64_t> a;
  AntipalindromeStream stream(base, 1);
  while (auto v = stream.next()) {
    if (*v > n) break;
    a.push_back(*v);
  }
  const auto in_a = [&](std::uint64_t x) {
    return std::binary_search(a.begin(), a.end(), x);
  };

  if (in_a(n)) return Decomposition{n, base, {n}};
  if (max_terms < 2) return std::nullopt;

  for (std::size_t i = a.size(); i-- > 0;) {
    const std::uint64_t t1 = a[i];           // < n, since n itself was not a term
    const std::uint64_t rest = n - t1;
    if (rest <= t1 && in_a(rest)) return Decomposition{n, base, {t1, rest}};
    if (max_terms < 3) continue;
    // maximize the second term among t2 <= min(t1, rest-1)
    const std::uint64_t cap = std::min(t1, rest - 1);
    auto it = std::upper_bound(a.begin(), a.end(), cap);
    while (it != a.begin()) {
      --it;
      const std::uint64_t t2 = *it;
      const std::uint64_t t3 = rest - t2;
      if (t3 > t2) break;  // descending scan: smaller t2 only makes t3 larger
      if (in_a(t3)) return Decomposition{n, base, {t1, t2, t3}};
    }
  }
  return std::nullopt;
}

std::vector<std::uint64_t> verify_sum_conjecture(std::uint64_t limit) {
  if (limit < 2) return {};
  SumReachability reach(3, limit);
  return reach.exceptions_in(SearchRange{1, limit});
}

std::vector<std::uint64_t> verify_palindrome_sum_conjecture(std::uint64_t limit) {
  if (limit < 2) return {};
  SumReachability reach(3, limit);
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n < limit; ++n)
    if (is_palindromic_number(n, 3) && !reach.representable(n)) out.push_back(n);
  return out;
}

}  // namespace antipal
