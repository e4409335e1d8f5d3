#include "antipal/primes.hpp"

#include <bit>

#include "antipal/arith.hpp"
#include "antipal/enumerate.hpp"

namespace antipal {

namespace {

constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : kWitnesses)
    if (n % p == 0) return n == p;
  const int s = std::countr_zero(n - 1);
  const std::uint64_t d = (n - 1) >> s;
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void for_each_antipalindromic_prime_base3(
    SearchRange r, const std::function<void(const PrimeRecord&)>& fn) {
  validate_range(r);
  // Candidates: digit count 2h+1, leading digit 1, i.e. prefixes in
  // [3^(h-1), 2*3^(h-1)). Lengths ascend, prefixes ascend, so values do too.
  for (std::uint64_t h = 1;; ++h) {
    const std::uint64_t length = 2 * h + 1;
    auto lead = checked_pow(3, h - 1);
    if (!lead) return;
    auto first = antipalindrome_from_prefix(3, length, *lead);
    if (!first || *first >= r.hi) return;
    const std::uint64_t prefix_end = 2 * *lead;
    for (std::uint64_t prefix = *lead; prefix < prefix_end; ++prefix) {
      auto v = antipalindrome_from_prefix(3, length, prefix);
      if (!v) return;        // everything larger overflows too
      if (*v >= r.hi) break; // longer lengths start even higher
      if (*v < r.lo) continue;
      if (is_prime(*v)) fn(PrimeRecord{*v, to_digits(*v, 3)});
    }
  }
}

std::vector<PrimeRecord> antipalindromic_primes_base3(SearchRange r) {
  std::vector<PrimeRecord> out;
  for_each_antipalindromic_prime_base3(r, [&](const PrimeRecord& rec) { out.push_back(rec); });
  return out;
}

std::vector<std::uint64_t> antipalindromic_primes_general(std::uint64_t base, SearchRange r) {
  validate_base(base);
  validate_range(r);
  std::vector<std::uint64_t> out;
  if (base == 2) {
    if (r.lo <= 2 && 2 < r.hi) out.push_back(2);
    return out;
  }
  if (base == 3) {
    for_each_antipalindromic_prime_base3(r,
                                         [&](const PrimeRecord& rec) { out.push_back(rec.value); });
    return out;
  }
  // base > 3: divisibility by (b-1)/2 or b-1 kills every multi-digit
  // candidate, so only the single digit (b-1)/2 is possible.
  if (base % 2 == 1) {
    const std::uint64_t p = (base - 1) / 2;
    if (is_prime(p) && r.lo <= p && p < r.hi) out.push_back(p);
  }
  return out;
}

}  // namespace antipal
