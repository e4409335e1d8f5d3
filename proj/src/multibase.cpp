#include "antipal/multibase.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "antipal/arith.hpp"
#include "antipal/enumerate.hpp"
#include "antipal/primes.hpp"

namespace antipal {

namespace {

std::uint64_t smallest_prime_factor(std::uint64_t a) {
  if (a % 2 == 0) return 2;
  if (a % 3 == 0) return 3;
  for (std::uint64_t f = 5; f <= a / f; f += 6) {
    if (a % f == 0) return f;
    if (a % (f + 2) == 0) return f + 2;
  }
  return a;
}

// Expansion that the two-base theorems produce, verified before returning.
DigitString verified_expansion(std::uint64_t value, std::uint64_t base) {
  DigitString d = to_digits(value, base);
  if (!is_antipalindrome(d))
    throw std::logic_error("constructed expansion is not antipalindromic");
  return d;
}

}  // namespace

MultibaseReport antipalindromic_bases(std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("antipalindromic_bases: m must be positive");
  auto twice = checked_mul(2, m);
  auto top = twice ? checked_add(*twice, 1) : std::nullopt;
  if (!top) throw std::overflow_error("antipalindromic_bases: base 2m+1 exceeds 64-bit range");
  MultibaseReport report;
  report.value = m;
  for (std::uint64_t b = 2; b <= m; ++b)
    if (is_antipalindromic_number(m, b)) report.entries.push_back(to_digits(m, b));
  report.entries.push_back(to_digits(m, *top));  // single digit m, pairs to 2m = b-1
  return report;
}

BasePairWitness composite_two_bases(std::uint64_t a) {
  if (a < 2) throw std::invalid_argument("composite_two_bases: a must be composite, got " +
                                         std::to_string(a));
  if (is_prime(a))
    throw std::invalid_argument("composite_two_bases: a must be composite, got prime " +
                                std::to_string(a));
  const std::uint64_t n = smallest_prime_factor(a);
  const std::uint64_t cofactor = a / n;  // >= n because n <= sqrt(a)
  auto twice = checked_mul(2, a);
  auto second_base = twice ? checked_add(*twice, 1) : std::nullopt;
  if (!second_base)
    throw std::overflow_error("composite_two_bases: base 2a+1 exceeds 64-bit range");
  BasePairWitness w;
  w.value = a;
  w.first = verified_expansion(a, cofactor + 1);
  w.second = verified_expansion(a, *second_base);
  if (w.first.digits != std::vector<std::uint64_t>{n - 1, cofactor - n + 1})
    throw std::logic_error("composite_two_bases: expansion disagrees with closed form");
  return w;
}

MultibaseReport factorial_construction(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("factorial_construction: n must be >= 1");
  if (n > 10)
    throw std::overflow_error("factorial_construction: (2n)! exceeds 64-bit range for n > 10");
  std::uint64_t a = 1;
  for (std::uint64_t i = 2; i <= 2 * n; ++i) a *= i;  // 20! fits
  MultibaseReport report;
  report.value = a;
  for (std::uint64_t k = 2; k <= n + 1; ++k)
    report.entries.push_back(verified_expansion(a, a / k + 1));
  const std::uint64_t top = 2 * a + 1;  // 2*20!+1 still fits
  report.entries.push_back(verified_expansion(a, top));
  std::sort(report.entries.begin(), report.entries.end(),
            [](const DigitString& x, const DigitString& y) { return x.base < y.base; });
  return report;
}

BasePairWitness paired_base_construction(std::uint64_t base) {
  validate_base(base);
  BasePairWitness w;
  if (base == 2) {
    w.value = 12;
    w.first = verified_expansion(12, 2);
    w.second = verified_expansion(12, 4);
    return w;
  }
  if (base == 3) {
    w.value = 72;
    w.first = verified_expansion(72, 3);
    w.second = verified_expansion(72, 9);
    return w;
  }
  auto value = checked_mul(4, base - 1);
  auto twice = checked_mul(2, base);
  if (!value || !twice)
    throw std::overflow_error("paired_base_construction: 4(b-1) exceeds 64-bit range");
  w.value = *value;
  w.first = verified_expansion(*value, base);          // (3)(b-4)
  w.second = verified_expansion(*value, *twice - 1);   // (1)(2b-3)
  if (w.first.digits != std::vector<std::uint64_t>{3, base - 4} ||
      w.second.digits != std::vector<std::uint64_t>{1, *twice - 3})
    throw std::logic_error("paired_base_construction: expansion disagrees with closed form");
  return w;
}

BasePairWitness gcd_construction(std::uint64_t p, std::uint64_t q) {
  if (p < 1 || q < 1) throw std::invalid_argument("gcd_construction: p and q must be positive");
  const std::uint64_t d = std::gcd(p, q);
  const std::uint64_t p1 = p / d;
  const std::uint64_t q1 = q / d;
  if (q1 <= 1)
    throw std::invalid_argument("gcd_construction: requires q' > 1, but q/gcd(p,q) = " +
                                std::to_string(q1));
  if (p1 <= 1)
    throw std::invalid_argument("gcd_construction: requires p' > 1, but p/gcd(p,q) = " +
                                std::to_string(p1));
  if (p < q1)
    throw std::invalid_argument("gcd_construction: requires p >= q', but p = " + std::to_string(p) +
                                " < q' = " + std::to_string(q1));
  if (q < p1)
    throw std::invalid_argument("gcd_construction: requires q >= p', but q = " + std::to_string(q) +
                                " < p' = " + std::to_string(p1));
  auto pq = checked_mul(p1, q1);
  auto m = pq ? checked_mul(*pq, d) : std::nullopt;
  if (!m) throw std::overflow_error("gcd_construction: p'*q'*d exceeds 64-bit range");
  BasePairWitness w;
  w.value = *m;
  w.first = verified_expansion(*m, p + 1);
  w.second = verified_expansion(*m, q + 1);
  if (w.first.digits != std::vector<std::uint64_t>{q1 - 1, p + 1 - q1} ||
      w.second.digits != std::vector<std::uint64_t>{p1 - 1, q + 1 - p1})
    throw std::logic_error("gcd_construction: expansion disagrees with closed form");
  return w;
}

BlockDecomposition block_palindrome_check(std::uint64_t m, std::uint64_t base,
                                          std::uint64_t block_length) {
  validate_base(base);
  if (m < 1) throw std::invalid_argument("block_palindrome_check: m must be positive");
  if (block_length < 1)
    throw std::invalid_argument("block_palindrome_check: block length must be >= 1");
  auto power_base = checked_pow(base, block_length);
  if (!power_base)
    throw std::overflow_error("block_palindrome_check: b^n exceeds 64-bit range");

  BlockDecomposition result;
  result.value = m;
  result.block_base = base;
  result.block_length = block_length;
  result.power_base_digits = to_digits(m, *power_base);

  const std::uint64_t min_top = *checked_pow(base, block_length - 1);
  if (result.power_base_digits.digits.front() < min_top)
    throw std::invalid_argument("block_palindrome_check: top digit " +
                                std::to_string(result.power_base_digits.digits.front()) +
                                " is below b^(n-1) = " + std::to_string(min_top));
  if (!is_antipalindrome(result.power_base_digits))
    throw std::invalid_argument("block_palindrome_check: not antipalindromic in base " +
                                std::to_string(*power_base));

  result.all_blocks_palindromic = true;
  for (std::uint64_t digit : result.power_base_digits.digits) {
    std::vector<std::uint64_t> block(block_length, 0);
    for (std::uint64_t i = 0; i < block_length; ++i) {
      block[block_length - 1 - i] = digit % base;
      digit /= base;
    }
    for (std::uint64_t i = 0, j = block_length - 1; i < j; ++i, --j)
      if (block[i] != block[j]) result.all_blocks_palindromic = false;
    result.blocks.push_back(std::move(block));
  }
  return result;
}

std::vector<std::uint64_t> common_antipalindromes_in_range(std::uint64_t base1,
                                                           std::uint64_t base2, SearchRange r) {
  validate_base(base1);
  validate_base(base2);
  if (base1 == base2)
    throw std::invalid_argument("common_antipalindromes: bases must differ");
  validate_range(r);
  const std::uint64_t enumerate_base = std::max(base1, base2);
  const std::uint64_t filter_base = std::min(base1, base2);
  std::vector<std::uint64_t> out;
  AntipalindromeStream stream(enumerate_base, r.lo);
  while (auto v = stream.next()) {
    if (*v >= r.hi) break;
    if (is_antipalindromic_number(*v, filter_base)) out.push_back(*v);
  }
  return out;
}

std::vector<std::uint64_t> common_antipalindromes(std::uint64_t base1, std::uint64_t base2,
                                                  std::uint64_t limit) {
  if (limit < 2) return {};
  return common_antipalindromes_in_range(base1, base2, SearchRange{1, limit});
}

}  // namespace antipal
