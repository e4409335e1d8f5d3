#include "antipal/digits.hpp"

#include <algorithm>

#include "antipal/arith.hpp"

namespace antipal {

void validate_range(const SearchRange& r) {
  if (r.lo < 1) throw std::invalid_argument("SearchRange: lo must be >= 1");
  if (r.hi < r.lo) throw std::invalid_argument("SearchRange: hi must be >= lo");
}

void validate_base(std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("base must be >= 2");
}

int digit_count(std::uint64_t m, std::uint64_t base) {
  validate_base(base);
  if (m == 0) throw std::invalid_argument("digit_count: m must be positive");
  int n = 0;
  while (m > 0) {
    ++n;
    m /= base;
  }
  return n;
}

DigitString to_digits(std::uint64_t m, std::uint64_t base) {
  validate_base(base);
  if (m == 0) throw std::invalid_argument("to_digits: m must be positive");
  std::uint64_t buf[kMaxDigits];
  const int n = extract_digits(m, base, buf);
  DigitString d;
  d.base = base;
  d.digits.assign(n, 0);
  for (int i = 0; i < n; ++i) d.digits[i] = buf[n - 1 - i];
  return d;
}

std::uint64_t from_digits(const DigitString& d) {
  validate_base(d.base);
  if (d.digits.empty()) throw std::invalid_argument("from_digits: empty digit string");
  if (d.digits.front() == 0) throw std::invalid_argument("from_digits: leading zero");
  std::uint64_t value = 0;
  for (std::uint64_t digit : d.digits) {
    if (digit >= d.base) throw std::invalid_argument("from_digits: digit out of range");
    auto shifted = checked_mul(value, d.base);
    if (!shifted) throw std::overflow_error("from_digits: value exceeds 64-bit range");
    auto next = checked_add(*shifted, digit);
    if (!next) throw std::overflow_error("from_digits: value exceeds 64-bit range");
    value = *next;
  }
  return value;
}

bool is_palindrome(const DigitString& d) {
  const auto& v = d.digits;
  for (std::size_t i = 0, j = v.size(); i + 1 < j; ++i, --j)
    if (v[i] != v[j - 1]) return false;
  return true;
}

bool is_antipalindrome(const DigitString& d) {
  const auto& v = d.digits;
  if (v.empty()) return false;
  const std::uint64_t want = d.base - 1;
  std::size_t i = 0, j = v.size() - 1;
  while (i <= j) {
    if (v[i] > want || v[j] != want - v[i]) return false;
    if (j == 0) break;
    ++i;
    --j;
  }
  return true;
}

std::vector<std::uint64_t> antipalindromic_complement(
    std::span<const std::uint64_t> digits, std::uint64_t base) {
  validate_base(base);
  std::vector<std::uint64_t> out(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const std::uint64_t d = digits[digits.size() - 1 - i];
    if (d >= base) throw std::invalid_argument("antipalindromic_complement: digit out of range");
    out[i] = base - 1 - d;
  }
  return out;
}

std::uint64_t guaranteed_divisor(std::uint64_t base, std::uint64_t digit_count) {
  validate_base(base);
  if (digit_count == 0) throw std::invalid_argument("guaranteed_divisor: digit count must be >= 1");
  if (digit_count % 2 == 0) return base - 1;
  if (base % 2 == 0)
    throw std::invalid_argument(
        "guaranteed_divisor: no antipalindrome has an odd digit count in an even base");
  return (base - 1) / 2;
}

}  // namespace antipal
