#include "antipal/powers.hpp"

#include <string>

#include "antipal/arith.hpp"

namespace antipal {

namespace {

std::uint64_t pow_unchecked(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

void validate_power_search(std::uint64_t base, std::uint64_t exponent, std::uint64_t limit) {
  validate_base(base);
  if (exponent < 2) throw std::invalid_argument("power search: exponent must be >= 2");
  if (limit < 1) throw std::invalid_argument("power search: limit must be >= 1");
}

}  // namespace

std::uint64_t integer_kth_root(std::uint64_t x, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("integer_kth_root: k must be >= 1");
  if (k == 1 || x < 2) return x;
  // grow an upper bound, then bisect on r^k <= x
  std::uint64_t lo = 1, hi = 2;
  while (auto p = checked_pow(hi, k)) {
    if (*p > x) break;
    lo = hi;
    hi *= 2;
  }
  while (lo + 1 < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    auto p = checked_pow(mid, k);
    if (p && *p <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::uint64_t binomial_coefficient(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // after this step r = C(n-k+i, i); the division is always exact
    r = r * (n - k + i) / i;
    if (r > static_cast<unsigned __int128>(~0ull))
      throw std::overflow_error("binomial_coefficient: exceeds 64-bit range");
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<PowerHit> antipalindromic_powers_in_root_range(std::uint64_t base,
                                                           std::uint64_t exponent,
                                                           std::uint64_t limit,
                                                           std::uint64_t root_lo,
                                                           std::uint64_t root_hi) {
  validate_power_search(base, exponent, limit);
  std::vector<PowerHit> hits;
  const std::uint64_t max_root = integer_kth_root(limit - 1, exponent);
  if (root_lo < 1) root_lo = 1;
  if (root_hi > max_root + 1) root_hi = max_root == ~0ull ? ~0ull : max_root + 1;
  for (std::uint64_t m = root_lo; m < root_hi; ++m) {
    const std::uint64_t value = pow_unchecked(m, exponent);  // <= limit-1 by root clamp
    if (is_antipalindromic_number(value, base))
      hits.push_back(PowerHit{base, exponent, m, value, to_digits(value, base)});
  }
  return hits;
}

std::vector<PowerHit> antipalindromic_powers(std::uint64_t base, std::uint64_t exponent,
                                             std::uint64_t limit) {
  return antipalindromic_powers_in_root_range(base, exponent, limit, 1, ~0ull);
}

std::uint64_t count_antipalindromic_powers_in_root_range(std::uint64_t base,
                                                         std::uint64_t exponent,
                                                         std::uint64_t limit,
                                                         std::uint64_t root_lo,
                                                         std::uint64_t root_hi) {
  validate_power_search(base, exponent, limit);
  const std::uint64_t max_root = integer_kth_root(limit - 1, exponent);
  if (root_lo < 1) root_lo = 1;
  if (root_hi > max_root + 1) root_hi = max_root == ~0ull ? ~0ull : max_root + 1;
  std::uint64_t count = 0;
  for (std::uint64_t m = root_lo; m < root_hi; ++m)
    if (is_antipalindromic_number(pow_unchecked(m, exponent), base)) ++count;
  return count;
}

std::uint64_t count_antipalindromic_powers(std::uint64_t base, std::uint64_t exponent,
                                           std::uint64_t limit) {
  return count_antipalindromic_powers_in_root_range(base, exponent, limit, 1, ~0ull);
}

PowerHit construct_power_family(std::uint64_t n, std::uint64_t k, std::uint64_t m) {
  if (n < 2) throw std::invalid_argument("construct_power_family: n must be >= 2");
  if (k < 2) throw std::invalid_argument("construct_power_family: k must be >= 2");
  if (m < 2 || m > n)
    throw std::invalid_argument("construct_power_family: m must satisfy 2 <= m <= n");
  auto nk = checked_pow(n, k);
  auto base = nk ? checked_add(*nk, 1) : std::nullopt;
  if (!base) throw std::overflow_error("construct_power_family: base n^k+1 exceeds 64-bit range");
  auto mk = checked_pow(m, k);
  auto value = mk ? checked_mul(*mk, *nk) : std::nullopt;  // (m*n)^k = m^k * (b-1)
  if (!value) throw std::overflow_error("construct_power_family: (m*n)^k exceeds 64-bit range");
  PowerHit hit;
  hit.base = *base;
  hit.exponent = k;
  hit.root = m * n;  // m*n <= n^k < base, safe under the checks above
  hit.value = *value;
  hit.digits = DigitString{*base, {*mk - 1, *base - *mk}};
  if (from_digits(hit.digits) != hit.value || !is_antipalindrome(hit.digits) ||
      to_digits(hit.value, hit.base) != hit.digits)
    throw std::logic_error("construct_power_family: closed form disagrees with expansion");
  return hit;
}

std::uint64_t odd_power_base_bound(std::uint64_t m, std::uint64_t k) {
  if (m < 2) throw std::invalid_argument("odd power: m must be > 1");
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("odd power: k must be odd and > 1");
  auto mk = checked_pow(m, k);
  auto bound = mk ? checked_mul(binomial_coefficient(k, (k - 1) / 2), *mk) : std::nullopt;
  if (!bound) throw std::overflow_error("odd power: base bound exceeds 64-bit range");
  return *bound;
}

PowerHit construct_odd_power(std::uint64_t m, std::uint64_t k, std::uint64_t base) {
  const std::uint64_t bound = odd_power_base_bound(m, k);
  if (base < bound)
    throw std::invalid_argument("construct_odd_power: base must be >= " + std::to_string(bound));
  const std::uint64_t mk = *checked_pow(m, k);  // fits: bound did
  auto root = checked_mul(m, base - 1);
  auto value = root ? checked_pow(*root, k) : std::nullopt;
  if (!value) throw std::overflow_error("construct_odd_power: [m*(b-1)]^k exceeds 64-bit range");

  // digits straight from the alternating binomial expansion
  DigitString digits;
  digits.base = base;
  digits.digits.resize(k + 1);
  for (std::uint64_t i = 0; i <= k; ++i) {
    const std::uint64_t term = binomial_coefficient(k, i) * mk;  // <= bound <= base
    digits.digits[i] = i % 2 == 0 ? term - 1 : base - term;
  }

  if (to_digits(*value, base) != digits || !is_antipalindrome(digits))
    throw std::logic_error("construct_odd_power: binomial expansion disagrees with positional digits");
  return PowerHit{base, k, *root, *value, digits};
}

}  // namespace antipal
