#include "antipal/enumerate.hpp"

#include <limits>

#include "antipal/arith.hpp"

namespace antipal {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

bool length_feasible(std::uint64_t base, std::uint64_t length) {
  return length % 2 == 0 || base % 2 == 1;
}

// Free digit count for an antipalindrome of the given length. The middle
// digit of an odd length is forced, so it is not free.
std::uint64_t free_digit_count(std::uint64_t length) { return length / 2; }

// value = sum a_j * b^(L-1-j) over the free prefix digits a_0..a_{h-1}
//       + forced middle digit for odd L
//       + sum (b-1-a_j) * b^j for the mirrored half.
std::optional<std::uint64_t> build_value(std::uint64_t base, std::uint64_t length,
                                         const std::uint64_t pw[], std::uint64_t prefix) {
  const std::uint64_t h = free_digit_count(length);
  unsigned __int128 acc = 0;
  std::uint64_t rest = prefix;
  // walk free digits least-significant first: digit a_{h-1-t} of the prefix
  for (std::uint64_t t = 0; t < h; ++t) {
    const std::uint64_t digit = rest % base;
    rest /= base;
    const std::uint64_t j = h - 1 - t;  // most-significant-first index
    acc += static_cast<unsigned __int128>(digit) * pw[length - 1 - j];
    acc += static_cast<unsigned __int128>(base - 1 - digit) * pw[j];
  }
  if (length % 2 == 1) acc += static_cast<unsigned __int128>((base - 1) / 2) * pw[h];
  if (acc > kU64Max) return std::nullopt;
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

AntipalindromeStream::AntipalindromeStream(std::uint64_t base, std::uint64_t first)
    : base_(base) {
  validate_base(base);
  if (first < 1) first = 1;
  const std::uint64_t start_len = static_cast<std::uint64_t>(digit_count(first, base));
  if (!move_to_feasible_length(start_len)) {
    exhausted_ = true;
    return;
  }
  if (length_ > start_len) return;  // already past `first`
  // Same digit count: seek the first prefix whose value reaches `first`.
  const std::uint64_t h = free_digits_;
  if (h > 0) prefix_ = first / pw_[length_ - h];
  auto v = build();
  if (!v) {
    // Everything from here on, this length or longer, exceeds 64 bits.
    exhausted_ = true;
    return;
  }
  if (*v >= first) return;
  ++prefix_;
  if (prefix_ == prefix_end_ && !move_to_feasible_length(length_ + 1)) exhausted_ = true;
}

bool AntipalindromeStream::set_length(std::uint64_t length) {
  pw_[0] = 1;
  for (std::uint64_t i = 1; i < length; ++i) {
    auto p = checked_mul(pw_[i - 1], base_);
    if (!p) return false;  // no length-L value fits in 64 bits
    pw_[i] = *p;
  }
  length_ = length;
  free_digits_ = free_digit_count(length);
  if (free_digits_ == 0) {  // single forced middle digit
    prefix_ = 0;
    prefix_end_ = 1;
  } else {
    // h <= length-1, so b^h is always among the computed powers
    prefix_ = pw_[free_digits_ - 1];
    prefix_end_ = pw_[free_digits_];
  }
  return true;
}

bool AntipalindromeStream::move_to_feasible_length(std::uint64_t from) {
  std::uint64_t length = from;
  while (!length_feasible(base_, length)) ++length;
  return set_length(length);
}

std::optional<std::uint64_t> AntipalindromeStream::build() const {
  return build_value(base_, length_, pw_, prefix_);
}

void AntipalindromeStream::advance() {
  ++prefix_;
  if (prefix_ >= prefix_end_ && !move_to_feasible_length(length_ + 1)) exhausted_ = true;
}

std::optional<std::uint64_t> AntipalindromeStream::next() {
  if (exhausted_) return std::nullopt;
  auto v = build();
  if (!v) {
    exhausted_ = true;
    return std::nullopt;
  }
  advance();
  return v;
}

std::optional<std::uint64_t> antipalindrome_from_prefix(std::uint64_t base,
                                                        std::uint64_t length,
                                                        std::uint64_t prefix) {
  validate_base(base);
  if (length == 0) throw std::invalid_argument("antipalindrome_from_prefix: length must be >= 1");
  if (!length_feasible(base, length))
    throw std::invalid_argument(
        "antipalindrome_from_prefix: odd digit count requires an odd base");
  const std::uint64_t h = free_digit_count(length);
  if (h == 0) {
    if (prefix != 0) throw std::invalid_argument("antipalindrome_from_prefix: prefix out of range");
    return (base - 1) / 2;
  }
  std::uint64_t pw[kMaxDigits];
  pw[0] = 1;
  for (std::uint64_t i = 1; i < length; ++i) {
    auto p = checked_mul(pw[i - 1], base);
    if (!p) return std::nullopt;
    pw[i] = *p;
  }
  auto hi = checked_mul(pw[h - 1], base);
  if (prefix < pw[h - 1] || (hi && prefix >= *hi))
    throw std::invalid_argument("antipalindrome_from_prefix: prefix out of range");
  return build_value(base, length, pw, prefix);
}

std::vector<std::uint64_t> antipalindromes_in_range(std::uint64_t base, SearchRange r) {
  validate_range(r);
  std::vector<std::uint64_t> out;
  AntipalindromeStream stream(base, r.lo);
  while (auto v = stream.next()) {
    if (*v >= r.hi) break;
    out.push_back(*v);
  }
  return out;
}

std::uint64_t count_antipalindromes_with_length(std::uint64_t base, std::uint64_t length) {
  validate_base(base);
  if (length == 0)
    throw std::invalid_argument("count_antipalindromes_with_length: length must be >= 1");
  if (!length_feasible(base, length)) return 0;
  if (length == 1) return base % 2 == 1 ? 1 : 0;
  const std::uint64_t h = free_digit_count(length);
  auto tail = checked_pow(base, h - 1);
  auto count = tail ? checked_mul(base - 1, *tail) : std::nullopt;
  if (!count)
    throw std::overflow_error("count_antipalindromes_with_length: count exceeds 64-bit range");
  return *count;
}

std::uint64_t next_antipalindrome(std::uint64_t base, std::uint64_t m) {
  validate_base(base);
  if (m == kU64Max) throw std::overflow_error("next_antipalindrome: successor exceeds 64-bit range");
  AntipalindromeStream stream(base, m + 1);
  auto v = stream.next();
  if (!v) throw std::overflow_error("next_antipalindrome: successor exceeds 64-bit range");
  return *v;
}

}  // namespace antipal
