#pragma once

#include <cstdint>
#include <optional>

namespace antipal {

// Checked 64-bit helpers. Every arithmetic step that could leave the
// uint64 domain goes through these; nothing in the library is allowed
// to wrap silently.

inline std::optional<std::uint64_t> checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
  return r;
}

inline std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  while (exp > 0) {
    if (exp & 1) {
      auto r = checked_mul(result, base);
      if (!r) return std::nullopt;
      result = *r;
    }
    exp >>= 1;
    if (exp > 0) {
      auto s = checked_mul(base, base);
      if (!s) return std::nullopt;
      base = *s;
    }
  }
  return result;
}

}  // namespace antipal
