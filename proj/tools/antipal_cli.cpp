// antipal - exact computation with antipalindromic numbers.
//
// Subcommands cover expansion and predicate checks, direct enumeration,
// prime/power/multi-base searches, the constructive theorems, additive
// decompositions, table reproduction, and property-suite verification.
// Results go to stdout in text, JSON (one record per line), or CSV;
// diagnostics and progress go to stderr. Exit codes: 0 success (including
// "none found"), 1 usage error, 2 arithmetic range error, 3 a verify suite
// found violations.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "antipal/arith.hpp"
#include "antipal/digits.hpp"
#include "antipal/enumerate.hpp"
#include "antipal/multibase.hpp"
#include "antipal/powers.hpp"
#include "antipal/primes.hpp"
#include "antipal/sums.hpp"

using json = nlohmann::json;
using namespace antipal;

namespace {

// ---------------------------------------------------------------------------
// exact integer parsing, scientific shorthand included (1e12, 2.5e3)

std::uint64_t parse_plain_u64(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("malformed integer: empty");
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("malformed integer: " + s);
    auto shifted = checked_mul(v, 10);
    auto next = shifted ? checked_add(*shifted, static_cast<std::uint64_t>(c - '0'))
                        : std::nullopt;
    if (!next) throw std::overflow_error("integer out of 64-bit range: " + s);
    v = *next;
  }
  return v;
}

std::uint64_t parse_u64(const std::string& s) {
  const std::size_t epos = s.find_first_of("eE");
  std::string mantissa = epos == std::string::npos ? s : s.substr(0, epos);
  std::uint64_t exponent = 0;
  if (epos != std::string::npos) exponent = parse_plain_u64(s.substr(epos + 1));

  std::uint64_t fraction_digits = 0;
  const std::size_t dot = mantissa.find('.');
  if (dot != std::string::npos) {
    fraction_digits = mantissa.size() - dot - 1;
    mantissa = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
  }
  if (fraction_digits > exponent)
    throw std::invalid_argument("not an exact integer: " + s);
  std::uint64_t value = parse_plain_u64(mantissa);
  for (std::uint64_t i = 0; i < exponent - fraction_digits; ++i) {
    auto next = checked_mul(value, 10);
    if (!next) throw std::overflow_error("integer out of 64-bit range: " + s);
    value = *next;
  }
  return value;
}

std::pair<std::uint64_t, std::uint64_t> parse_inclusive_range(const std::string& s) {
  const std::size_t pos = s.find("..");
  if (pos == std::string::npos) {
    const std::uint64_t v = parse_u64(s);
    return {v, v};
  }
  const std::uint64_t lo = parse_u64(s.substr(0, pos));
  const std::uint64_t hi = parse_u64(s.substr(pos + 2));
  if (hi < lo) throw std::invalid_argument("descending range: " + s);
  return {lo, hi};
}

// ---------------------------------------------------------------------------
// output formatting

enum class Format { text, json_lines, csv };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json_lines;
  if (s == "csv") return Format::csv;
  throw std::invalid_argument("unknown format: " + s + " (expected text, json, or csv)");
}

std::string digits_spaced(const std::vector<std::uint64_t>& digits) {
  std::ostringstream out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0) out << ' ';
    out << digits[i];
  }
  return out.str();
}

// compact string for bases whose digits are single decimal symbols
std::string digits_text(const DigitString& d) {
  if (d.base <= 10) {
    std::string out;
    for (std::uint64_t digit : d.digits) out += static_cast<char>('0' + digit);
    return out;
  }
  return digits_spaced(d.digits);
}

json digitstring_json(const DigitString& d) {
  return json{{"base", d.base}, {"digits", d.digits}};
}

void print_value_base_digits_header(Format fmt) {
  if (fmt == Format::csv) std::cout << "value,base,digits\n";
}

void print_value_base_digits(Format fmt, const DigitString& d, std::uint64_t value) {
  switch (fmt) {
    case Format::text:
      std::cout << value << ' ' << digits_text(d) << '\n';
      break;
    case Format::json_lines:
      std::cout << json{{"value", value}, {"base", d.base}, {"digits", d.digits}}.dump() << '\n';
      break;
    case Format::csv:
      std::cout << value << ',' << d.base << ',' << digits_spaced(d.digits) << '\n';
      break;
  }
}

// ---------------------------------------------------------------------------
// worker pools; the library stays pure, the CLI owns all threads

std::vector<SearchRange> split_range(std::uint64_t lo, std::uint64_t hi, unsigned parts) {
  std::vector<SearchRange> out;
  if (hi <= lo) return out;
  const std::uint64_t width = hi - lo;
  std::uint64_t n = std::min<std::uint64_t>(parts == 0 ? 1 : parts, width);
  const std::uint64_t step = width / n;
  std::uint64_t rem = width % n;
  std::uint64_t cur = lo;
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint64_t next = cur + step + (rem > 0 ? 1 : 0);
    if (rem > 0) --rem;
    out.push_back(SearchRange{cur, next});
    cur = next;
  }
  return out;
}

// run f over every part, in parallel when workers > 1, preserving part order
template <typename R, typename F>
std::vector<R> map_parts(const std::vector<SearchRange>& parts, unsigned workers, F f) {
  std::vector<R> results(parts.size());
  if (workers <= 1 || parts.size() <= 1) {
    for (std::size_t i = 0; i < parts.size(); ++i) results[i] = f(parts[i]);
    return results;
  }
  std::vector<std::future<R>> futures;
  futures.reserve(parts.size());
  for (const auto& part : parts)
    futures.push_back(std::async(std::launch::async, [&f, part] { return f(part); }));
  for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
  return results;
}

template <typename T>
std::vector<T> concat(std::vector<std::vector<T>> parts) {
  std::vector<T> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// ---------------------------------------------------------------------------
// shared command state

struct Options {
  Format fmt = Format::text;
  unsigned workers = 1;
};

// ---------------------------------------------------------------------------
// plain commands

void cmd_expand(const Options& opt, std::uint64_t m, std::uint64_t base) {
  const DigitString d = to_digits(m, base);
  print_value_base_digits_header(opt.fmt);
  print_value_base_digits(opt.fmt, d, m);
}

void cmd_check(const Options& opt, std::uint64_t m, std::uint64_t base) {
  const DigitString d = to_digits(m, base);
  const bool anti = is_antipalindrome(d);
  switch (opt.fmt) {
    case Format::text:
      std::cout << (anti ? "true" : "false") << ' ' << digits_text(d) << '\n';
      break;
    case Format::json_lines:
      std::cout << json{{"value", m},
                        {"base", base},
                        {"antipalindromic", anti},
                        {"digits", d.digits}}
                       .dump()
                << '\n';
      break;
    case Format::csv:
      std::cout << "value,base,antipalindromic,digits\n";
      std::cout << m << ',' << base << ',' << (anti ? "true" : "false") << ','
                << digits_spaced(d.digits) << '\n';
      break;
  }
}

void cmd_enumerate(const Options& opt, std::uint64_t base, std::uint64_t from,
                   std::uint64_t below, std::uint64_t max_items) {
  print_value_base_digits_header(opt.fmt);
  std::uint64_t emitted = 0;
  auto emit = [&](std::uint64_t v) {
    if (opt.fmt == Format::text)
      std::cout << v << '\n';
    else
      print_value_base_digits(opt.fmt, to_digits(v, base), v);
    ++emitted;
  };
  if (opt.workers <= 1) {
    AntipalindromeStream stream(base, from);
    while (auto v = stream.next()) {
      if (*v >= below || emitted >= max_items) break;
      emit(*v);
    }
    return;
  }
  const auto parts = split_range(from, below, opt.workers);
  auto chunks = map_parts<std::vector<std::uint64_t>>(
      parts, opt.workers, [&](SearchRange r) { return antipalindromes_in_range(base, r); });
  for (const auto& chunk : chunks)
    for (std::uint64_t v : chunk) {
      if (emitted >= max_items) return;
      emit(v);
    }
}

void cmd_next(const Options& opt, std::uint64_t m, std::uint64_t base) {
  const std::uint64_t v = next_antipalindrome(base, m);
  print_value_base_digits_header(opt.fmt);
  if (opt.fmt == Format::text)
    std::cout << v << '\n';
  else
    print_value_base_digits(opt.fmt, to_digits(v, base), v);
}

void cmd_primes(const Options& opt, std::uint64_t base, std::uint64_t from,
                std::uint64_t below) {
  print_value_base_digits_header(opt.fmt);
  auto emit_record = [&](const PrimeRecord& rec) {
    switch (opt.fmt) {
      case Format::text:
        std::cout << rec.value << ' ' << digits_text(rec.base3_digits) << '\n';
        break;
      case Format::json_lines:
        std::cout << json{{"value", rec.value},
                          {"base3_digits", digitstring_json(rec.base3_digits)}}
                         .dump()
                  << '\n';
        break;
      case Format::csv:
        std::cout << rec.value << ",3," << digits_spaced(rec.base3_digits.digits) << '\n';
        break;
    }
  };
  if (base == 3) {
    if (opt.workers <= 1) {
      for_each_antipalindromic_prime_base3(SearchRange{from, below}, emit_record);
      return;
    }
    const auto parts = split_range(from, below, opt.workers);
    auto chunks = map_parts<std::vector<PrimeRecord>>(
        parts, opt.workers, [](SearchRange r) { return antipalindromic_primes_base3(r); });
    for (const auto& chunk : chunks)
      for (const auto& rec : chunk) emit_record(rec);
    return;
  }
  for (std::uint64_t p : antipalindromic_primes_general(base, SearchRange{from, below})) {
    const DigitString d = to_digits(p, base);
    switch (opt.fmt) {
      case Format::text:
        std::cout << p << ' ' << digits_text(d) << '\n';
        break;
      case Format::json_lines:
        std::cout << json{{"value", p}, {"base", base}, {"digits", d.digits}}.dump() << '\n';
        break;
      case Format::csv:
        std::cout << p << ',' << base << ',' << digits_spaced(d.digits) << '\n';
        break;
    }
  }
}

void print_power_hit_header(Format fmt) {
  if (fmt == Format::csv) std::cout << "value,base,exponent,root,digits\n";
}

void print_power_hit(Format fmt, const PowerHit& h) {
  switch (fmt) {
    case Format::text:
      std::cout << h.value << ' ' << h.root << '^' << h.exponent << ' '
                << digits_text(h.digits) << '\n';
      break;
    case Format::json_lines:
      std::cout << json{{"base", h.base},
                        {"exponent", h.exponent},
                        {"root", h.root},
                        {"value", h.value},
                        {"digits", digitstring_json(h.digits)}}
                       .dump()
                << '\n';
      break;
    case Format::csv:
      std::cout << h.value << ',' << h.base << ',' << h.exponent << ',' << h.root << ','
                << digits_spaced(h.digits.digits) << '\n';
      break;
  }
}

void cmd_powers(const Options& opt, std::uint64_t base, std::uint64_t exponent,
                std::uint64_t limit, bool count_only) {
  const std::uint64_t max_root =
      limit < 2 ? 0 : integer_kth_root(limit - 1, exponent);
  const auto parts = split_range(1, max_root + 1, opt.workers);
  if (count_only) {
    auto counts = map_parts<std::uint64_t>(parts, opt.workers, [&](SearchRange r) {
      return count_antipalindromic_powers_in_root_range(base, exponent, limit, r.lo, r.hi);
    });
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) total += c;
    if (opt.fmt == Format::json_lines)
      std::cout << json{{"base", base}, {"exponent", exponent}, {"limit", limit},
                        {"count", total}}
                       .dump()
                << '\n';
    else if (opt.fmt == Format::csv)
      std::cout << "base,exponent,limit,count\n"
                << base << ',' << exponent << ',' << limit << ',' << total << '\n';
    else
      std::cout << total << '\n';
    return;
  }
  auto chunks = map_parts<std::vector<PowerHit>>(parts, opt.workers, [&](SearchRange r) {
    return antipalindromic_powers_in_root_range(base, exponent, limit, r.lo, r.hi);
  });
  print_power_hit_header(opt.fmt);
  for (const auto& chunk : chunks)
    for (const auto& h : chunk) print_power_hit(opt.fmt, h);
}

void print_witness(const Options& opt, const BasePairWitness& w) {
  print_value_base_digits_header(opt.fmt);
  if (opt.fmt == Format::json_lines) {
    std::cout << json{{"value", w.value},
                      {"first", digitstring_json(w.first)},
                      {"second", digitstring_json(w.second)}}
                     .dump()
              << '\n';
    return;
  }
  if (opt.fmt == Format::text) {
    std::cout << w.value << " base " << w.first.base << ": " << digits_text(w.first) << '\n';
    std::cout << w.value << " base " << w.second.base << ": " << digits_text(w.second) << '\n';
    return;
  }
  print_value_base_digits(opt.fmt, w.first, w.value);
  print_value_base_digits(opt.fmt, w.second, w.value);
}

void print_report(const Options& opt, const MultibaseReport& r) {
  print_value_base_digits_header(opt.fmt);
  switch (opt.fmt) {
    case Format::json_lines: {
      json entries = json::array();
      for (const auto& e : r.entries) entries.push_back(digitstring_json(e));
      std::cout << json{{"value", r.value}, {"entries", entries}}.dump() << '\n';
      break;
    }
    case Format::text:
      for (const auto& e : r.entries)
        std::cout << r.value << " base " << e.base << ": " << digits_text(e) << '\n';
      break;
    case Format::csv:
      for (const auto& e : r.entries) print_value_base_digits(opt.fmt, e, r.value);
      break;
  }
}

void cmd_multibase(const Options& opt, std::uint64_t m) {
  print_report(opt, antipalindromic_bases(m));
}

void cmd_common(const Options& opt, std::uint64_t base1, std::uint64_t base2,
                std::uint64_t limit) {
  std::vector<std::uint64_t> found;
  if (limit >= 2) {
    const auto parts = split_range(1, limit, opt.workers);
    auto chunks = map_parts<std::vector<std::uint64_t>>(parts, opt.workers, [&](SearchRange r) {
      return common_antipalindromes_in_range(base1, base2, r);
    });
    found = concat(std::move(chunks));
  }
  print_value_base_digits_header(opt.fmt);
  for (std::uint64_t v : found) {
    switch (opt.fmt) {
      case Format::text:
        std::cout << v << '\n';
        break;
      case Format::json_lines: {
        std::cout << json{{"value", v},
                          {"entries", json::array({digitstring_json(to_digits(v, base1)),
                                                   digitstring_json(to_digits(v, base2))})}}
                         .dump()
                  << '\n';
        break;
      }
      case Format::csv:
        print_value_base_digits(opt.fmt, to_digits(v, base1), v);
        print_value_base_digits(opt.fmt, to_digits(v, base2), v);
        break;
    }
  }
}

void cmd_sums_decompose(const Options& opt, std::uint64_t n, std::uint64_t base,
                        unsigned max_terms) {
  const auto dec = decompose(n, base, max_terms);
  switch (opt.fmt) {
    case Format::text:
      if (!dec) {
        std::cout << n << " none\n";
      } else {
        std::cout << n << " =";
        for (std::size_t i = 0; i < dec->terms.size(); ++i)
          std::cout << (i == 0 ? " " : " + ") << dec->terms[i];
        std::cout << '\n';
      }
      break;
    case Format::json_lines:
      if (!dec)
        std::cout << json{{"target", n}, {"base", base}, {"terms", nullptr}}.dump() << '\n';
      else
        std::cout << json{{"target", dec->target}, {"base", dec->base}, {"terms", dec->terms}}
                         .dump()
                  << '\n';
      break;
    case Format::csv:
      std::cout << "target,base,terms\n";
      std::cout << n << ',' << base << ',' << (dec ? digits_spaced(dec->terms) : "") << '\n';
      break;
  }
}

void print_exception_list(const Options& opt, const std::vector<std::uint64_t>& exceptions,
                          std::uint64_t limit, const char* what) {
  switch (opt.fmt) {
    case Format::text:
      for (std::uint64_t v : exceptions) std::cout << v << '\n';
      std::cerr << what << ": " << exceptions.size() << " exception(s) below " << limit << '\n';
      break;
    case Format::json_lines:
      std::cout << json{{"limit", limit}, {"exceptions", exceptions}}.dump() << '\n';
      break;
    case Format::csv:
      std::cout << "value\n";
      for (std::uint64_t v : exceptions) std::cout << v << '\n';
      break;
  }
}

void cmd_sums_verify(const Options& opt, std::uint64_t limit, bool palindromes_only) {
  if (limit < 2) {
    print_exception_list(opt, {}, limit, palindromes_only ? "palindrome targets" : "targets");
    return;
  }
  const SumReachability reach(3, limit);
  std::cerr << "precomputed " << reach.antipalindromes().size()
            << " base-3 antipalindromes below " << limit << '\n';
  const auto parts = split_range(1, limit, opt.workers);
  auto chunks =
      map_parts<std::vector<std::uint64_t>>(parts, opt.workers, [&](SearchRange r) {
        std::vector<std::uint64_t> out;
        if (!palindromes_only) return reach.exceptions_in(r);
        for (std::uint64_t n = r.lo; n < r.hi; ++n)
          if (is_palindromic_number(n, 3) && !reach.representable(n)) out.push_back(n);
        return out;
      });
  print_exception_list(opt, concat(std::move(chunks)), limit,
                       palindromes_only ? "palindrome targets" : "targets");
}

void cmd_tables(const Options& opt, std::uint64_t exponent, std::uint64_t n_lo,
                std::uint64_t n_hi, std::uint64_t limit) {
  struct Cell {
    std::uint64_t n, base, count;
  };
  std::vector<std::vector<Cell>> rows(3);
  for (std::uint64_t offset = 0; offset < 3; ++offset) {
    for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
      auto nk = checked_pow(n, exponent);
      auto base = nk ? checked_add(*nk, offset) : std::nullopt;
      if (!base) throw std::overflow_error("tables: base exceeds 64-bit range");
      const std::uint64_t max_root = limit < 2 ? 0 : integer_kth_root(limit - 1, exponent);
      const auto parts = split_range(1, max_root + 1, opt.workers);
      auto counts = map_parts<std::uint64_t>(parts, opt.workers, [&](SearchRange r) {
        return count_antipalindromic_powers_in_root_range(*base, exponent, limit, r.lo, r.hi);
      });
      std::uint64_t total = 0;
      for (std::uint64_t c : counts) total += c;
      rows[offset].push_back(Cell{n, *base, total});
      std::cerr << "counted base " << *base << ": " << total << '\n';
    }
  }
  const char* row_names[3] = {"n^k", "n^k+1", "n^k+2"};
  switch (opt.fmt) {
    case Format::text: {
      std::cout << "base";
      for (std::uint64_t n = n_lo; n <= n_hi; ++n) std::cout << '\t' << "n=" << n;
      std::cout << '\n';
      for (std::uint64_t offset = 0; offset < 3; ++offset) {
        std::cout << row_names[offset];
        for (const Cell& c : rows[offset]) std::cout << '\t' << c.count;
        std::cout << '\n';
      }
      break;
    }
    case Format::json_lines:
      for (std::uint64_t offset = 0; offset < 3; ++offset)
        for (const Cell& c : rows[offset])
          std::cout << json{{"n", c.n},
                            {"base", c.base},
                            {"exponent", exponent},
                            {"limit", limit},
                            {"count", c.count}}
                           .dump()
                    << '\n';
      break;
    case Format::csv:
      std::cout << "n,base,exponent,count\n";
      for (std::uint64_t offset = 0; offset < 3; ++offset)
        for (const Cell& c : rows[offset])
          std::cout << c.n << ',' << c.base << ',' << exponent << ',' << c.count << '\n';
      break;
  }
}

// ---------------------------------------------------------------------------
// verify: theorem/property suites over desk-scale ranges

struct SuiteReport {
  int failures = 0;

  void check(const Options& opt, const std::string& name, bool passed,
             const std::string& detail = "") {
    if (!passed) ++failures;
    switch (opt.fmt) {
      case Format::text:
        std::cout << (passed ? "ok   " : "FAIL ") << name;
        if (!passed && !detail.empty()) std::cout << ": " << detail;
        std::cout << '\n';
        break;
      case Format::json_lines:
        std::cout << json{{"check", name}, {"passed", passed}, {"detail", detail}}.dump()
                  << '\n';
        break;
      case Format::csv:
        std::cout << '"' << name << "\"," << (passed ? "true" : "false") << '\n';
        break;
    }
  }
};

void suite_digits(const Options& opt, SuiteReport& rep, std::uint64_t limit) {
  bool round_trip = true;
  for (std::uint64_t b = 2; b <= 16 && round_trip; ++b)
    for (std::uint64_t m = 1; m <= limit; ++m)
      if (from_digits(to_digits(m, b)) != m) {
        round_trip = false;
        break;
      }
  rep.check(opt, "digits/round-trip", round_trip);

  bool digit_sum = true;
  for (std::uint64_t b = 3; b <= 12; ++b)
    for (std::uint64_t m = 1; m <= limit; ++m) {
      std::uint64_t sum = 0;
      for (std::uint64_t d : to_digits(m, b).digits) sum += d;
      if ((m % (b - 1) == 0) != (sum % (b - 1) == 0)) digit_sum = false;
    }
  rep.check(opt, "digits/digit-sum-lemma", digit_sum);

  bool involution = true;
  bool fixed_point = true;
  for (std::uint64_t b = 2; b <= 16; ++b)
    for (std::uint64_t m = 1; m <= std::min<std::uint64_t>(limit, 5000); ++m) {
      const DigitString d = to_digits(m, b);
      const auto once = antipalindromic_complement(d.digits, b);
      if (antipalindromic_complement(once, b) != d.digits) involution = false;
      if ((once == d.digits) != is_antipalindrome(d)) fixed_point = false;
    }
  rep.check(opt, "digits/complement-involution", involution);
  rep.check(opt, "digits/antipalindrome-iff-fixed-point", fixed_point);

  bool divisibility = true;
  bool odd_shape = true;
  for (std::uint64_t b = 2; b <= 12; ++b)
    for (std::uint64_t m : antipalindromes_in_range(b, SearchRange{1, limit * 10})) {
      const DigitString d = to_digits(m, b);
      if (m % guaranteed_divisor(b, d.digits.size()) != 0) divisibility = false;
      if (d.digits.size() % 2 == 1 &&
          (b % 2 == 0 || d.digits[d.digits.size() / 2] != (b - 1) / 2))
        odd_shape = false;
    }
  rep.check(opt, "digits/guaranteed-divisor", divisibility);
  rep.check(opt, "digits/odd-length-structure", odd_shape);

  bool pal_antipal = true;
  for (std::uint64_t b : {3ull, 5ull, 7ull, 9ull})
    for (std::uint64_t m = 1; m <= limit; ++m) {
      const DigitString d = to_digits(m, b);
      bool constant = true;
      for (std::uint64_t digit : d.digits)
        if (digit != (b - 1) / 2) constant = false;
      if ((is_palindrome(d) && is_antipalindrome(d)) != constant) pal_antipal = false;
    }
  rep.check(opt, "digits/palindrome-and-antipalindrome", pal_antipal);
}

void suite_enumeration(const Options& opt, SuiteReport& rep, std::uint64_t limit) {
  bool oracle_eq = true;
  for (std::uint64_t b = 2; b <= 12; ++b) {
    std::vector<std::uint64_t> brute;
    for (std::uint64_t m = 1; m <= limit; ++m)
      if (is_antipalindromic_number(m, b)) brute.push_back(m);
    if (antipalindromes_in_range(b, SearchRange{1, limit + 1}) != brute) oracle_eq = false;
  }
  rep.check(opt, "enumerate/stream-equals-filter", oracle_eq);

  bool counts = true;
  for (std::uint64_t b = 2; b <= 7; ++b) {
    std::vector<std::uint64_t> per_length(9, 0);
    AntipalindromeStream s(b, 1);
    while (auto v = s.next()) {
      const auto len = static_cast<std::uint64_t>(digit_count(*v, b));
      if (len > 8) break;
      ++per_length[len];
    }
    for (std::uint64_t len = 1; len <= 8; ++len)
      if (count_antipalindromes_with_length(b, len) != per_length[len]) counts = false;
  }
  rep.check(opt, "enumerate/length-counts", counts);

  bool successor = true;
  for (std::uint64_t b : {2ull, 3ull, 10ull}) {
    const auto all = antipalindromes_in_range(b, SearchRange{1, 5000});
    std::uint64_t cur = 0;
    for (std::uint64_t expected : all) {
      cur = next_antipalindrome(b, cur);
      if (cur != expected) successor = false;
    }
  }
  rep.check(opt, "enumerate/successor-walk", successor);
}

void suite_primes(const Options& opt, SuiteReport& rep, std::uint64_t limit) {
  bool exhaustive = true;
  std::vector<std::uint64_t> brute;
  for (std::uint64_t m = 1; m < limit; ++m)
    if (is_antipalindromic_number(m, 3) && is_prime(m)) brute.push_back(m);
  std::vector<std::uint64_t> searched;
  bool invariants = true;
  for (const auto& rec : antipalindromic_primes_base3(SearchRange{1, limit})) {
    searched.push_back(rec.value);
    if (rec.value % 6 != 1 || rec.base3_digits.digits.size() % 2 != 1 ||
        rec.base3_digits.digits.size() < 3 || rec.base3_digits.digits.front() != 1 ||
        !is_antipalindrome(rec.base3_digits) || from_digits(rec.base3_digits) != rec.value)
      invariants = false;
  }
  exhaustive = searched == brute;
  rep.check(opt, "primes/base3-exhaustive", exhaustive);
  rep.check(opt, "primes/base3-structure", invariants);

  bool unique = true;
  for (std::uint64_t b = 4; b <= 50; ++b) {
    std::vector<std::uint64_t> found;
    for (std::uint64_t m = 1; m < limit; ++m)
      if (is_prime(m) && is_antipalindromic_number(m, b)) found.push_back(m);
    if (antipalindromic_primes_general(b, SearchRange{1, limit}) != found) unique = false;
    if (found.size() > 1 || (found.size() == 1 && found[0] != (b - 1) / 2)) unique = false;
  }
  rep.check(opt, "primes/general-uniqueness", unique);
}

void suite_powers(const Options& opt, SuiteReport& rep) {
  bool family = true;
  for (std::uint64_t n = 2; n <= 9; ++n)
    for (std::uint64_t k = 2; k <= 4; ++k)
      for (std::uint64_t m = 2; m <= n; ++m) {
        const PowerHit fam = construct_power_family(n, k, m);
        const auto found = antipalindromic_powers(fam.base, k, fam.value + 1);
        bool present = false;
        for (const auto& h : found) present = present || h == fam;
        if (!present) family = false;
      }
  rep.check(opt, "powers/family-in-search", family);

  bool odd_ok = true;
  for (std::uint64_t m : {2ull, 3ull})
    for (std::uint64_t k : {3ull, 5ull}) {
      const std::uint64_t bound = odd_power_base_bound(m, k);
      for (std::uint64_t b : {bound, bound + 1, bound + 17}) {
        try {
          const PowerHit h = construct_odd_power(m, k, b);
          if (h.digits != to_digits(h.value, b) || !is_antipalindrome(h.digits)) odd_ok = false;
        } catch (const std::overflow_error&) {
          // (3*(b-1))^5 has no 64-bit representation; the signal is the contract
          if (!(m == 3 && k == 5)) odd_ok = false;
        }
      }
    }
  rep.check(opt, "powers/odd-power-two-routes", odd_ok);
}

void suite_multibase(const Options& opt, SuiteReport& rep, std::uint64_t limit) {
  bool remark = true;
  bool composite = true;
  for (std::uint64_t m = 1; m <= limit; ++m) {
    const MultibaseReport r = antipalindromic_bases(m);
    bool has_top = false;
    for (const auto& e : r.entries) {
      if (from_digits(e) != m || !is_antipalindrome(e)) remark = false;
      has_top = has_top || e.base == 2 * m + 1;
    }
    if (!has_top) remark = false;
    if (m >= 4 && !is_prime(m)) {
      const BasePairWitness w = composite_two_bases(m);
      bool first_in = false, second_in = false;
      for (const auto& e : r.entries) {
        first_in = first_in || e.base == w.first.base;
        second_in = second_in || e.base == w.second.base;
      }
      if (!first_in || !second_in) composite = false;
    }
  }
  rep.check(opt, "multibase/2m+1-and-reverify", remark);
  rep.check(opt, "multibase/composite-two-bases", composite);

  bool block = true;
  for (std::uint64_t m : antipalindromes_in_range(9, SearchRange{1, 1000000})) {
    if (to_digits(m, 9).digits.front() < 3) continue;
    if (block_palindrome_check(m, 3, 2).all_blocks_palindromic !=
        is_antipalindromic_number(m, 3))
      block = false;
  }
  rep.check(opt, "multibase/block-theorem-base3", block);
}

void suite_sums(const Options& opt, SuiteReport& rep, std::uint64_t limit) {
  const auto exceptions = verify_sum_conjecture(limit);
  std::vector<std::uint64_t> expected;
  for (std::uint64_t v : {24ull, 37ull, 49ull, 117ull, 421ull})
    if (v < limit) expected.push_back(v);
  std::ostringstream detail;
  detail << "exceptions:";
  for (std::uint64_t v : exceptions) detail << ' ' << v;
  rep.check(opt, "sums/three-term-exceptions", exceptions == expected, detail.str());
}

void suite_palindrome_sums(const Options& opt, SuiteReport& rep, std::uint64_t limit) {
  const auto exceptions = verify_palindrome_sum_conjecture(limit);
  std::ostringstream detail;
  detail << exceptions.size() << " palindromic exception(s)";
  rep.check(opt, "sums/palindromes-three-term", exceptions.empty(), detail.str());
}

int cmd_verify(const Options& opt, const std::string& suite, std::uint64_t limit) {
  SuiteReport rep;
  const bool all = suite == "all";
  if (all || suite == "digits") suite_digits(opt, rep, std::min<std::uint64_t>(limit, 100000));
  if (all || suite == "enumeration")
    suite_enumeration(opt, rep, std::min<std::uint64_t>(limit, 100000));
  if (all || suite == "primes") suite_primes(opt, rep, std::min<std::uint64_t>(limit, 100000));
  if (all || suite == "powers") suite_powers(opt, rep);
  if (all || suite == "multibase")
    suite_multibase(opt, rep, std::min<std::uint64_t>(limit, 10000));
  if (all || suite == "sums") suite_sums(opt, rep, limit);
  if (all || suite == "palindrome-sums") suite_palindrome_sums(opt, rep, limit);
  if (opt.fmt == Format::text)
    std::cerr << (rep.failures == 0 ? "all checks passed" : "checks FAILED") << '\n';
  return rep.failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"antipal: exact search and verification for antipalindromic numbers"};
  app.require_subcommand(1);

  std::string format_name = "text";
  unsigned workers = 1;
  app.add_option("--format", format_name, "output format: text, json, or csv")
      ->capture_default_str();
  app.add_option("--workers", workers, "worker threads for range searches")
      ->capture_default_str();

  // raw string arguments so 1e12-style shorthand stays exact; each option has
  // its own variable (subcommands are mutually exclusive, defaults are not)
  std::string arg_m, arg_base = "10", arg_from = "1", arg_below, arg_limit, arg_n, arg_k,
              arg_p, arg_q, arg_a, arg_max;
  std::string arg_sums_base = "3", arg_tab_range, arg_tab_limit;

  auto* expand = app.add_subcommand("expand", "canonical digit expansion of m in a base");
  expand->add_option("m", arg_m)->required();
  expand->add_option("--base", arg_base, "base (default 10)");

  auto* check = app.add_subcommand("check", "is m antipalindromic in the base?");
  check->add_option("m", arg_m)->required();
  check->add_option("--base", arg_base, "base (default 10)");

  auto* enumerate = app.add_subcommand("enumerate", "ascending antipalindromes in a range");
  enumerate->add_option("--base", arg_base)->required();
  enumerate->add_option("--from", arg_from, "inclusive lower bound (default 1)");
  enumerate->add_option("--below", arg_below, "exclusive upper bound")->required();
  enumerate->add_option("--max", arg_max, "stop after this many values");

  auto* next = app.add_subcommand("next", "smallest antipalindrome greater than m");
  next->add_option("m", arg_m)->required();
  next->add_option("--base", arg_base)->required();

  auto* primes = app.add_subcommand("primes", "antipalindromic primes in a base");
  primes->add_option("--base", arg_base)->required();
  primes->add_option("--from", arg_from);
  primes->add_option("--below", arg_below)->required();

  auto* powers = app.add_subcommand("powers", "antipalindromic k-th powers below a limit");
  powers->add_option("--base", arg_base)->required();
  powers->add_option("--exponent", arg_k)->required();
  powers->add_option("--limit", arg_limit)->required();
  bool count_only = false;
  powers->add_flag("--count", count_only, "print only the count");

  auto* construct = app.add_subcommand("construct", "constructive theorem instances");
  construct->require_subcommand(1);
  auto* family = construct->add_subcommand("family", "(m*n)^k in base n^k+1");
  family->add_option("--n", arg_n)->required();
  family->add_option("--k", arg_k)->required();
  family->add_option("--m", arg_m)->required();
  auto* oddpow = construct->add_subcommand("odd-power", "[m*(b-1)]^k for odd k");
  oddpow->add_option("--m", arg_m)->required();
  oddpow->add_option("--k", arg_k)->required();
  oddpow->add_option("--base", arg_base)->required();
  auto* composite = construct->add_subcommand("composite", "two bases for a composite number");
  composite->add_option("a", arg_a)->required();
  auto* factorial = construct->add_subcommand("factorial", "(2n)! in its n+1 constructed bases");
  factorial->add_option("--n", arg_n)->required();
  auto* paired = construct->add_subcommand("paired", "a number antipalindromic in the base and a smaller one");
  paired->add_option("--base", arg_base)->required();
  auto* gcdc = construct->add_subcommand("gcd", "p'*q'*d antipalindromic in bases p+1 and q+1");
  gcdc->add_option("--p", arg_p)->required();
  gcdc->add_option("--q", arg_q)->required();

  auto* multibase = app.add_subcommand("multibase", "every base where m is antipalindromic");
  multibase->add_option("m", arg_m)->required();

  auto* common = app.add_subcommand("common", "numbers antipalindromic in two bases");
  std::string arg_base1, arg_base2;
  common->add_option("--base1", arg_base1)->required();
  common->add_option("--base2", arg_base2)->required();
  common->add_option("--limit", arg_limit)->required();

  auto* sums = app.add_subcommand("sums", "additive decompositions into antipalindromes");
  sums->require_subcommand(1);
  auto* sdec = sums->add_subcommand("decompose", "write n as a sum of 1..3 antipalindromes");
  sdec->add_option("n", arg_m)->required();
  sdec->add_option("--base", arg_sums_base, "base (default 3)");
  unsigned max_terms = 3;
  sdec->add_option("--max-terms", max_terms, "1, 2, or 3");
  auto* sver = sums->add_subcommand("verify", "targets below the limit with no decomposition");
  sver->add_option("--limit", arg_limit)->required();
  auto* spal = sums->add_subcommand("verify-palindromes",
                                    "base-3 palindromes below the limit with no decomposition");
  spal->add_option("--limit", arg_limit)->required();

  auto* tables = app.add_subcommand("tables", "power counts for bases n^k, n^k+1, n^k+2");
  tables->require_subcommand(1);
  auto* tsq = tables->add_subcommand("squares", "squares below the limit");
  tsq->add_option("--n", arg_tab_range, "inclusive n range (default 20..25)");
  tsq->add_option("--limit", arg_tab_limit, "default 1e12");
  auto* tbi = tables->add_subcommand("biquadrates", "fourth powers below the limit");
  tbi->add_option("--n", arg_tab_range, "inclusive n range (default 4..12)");
  tbi->add_option("--limit", arg_tab_limit, "default 1e15");

  auto* verify = app.add_subcommand("verify", "run a theorem/property suite");
  std::string suite;
  verify->add_option("suite", suite,
                     "digits, enumeration, primes, powers, multibase, sums, palindrome-sums, all")
      ->required();
  verify->add_option("--limit", arg_limit, "scan bound (default per suite)");

  // --format / --workers live on the top-level app; let every (nested)
  // subcommand pass unknown options upward to reach them
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* node) {
    for (auto* sub : node->get_subcommands({})) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    Options opt{parse_format(format_name), workers == 0 ? 1u : workers};
    if (expand->parsed()) {
      cmd_expand(opt, parse_u64(arg_m), parse_u64(arg_base));
    } else if (check->parsed()) {
      cmd_check(opt, parse_u64(arg_m), parse_u64(arg_base));
    } else if (enumerate->parsed()) {
      cmd_enumerate(opt, parse_u64(arg_base), parse_u64(arg_from), parse_u64(arg_below),
                    arg_max.empty() ? ~0ull : parse_u64(arg_max));
    } else if (next->parsed()) {
      cmd_next(opt, parse_u64(arg_m), parse_u64(arg_base));
    } else if (primes->parsed()) {
      cmd_primes(opt, parse_u64(arg_base), parse_u64(arg_from), parse_u64(arg_below));
    } else if (powers->parsed()) {
      cmd_powers(opt, parse_u64(arg_base), parse_u64(arg_k), parse_u64(arg_limit), count_only);
    } else if (family->parsed()) {
      print_power_hit_header(opt.fmt);
      print_power_hit(opt.fmt, construct_power_family(parse_u64(arg_n), parse_u64(arg_k),
                                                      parse_u64(arg_m)));
    } else if (oddpow->parsed()) {
      print_power_hit_header(opt.fmt);
      print_power_hit(opt.fmt,
                      construct_odd_power(parse_u64(arg_m), parse_u64(arg_k), parse_u64(arg_base)));
    } else if (composite->parsed()) {
      print_witness(opt, composite_two_bases(parse_u64(arg_a)));
    } else if (factorial->parsed()) {
      print_report(opt, factorial_construction(parse_u64(arg_n)));
    } else if (paired->parsed()) {
      print_witness(opt, paired_base_construction(parse_u64(arg_base)));
    } else if (gcdc->parsed()) {
      print_witness(opt, gcd_construction(parse_u64(arg_p), parse_u64(arg_q)));
    } else if (multibase->parsed()) {
      cmd_multibase(opt, parse_u64(arg_m));
    } else if (common->parsed()) {
      cmd_common(opt, parse_u64(arg_base1), parse_u64(arg_base2), parse_u64(arg_limit));
    } else if (sdec->parsed()) {
      cmd_sums_decompose(opt, parse_u64(arg_m), parse_u64(arg_sums_base), max_terms);
    } else if (sver->parsed()) {
      cmd_sums_verify(opt, parse_u64(arg_limit), false);
    } else if (spal->parsed()) {
      cmd_sums_verify(opt, parse_u64(arg_limit), true);
    } else if (tsq->parsed() || tbi->parsed()) {
      if (arg_tab_range.empty()) arg_tab_range = tsq->parsed() ? "20..25" : "4..12";
      if (arg_tab_limit.empty()) arg_tab_limit = tsq->parsed() ? "1e12" : "1e15";
      const auto [n_lo, n_hi] = parse_inclusive_range(arg_tab_range);
      cmd_tables(opt, tsq->parsed() ? 2 : 4, n_lo, n_hi, parse_u64(arg_tab_limit));
    } else if (verify->parsed()) {
      std::uint64_t limit = arg_limit.empty()
                                ? (suite == "sums" ? 5000000ull
                                                   : suite == "palindrome-sums" ? 1000000ull
                                                                                : 100000ull)
                                : parse_u64(arg_limit);
      return cmd_verify(opt, suite, limit);
    }
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
