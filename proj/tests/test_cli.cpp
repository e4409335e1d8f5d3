#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args, bool keep_stderr = false) {
  const std::string cmd =
      std::string(ANTIPAL_CLI_PATH) + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult result;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("check prints the verdict with the expansion") {
  const auto r = run_cli("check 3276 --base 10");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "true 3276\n");
  const auto neg = run_cli("check 3277 --base 10");
  CHECK(neg.exit_code == 0);
  CHECK(neg.out == "false 3277\n");
  const auto wide = run_cli("check 3276 --base 64");
  CHECK(wide.out == "true 51 12\n");
}

TEST_CASE("expand honors formats") {
  CHECK(run_cli("expand 1581 --base 3").out == "1581 2011120\n");
  CHECK(run_cli("expand 3276 --base 64 --format csv").out == "value,base,digits\n3276,64,51 12\n");
  const auto j = run_cli("expand 52 --base 2 --format json");
  const json rec = json::parse(lines_of(j.out).at(0));
  CHECK(rec["value"] == 52);
  CHECK(rec["base"] == 2);
  CHECK(rec["digits"] == json::array({1, 1, 0, 1, 0, 0}));
}

TEST_CASE("primes --base 3 --below 13000 --format json lists the ten records") {
  const auto r = run_cli("primes --base 3 --below 13000 --format json");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 10);
  const json first = json::parse(lines.front());
  CHECK(first["value"] == 13);
  CHECK(first["base3_digits"]["base"] == 3);
  CHECK(first["base3_digits"]["digits"] == json::array({1, 1, 1}));
  const json last = json::parse(lines.back());
  CHECK(last["value"] == 12241);
}

TEST_CASE("enumerate emits the pinned CSV schema") {
  const auto r = run_cli("enumerate --base 10 --from 3270 --below 3280 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "value,base,digits\n3276,10,3 2 7 6\n");
  const auto text = run_cli("enumerate --base 3 --below 30");
  CHECK(text.out == "1\n4\n6\n13\n21\n");
  const auto capped = run_cli("enumerate --base 3 --below 30 --max 2");
  CHECK(capped.out == "1\n4\n");
  // lazy production: a near-2^64 bound with --max returns immediately
  const auto lazy = run_cli("enumerate --base 2 --below 1.8e19 --max 3");
  CHECK(lazy.out == "2\n10\n12\n");
}

TEST_CASE("scientific shorthand parses to exact integers") {
  const auto a = run_cli("powers --base 10 --exponent 2 --limit 1e2 --count");
  const auto b = run_cli("powers --base 10 --exponent 2 --limit 100 --count");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == "2\n");
  const auto frac = run_cli("powers --base 10 --exponent 2 --limit 2.5e3 --count");
  CHECK(frac.exit_code == 0);
  // 1e1.5 style garbage is a usage error
  CHECK(run_cli("powers --base 10 --exponent 2 --limit 1e1.5 --count").exit_code == 1);
  CHECK(run_cli("powers --base 10 --exponent 2 --limit 1.23e1 --count").exit_code == 1);
}

TEST_CASE("exit codes: 0 ok and none-found, 1 usage, 2 range") {
  CHECK(run_cli("common --base1 6 --base2 8 --limit 1e5").exit_code == 0);  // none found
  CHECK(run_cli("expand 0 --base 10").exit_code == 1);
  CHECK(run_cli("expand 7 --base 1").exit_code == 1);
  CHECK(run_cli("no-such-command").exit_code == 1);
  CHECK(run_cli("expand").exit_code == 1);
  CHECK(run_cli("expand 5 --base 10 --format yaml").exit_code == 1);
  CHECK(run_cli("next 18446744073709551615 --base 2").exit_code == 2);
  CHECK(run_cli("construct factorial --n 11").exit_code == 2);
  CHECK(run_cli("construct composite 7").exit_code == 1);
  CHECK(run_cli("construct odd-power --m 2 --k 3 --base 23").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("construct subcommands emit verified instances") {
  CHECK(run_cli("construct family --n 3 --k 2 --m 2").out == "36 6^2 36\n");
  CHECK(run_cli("construct odd-power --m 2 --k 3 --base 24 --format csv").out ==
        "value,base,exponent,root,digits\n97336,24,3,46,7 0 23 16\n");
  const auto gcd = run_cli("construct gcd --p 4 --q 6 --format csv");
  CHECK(gcd.out == "value,base,digits\n12,5,2 2\n12,7,1 5\n");
  const auto fact = run_cli("construct factorial --n 2 --format csv");
  CHECK(fact.out == "value,base,digits\n24,9,2 6\n24,13,1 11\n24,49,24\n");
  const auto paired = run_cli("construct paired --base 10 --format json");
  const json rec = json::parse(lines_of(paired.out).at(0));
  CHECK(rec["value"] == 36);
  CHECK(rec["second"]["base"] == 19);
}

TEST_CASE("multibase of 3276 lists 21 bases in every format") {
  const auto csv = run_cli("multibase 3276 --format csv");
  const auto lines = lines_of(csv.out);
  REQUIRE(lines.size() == 22);  // header + 21 bases
  CHECK(lines[0] == "value,base,digits");
  CHECK(lines[4] == "3276,64,51 12");
  const auto j = run_cli("multibase 3276 --format json");
  const json rec = json::parse(lines_of(j.out).at(0));
  CHECK(rec["value"] == 3276);
  CHECK(rec["entries"].size() == 21);
}

TEST_CASE("sums commands") {
  CHECK(run_cli("sums decompose 24").out == "24 none\n");
  CHECK(run_cli("sums decompose 24").exit_code == 0);
  CHECK(run_cli("sums decompose 10").out == "10 = 6 + 4\n");
  CHECK(run_cli("sums decompose 8 --max-terms 3").out == "8 = 6 + 1 + 1\n");
  const auto v = run_cli("sums verify --limit 1e3");
  CHECK(v.out == "24\n37\n49\n117\n421\n");
  const auto vp = run_cli("sums verify-palindromes --limit 1e4");
  CHECK(vp.out.empty());
  CHECK(vp.exit_code == 0);
  const auto j = run_cli("sums verify --limit 1e3 --format json");
  const json rec = json::parse(lines_of(j.out).at(0));
  CHECK(rec["exceptions"] == json::array({24, 37, 49, 117, 421}));
}

TEST_CASE("tables reproduce the biquadrate columns quickly") {
  const auto r = run_cli("tables biquadrates --n 4..5 --limit 1e15 --format csv");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "n,base,exponent,count");
  CHECK(lines[1] == "4,256,4,0");
  CHECK(lines[2] == "5,625,4,1");
  CHECK(lines[3] == "4,257,4,6");
  CHECK(lines[4] == "5,626,4,6");
  CHECK(lines[5] == "4,258,4,0");
  CHECK(lines[6] == "5,627,4,0");
}

TEST_CASE("output is byte-identical across worker counts") {
  const auto w1 = run_cli("common --base1 2 --base2 10 --limit 1e8 --workers 1");
  const auto w4 = run_cli("common --base1 2 --base2 10 --limit 1e8 --workers 4");
  CHECK(w1.exit_code == 0);
  CHECK(w1.out == "3276\n");
  CHECK(w1.out == w4.out);

  const auto e1 = run_cli("enumerate --base 7 --below 1e5 --workers 1 --format csv");
  const auto e3 = run_cli("enumerate --base 7 --below 1e5 --workers 3 --format csv");
  CHECK(e1.out == e3.out);

  const auto p1 = run_cli("primes --base 3 --below 1e5 --workers 1 --format json");
  const auto p5 = run_cli("primes --base 3 --below 1e5 --workers 5 --format json");
  CHECK(p1.out == p5.out);

  const auto s1 = run_cli("sums verify --limit 1e5 --workers 1");
  const auto s4 = run_cli("sums verify --limit 1e5 --workers 4");
  CHECK(s1.out == s4.out);

  const auto t1 = run_cli("powers --base 401 --exponent 2 --limit 1e10 --count --workers 1");
  const auto t6 = run_cli("powers --base 401 --exponent 2 --limit 1e10 --count --workers 6");
  CHECK(t1.out == t6.out);
}

TEST_CASE("per-subcommand defaults do not bleed into each other") {
  // expand/check default to base 10 even though sums decompose defaults to 3
  CHECK(run_cli("expand 7").out == "7 7\n");
  CHECK(run_cli("check 18").out == "true 18\n");
  CHECK(run_cli("sums decompose 10").out == "10 = 6 + 4\n");
  // tables squares defaults to n=20..25 (six columns)
  const auto t = run_cli("tables squares --limit 1e6 --format csv");
  CHECK(t.exit_code == 0);
  const auto lines = lines_of(t.out);
  REQUIRE(lines.size() == 19);  // header + 3 rows x 6 columns
  CHECK(lines[1].substr(0, 7) == "20,400,");
  CHECK(lines[18].substr(0, 7) == "25,627,");
  // verify without --limit picks per-suite defaults and must not blow up
  CHECK(run_cli("verify all --limit 5e3").exit_code == 0);
}

TEST_CASE("verify suites pass and report failures via exit code") {
  const auto fast = run_cli("verify enumeration --limit 2e4");
  CHECK(fast.exit_code == 0);
  for (const auto& line : lines_of(fast.out)) CHECK(line.substr(0, 2) == "ok");
  const auto powers = run_cli("verify powers");
  CHECK(powers.exit_code == 0);
  const auto sums = run_cli("verify sums --limit 1e4 --format json");
  CHECK(sums.exit_code == 0);
  const json rec = json::parse(lines_of(sums.out).at(0));
  CHECK(rec["passed"] == true);
}
