#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include <stampchain/plan_io.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(STAMPCHAIN_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) {
    result.out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

// ============================================================================
// verify
// ============================================================================

TEST_CASE("verify the worked stamp chain", "[cli]") {
  const auto r = run_cli("verify 1 2 4 6 7 --as chain --n 14");
  REQUIRE(r.exit_code == 0);
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("range=14"));
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("admissible=yes"));
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("chain=yes"));
}

TEST_CASE("verify a non-chain exits 1", "[cli]") {
  const auto r = run_cli("verify 1 3 5 7 8 --as chain");
  REQUIRE(r.exit_code == 1);
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("chain=no"));
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("not generated by prefix"));
}

TEST_CASE("verify with nothing requested exits 0", "[cli]") {
  const auto r = run_cli("verify 1 4");
  REQUIRE(r.exit_code == 0);
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("range=2"));
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("admissible=no"));
}

TEST_CASE("parse failures exit 2", "[cli]") {
  REQUIRE(run_cli("verify 1 2 x").exit_code == 2);
  REQUIRE(run_cli("bogus-subcommand").exit_code == 2);
  REQUIRE(run_cli("verify 1 2 --as nonsense").exit_code == 2);
  REQUIRE(run_cli("").exit_code == 2);
}

// ============================================================================
// convert
// ============================================================================

TEST_CASE("convert to chain", "[cli]") {
  const auto r = run_cli("convert 1 3 5 7 8 --direction to-chain");
  REQUIRE(r.exit_code == 0);
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("1 2 4 6 8 9 (range 18)"));
}

TEST_CASE("convert to basis", "[cli]") {
  const auto r = run_cli("convert 1 2 --direction to-basis");
  REQUIRE(r.exit_code == 0);
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("1 (range 2)"));
}

TEST_CASE("convert rejects non-admissible bases", "[cli]") {
  const auto r = run_cli("convert 1 4 --direction to-chain");
  REQUIRE(r.exit_code == 1);
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("admissible"));
}

// ============================================================================
// search
// ============================================================================

TEST_CASE("search prints table-asset lines", "[cli]") {
  const auto r5 = run_cli("search --k 5");
  REQUIRE(r5.exit_code == 0);
  REQUIRE(r5.out == "5 16 1 3 5 7 8\n");

  const auto r1 = run_cli("search --k 1");
  REQUIRE(r1.exit_code == 0);
  REQUIRE(r1.out == "1 2 1\n");

  const auto r6 = run_cli("search --k 6");
  REQUIRE(r6.exit_code == 0);
  REQUIRE(std::count(r6.out.begin(), r6.out.end(), '\n') == 5);
}

TEST_CASE("search with a tiny node budget fails loudly", "[cli]") {
  const auto r = run_cli("search --k 9 --max-nodes 100");
  REQUIRE(r.exit_code == 1);
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("budget exhausted"));
}

// ============================================================================
// plan
// ============================================================================

TEST_CASE("plan picks the minimal chain", "[cli]") {
  const auto r = run_cli("plan --n 14");
  REQUIRE(r.exit_code == 0);
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("chain: 1 2 4 6 7"));
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("4 multiplications"));
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("x^7 = x^1 * x^6"));

  const auto r20 = run_cli("plan --n 20");
  REQUIRE_THAT(r20.out, Catch::Matchers::ContainsSubstring("chain: 1 2 3 6 9 10 11"));
  REQUIRE_THAT(r20.out, Catch::Matchers::ContainsSubstring("savings=6/19"));
}

TEST_CASE("plan beyond the tables needs an explicit chain", "[cli]") {
  const auto r = run_cli("plan --n 215");
  REQUIRE(r.exit_code == 1);
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("beyond embedded tables"));
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("--chain"));
}

TEST_CASE("structured plan output re-parses to the same plan", "[cli]") {
  const auto r = run_cli("plan --n 20 --format structured");
  REQUIRE(r.exit_code == 0);
  const auto parsed = stampchain::parse_plan(r.out);
  const auto expected =
      stampchain::compile_plan(stampchain::StampSet{1, 2, 3, 6, 9, 10, 11}, 20);
  REQUIRE(parsed == expected);
}

TEST_CASE("plan accepts a user-supplied chain", "[cli]") {
  const auto r = run_cli("plan --n 6 --chain 1 2 3");
  REQUIRE(r.exit_code == 0);
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("chain: 1 2 3"));

  const auto bad = run_cli("plan --n 10 --chain 1 3 5");
  REQUIRE(bad.exit_code == 1);
}

// ============================================================================
// tables
// ============================================================================

TEST_CASE("tables command", "[cli]") {
  const auto bases = run_cli("tables --kind bases");
  REQUIRE(bases.exit_code == 0);
  REQUIRE(std::count(bases.out.begin(), bases.out.end(), '\n') == 47);

  const auto chains = run_cli("tables --kind chains");
  REQUIRE_THAT(chains.out, Catch::Matchers::ContainsSubstring("7 22 1 2 3 6 9 10 11"));

  const auto nbar = run_cli("tables --kind nbar");
  REQUIRE_THAT(nbar.out, Catch::Matchers::ContainsSubstring("24 198"));
  REQUIRE_THAT(nbar.out, Catch::Matchers::ContainsSubstring("25 214"));
  REQUIRE(std::count(nbar.out.begin(), nbar.out.end(), '\n') == 25);
}

// ============================================================================
// demos
// ============================================================================

TEST_CASE("subsetconv demo reports the 6 vs 19 split", "[cli]") {
  const auto r = run_cli("demo subsetconv --N 6 --n 20 --seed 1");
  REQUIRE(r.exit_code == 0);
  REQUIRE_THAT(r.out,
               Catch::Matchers::ContainsSubstring("plan: 6 convolutions, reference: 19"));
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("outputs equal"));
}

TEST_CASE("matrix demo reports the 6 vs 21 split", "[cli]") {
  const auto r = run_cli("demo matrix --m 4 --n 22 --seed 1");
  REQUIRE(r.exit_code == 0);
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("plan: 6 products, reference: 21"));
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("outputs equal"));
}

TEST_CASE("matrix demo floating point variant", "[cli]") {
  const auto r = run_cli("demo matrix --m 4 --n 10 --seed 3 --float");
  REQUIRE(r.exit_code == 0);
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("outputs equal"));
}

TEST_CASE("subsetconv demo round-trips its input through the dump format", "[cli]") {
  const std::string dump = "/tmp/stampchain_test_fn.txt";
  const auto seeded = run_cli("demo subsetconv --N 4 --n 10 --seed 7 --dump-input " + dump);
  REQUIRE(seeded.exit_code == 0);
  const auto reloaded = run_cli("demo subsetconv --n 10 --input " + dump);
  REQUIRE(reloaded.exit_code == 0);
  std::remove(dump.c_str());
}

TEST_CASE("seeded demos are reproducible", "[cli]") {
  const auto a = run_cli("demo subsetconv --N 5 --n 14 --seed 42");
  const auto b = run_cli("demo subsetconv --N 5 --n 14 --seed 42");
  // strip the wall-clock line, the only nondeterministic part
  auto strip = [](const std::string& s) {
    std::string out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) {
      if (line.find("wall-clock") == std::string::npos) out += line + '\n';
    }
    return out;
  };
  REQUIRE(strip(a.out) == strip(b.out));
  REQUIRE(a.exit_code == 0);
}
