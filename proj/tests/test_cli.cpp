#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_data = "") {
  std::string cmd;
  if (!stdin_data.empty()) cmd += "printf '" + stdin_data + "' | ";
  cmd += std::string(BRAID_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 512> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("classify rejects the positive half-twist word with exit 1") {
  const auto r = run("classify -n 4 \"1 2 3 1 2 1\"");
  CHECK(r.exit_code == 1);
  CHECK(r.out == "not_power failed_step=permutation_filter\n");
}

TEST_CASE("classify accepts a generator with exit 0") {
  const auto r = run("classify -n 3 \"1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("power k=1") == 0);
}

TEST_CASE("equal on the squared named vectors") {
  const auto r =
      run("equal -n 4 \"1 2 3 1 2 3 1 2 3 1 2 3\" \"1 2 3 1 2 1 1 2 3 1 2 1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "true\n");
  const auto r2 = run("equal -n 4 \"1 2 3 1 2 3\" \"1 2 3 1 2 1\"");
  CHECK(r2.out == "false\n");
}

TEST_CASE("comb emits the free-word format") {
  const auto r = run("comb -n 4 \"1 -2 -3 -3 2 2 3 3 -2 1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "a2^-1 a3^-1 a2 a3 a1\n");

  const auto outside = run("comb -n 3 \"2 2\"");
  CHECK(outside.exit_code == 1);
  CHECK(outside.out == "not-in-A_n\n");
}

TEST_CASE("cr prints exponent sum and matrix") {
  const auto r = run("cr -n 2 \"1 1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "exp=2\n0 1\n1 0\n");
}

TEST_CASE("json output carries the schema field") {
  const auto r = run("classify --json -n 4 \"1 2 3 1 2 1\"");
  CHECK(r.exit_code == 1);
  const auto rec = nlohmann::json::parse(r.out);
  CHECK(rec["schema"] == 1);
  CHECK(rec["verdict"] == "not_power");
  CHECK(rec["failed_step"] == "permutation_filter");
}

TEST_CASE("parse errors exit with 2 and name the position") {
  CHECK(run("classify -n 3 \"7\"").exit_code == 2);
  CHECK(run("classify -n 3 \"1 x\"").exit_code == 2);
  CHECK(run("classify -n 1 \"1\"").exit_code == 2);  // strand count validation
}

TEST_CASE("undecided budget maps to exit 3") {
  const auto r = run("classify --budget 0 -n 3 \"-2 1 1 2\"");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("undecided") == 0);
}

TEST_CASE("gen then classify then verify round-trips") {
  for (int seed : {7, 11, 29, 63, 104}) {
    const auto gen =
        run("gen --json -n 4 --k 3 --conj-len 6 --seed " + std::to_string(seed));
    REQUIRE(gen.exit_code == 0);
    const auto rec = nlohmann::json::parse(gen.out);
    const std::string word = rec["word"];
    const std::string root = rec["root"];
    const std::string conj = rec["conjugator"];

    const auto cls = run("classify --json -n 4 \"" + word + "\"");
    CHECK(cls.exit_code == 0);
    const auto verdict = nlohmann::json::parse(cls.out);
    CHECK(verdict["verdict"] == "power");
    CHECK(verdict["k"] == 3);

    const auto ver = run("verify -n 4 --k 3 \"" + word + "\" \"" + root + "\" \"" + conj + "\"");
    CHECK(ver.exit_code == 0);
    CHECK(ver.out == "verified\n");

    // a wrong k must be rejected
    const auto bad = run("verify -n 4 --k 2 \"" + word + "\" \"" + root + "\" \"" + conj + "\"");
    CHECK(bad.exit_code == 1);
  }
}

TEST_CASE("identical invocations are byte-identical") {
  const std::string cmd = "gen --json -n 5 --k 4 --conj-len 9 --seed 77";
  const auto a = run(cmd);
  const auto b = run(cmd);
  CHECK(a.out == b.out);
  CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("batch input reads stdin in order, skipping comments") {
  const auto r = run("classify -n 3", "# comment\\n1\\n1 -1\\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("power k=1") == 0);
  CHECK(r.out.find("identity\n") != std::string::npos);

  const auto mixed = run("root -n 3", "1\\n1 2\\n");
  CHECK(mixed.exit_code == 1);  // second word is not a power
}
