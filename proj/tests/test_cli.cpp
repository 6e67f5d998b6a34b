#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "permdiag/analysis.hpp"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(PERMDIAG_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

}  // namespace

TEST_CASE("analyze reports the worked example") {
  const auto res = run("analyze \"4 7 5 2 6 3 1\" --json");
  REQUIRE(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.out);
  CHECK(j.at("is_schroeder") == true);
  CHECK(j.at("max_rank") == 1);
  CHECK(j.at("inversions") == "15");
  CHECK(j.at("diagram_size") == 15);
  CHECK(j.at("collapse") == "6 4 5 3 2 7 1");
  CHECK(j.at("path") == "NENNEDENED");
  CHECK(j.at("increasing_counts").at("2") == "6");
  CHECK(j.at("essential_set").size() == 4);
}

TEST_CASE("analyze json output round-trips") {
  for (const char* perm : {"4 7 5 2 6 3 1", "1 2 3", "9 4 8 10 3 1 7 6 2 5"}) {
    const auto res = run(std::string("analyze \"") + perm + "\" --json");
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::ordered_json::parse(res.out);
    const auto report = permdiag::report_from_json(j);
    CHECK(permdiag::to_json(report) == j);
    CHECK(report == permdiag::analyze(permdiag::Permutation::parse(perm)));
  }
}

TEST_CASE("analyze rejects malformed permutations with exit 2") {
  CHECK(run("analyze \"1 1 2\"").exit_code == 2);
  CHECK(run("analyze \"0 1\"").exit_code == 2);
}

TEST_CASE("analyze ascii board uses rank digits") {
  const auto res = run("analyze \"2 1\" --ascii");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("0 ●") != std::string::npos);
}

TEST_CASE("enumerate counts and caps") {
  auto res = run("enumerate 4 --avoid 1243,2143");
  CHECK(res.exit_code == 0);
  CHECK(lines_of(res.out).back() == "22");

  res = run("enumerate 5 --avoid 1243,2143,321");
  CHECK(lines_of(res.out).back() == "25");

  CHECK(run("enumerate 2").exit_code == 2);                      // --avoid is required
  CHECK(run("enumerate 2 --avoid \"\"").exit_code == 2);         // and must be nonempty
  CHECK(run("enumerate 6 --avoid 132", "PERMDIAG_MAX_N=5").exit_code == 3);
  CHECK(run("enumerate 6 --avoid 132 --force", "PERMDIAG_MAX_N=5").exit_code == 0);
}

TEST_CASE("enumerate can list and aggregate") {
  const auto res = run("enumerate 3 --avoid 132 --list --stats");
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  CHECK(std::count_if(lines.begin(), lines.end(), [](const std::string& l) {
          return l.find("count: 5") != std::string::npos;
        }) == 1);
  CHECK(lines.front() == "1 2 3");
  CHECK(res.out.find("inversions histogram:") != std::string::npos);
  CHECK(res.out.find("descents histogram:") != std::string::npos);
}

TEST_CASE("verify emits passing json lines") {
  const auto res = run("verify --max-n 4");
  REQUIRE(res.exit_code == 0);
  int parsed = 0;
  for (const auto& line : lines_of(res.out)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    CHECK(j.at("pass") == true);
    ++parsed;
  }
  CHECK(parsed > 40);
}

TEST_CASE("conjecture runs the proven case and rejects bad bounds") {
  const auto res = run("conjecture 4 4 --max-n 5");
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  CHECK(lines.size() == 5);
  for (const auto& line : lines) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.at("check") == "conjecture_m4_k4");
    CHECK(j.at("expected") == j.at("actual"));
  }
  CHECK(run("conjecture 2 3 --max-n 5").exit_code == 2);
  CHECK(run("conjecture 4 4 --max-n 11").exit_code == 3);
}

TEST_CASE("fibers reproduces the eight-element fiber") {
  const auto res = run("fibers \"6 4 5 3 2 7 1\"");
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  CHECK(lines.size() == 8);
  CHECK(std::count(lines.begin(), lines.end(), std::string("4 7 5 2 6 3 1")) == 1);
  CHECK(run("fibers \"1 3 2\"").exit_code == 2);  // not 132-avoiding
}

TEST_CASE("path converts in both directions") {
  CHECK(lines_of(run("path \"4 7 5 2 6 3 1\"").out).back() == "NENNEDENED");
  CHECK(lines_of(run("path NENNEDENED").out).back() == "4 7 5 2 6 3 1");
  CHECK(lines_of(run("path \"\"").out).back() == "1");
  CHECK(run("path NEX").exit_code == 2);
  CHECK(run("path EN").exit_code == 2);  // dips below the diagonal
}

TEST_CASE("analysis reports are internally consistent") {
  for (int n = 0; n <= 6; ++n) {
    permdiag::for_each_permutation(n, [](const permdiag::Permutation& p) {
      const auto report = permdiag::analyze(p);
      REQUIRE(permdiag::Count(report.diagram_size) == report.inversion_count);
      REQUIRE(report.schroeder == (report.max_rank <= 1));
      REQUIRE(report.essential.board_size() == report.n);
    });
  }
}

TEST_CASE("verify can write its report to a file") {
  const std::string path = "/tmp/permdiag_verify_out.jsonl";
  std::remove(path.c_str());
  const auto res = run("verify --max-n 3 --out " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.out.empty());
  std::FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  char first = static_cast<char>(std::fgetc(f));
  std::fclose(f);
  CHECK(first == '{');
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
}
