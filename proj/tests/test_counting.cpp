#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "permdiag/counting.hpp"
#include "permdiag/reports.hpp"
#include "test_util.hpp"

#include "json.hpp"

#include <functional>
#include <future>
#include <map>

using namespace permdiag;
using testutil::P;

TEST_CASE("binomial") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(40, 20) == Count("137846528820"));
}

TEST_CASE("schroeder numbers") {
  const std::vector<long long> expected{1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(schroeder_number(static_cast<int>(i)) == expected[i]);
  }
  CHECK(schroeder_number(30) == Count("439442782615614361662"));  // past 64-bit signed range
  CHECK_THROWS_AS(schroeder_number(-1), std::invalid_argument);
}

TEST_CASE("catalan, narayana, ballot, fibonacci") {
  CHECK(catalan_number(3) == 5);
  CHECK(catalan_number(0) == 1);
  CHECK(narayana_number(4, 2) == 6);
  CHECK(narayana_number(4, 1) == 1);
  CHECK(ballot_number(1, 1) == 1);
  CHECK(ballot_number(1, 0) == 1);
  CHECK(fibonacci_number(1) == 1);
  CHECK(fibonacci_number(2) == 1);
  CHECK(fibonacci_number(5) == 5);
  CHECK_THROWS_AS(narayana_number(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(ballot_number(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(fibonacci_number(0), std::invalid_argument);
}

namespace {

/// Corner statistics of Young diagrams inside the staircase (m, ..., 1),
/// enumerated directly; the independent oracle for the closed formulas.
std::map<int, Count> offdiag_corner_histogram(int m) {
  std::map<int, Count> hist;
  std::vector<int> lam(static_cast<size_t>(m) + 2, 0);
  std::function<void(int, int)> rec = [&](int row, int prev) {
    if (row > m) {
      int off = 0;
      for (int i = 1; i <= m; ++i) {
        const int len = lam[static_cast<size_t>(i)];
        if (len >= 1 && len > lam[static_cast<size_t>(i) + 1] && i + len <= m) ++off;
      }
      ++hist[off];
      return;
    }
    for (int v = std::min(prev, m - row + 1); v >= 0; --v) {
      lam[static_cast<size_t>(row)] = v;
      rec(row + 1, v);
      lam[static_cast<size_t>(row)] = 0;
    }
  };
  rec(1, m);
  return hist;
}

}  // namespace

TEST_CASE("off-diagonal corner formula matches enumeration") {
  for (int m = 0; m <= 7; ++m) {
    const auto hist = offdiag_corner_histogram(m);
    for (int k = 1; k <= m; ++k) {
      const auto it = hist.find(k);
      const Count enumerated = it == hist.end() ? 0 : it->second;
      CHECK(off_diagonal_corner_count(m, k) == enumerated);
    }
    // diagrams with every corner on the diagonal row + col = m + 1
    const auto none = hist.find(0);
    CHECK((none == hist.end() ? Count(0) : none->second) == Count(1) << m);
    CHECK(off_diagonal_corner_count(m, m + 1) == 0);
  }
  CHECK_THROWS_AS(off_diagonal_corner_count(4, 0), std::invalid_argument);
}

TEST_CASE("avoidance counting, sequential and fanned out") {
  const auto t4 = tail_swap_patterns(4);
  for (int n = 1; n <= 7; ++n) {
    CHECK(count_avoiding(n, t4) == schroeder_number(n - 1));
  }
  CHECK(count_avoiding_parallel(8, t4) == schroeder_number(7));
  CHECK(count_avoiding(0, t4) == 1);
  CHECK_THROWS_AS(count_avoiding(3, PatternSet()), std::invalid_argument);
}

TEST_CASE("valid essential set counts") {
  for (int n = 1; n <= 7; ++n) {
    CHECK(count_valid_essential_sets(n) == schroeder_number(n - 1));
    CHECK(count_rank0_essential_sets(n) == catalan_number(n));
    Count total_by_size = 0;
    for (int s = 0; s <= n - 1; ++s) {
      const Count slice = count_rank0_essential_sets_of_size(n, s);
      CHECK(slice == narayana_number(n, s + 1));
      total_by_size += slice;
    }
    CHECK(total_by_size == catalan_number(n));
  }
}

TEST_CASE("schroeder number identities") {
  for (int n = 0; n <= 20; ++n) {
    Count by_corners = Count(1) << n;
    for (int k = 1; k <= n - 1; ++k) {
      by_corners += (Count(1) << k) * off_diagonal_corner_count(n, k);
    }
    CHECK(schroeder_number(n) == by_corners);

    Count by_catalan = 0;
    for (int k = 0; k <= n; ++k) {
      by_catalan += binomial(2 * n - k, k) * catalan_number(n - k);
    }
    CHECK(schroeder_number(n) == by_catalan);
  }
}

TEST_CASE("memoized sequences survive concurrent warm-up") {
  std::vector<std::future<Count>> tasks;
  for (int i = 0; i < 8; ++i) {
    tasks.push_back(std::async(std::launch::async, [i] {
      Count sum = 0;
      for (int n = 0; n <= 40 + i; ++n) sum += schroeder_number(n);
      return sum;
    }));
  }
  Count first = tasks.front().get();
  for (std::size_t i = 1; i < tasks.size(); ++i) {
    Count other = tasks[i].get();
    CHECK(other >= first);
  }
  CHECK(schroeder_number(40) == schroeder_number(40));
}

TEST_CASE("verify_identities is green and well-formed") {
  const auto records = verify_identities(5, 8);
  CHECK(all_pass(records));
  CHECK(std::is_sorted(records.begin(), records.end(),
                       [](const CheckRecord& a, const CheckRecord& b) {
                         return std::tie(a.check, a.n) < std::tie(b.check, b.n);
                       }));
  bool saw_class_size = false;
  for (const auto& r : records) {
    const auto j = nlohmann::json::parse(to_json_line(r));
    CHECK(j.at("check").is_string());
    CHECK(j.at("n").is_number_integer());
    CHECK(j.at("expected").is_string());
    CHECK(j.at("actual").is_string());
    CHECK(j.at("pass").is_boolean());
    if (r.check == "class_size_schroeder" && r.n == 4) {
      saw_class_size = true;
      CHECK(r.expected == 22);
      CHECK(r.actual == 22);
    }
  }
  CHECK(saw_class_size);
}

TEST_CASE("conjecture harness agrees on the proven cases") {
  for (const auto& [m, k] : {std::pair{4, 4}, std::pair{3, 3}, std::pair{4, 5}}) {
    const auto records = check_conjecture(m, k, 6);
    CHECK(records.size() == 6);
    CHECK(all_pass(records));
  }
  CHECK_THROWS_AS(check_conjecture(2, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(check_conjecture(3, 2, 5), std::invalid_argument);
}

TEST_CASE("a failing record fails the report") {
  const std::vector<CheckRecord> records{{"demo", 3, Count(5), Count(5), true},
                                         {"demo", 4, Count(7), Count(8), false}};
  CHECK_FALSE(all_pass(records));
  CHECK(all_pass(std::span<const CheckRecord>{}));
  const auto j = nlohmann::json::parse(to_json_line(records[1]));
  CHECK(j.at("pass") == false);
}

TEST_CASE("records serialize counts as decimal strings") {
  CheckRecord r{"demo", 30, schroeder_number(30), schroeder_number(30), true};
  const auto j = nlohmann::json::parse(to_json_line(r));
  CHECK(j.at("expected").get<std::string>() == "439442782615614361662");
}
