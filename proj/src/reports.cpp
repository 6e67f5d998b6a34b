#include "permdiag/reports.hpp"

#include "permdiag/counting.hpp"
#include "permdiag/permutation.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace permdiag {

std::string to_json_line(const CheckRecord& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["n"] = r.n;
  j["expected"] = to_decimal(r.expected);
  j["actual"] = to_decimal(r.actual);
  j["pass"] = r.pass;
  return j.dump();
}

namespace {

CheckRecord record(std::string check, int n, Count expected, Count actual) {
  const bool pass = expected == actual;
  return {std::move(check), n, std::move(expected), std::move(actual), pass};
}

Count pow2(int e) { return e >= 0 ? Count(1) << e : 0; }

/// Corner statistics of every Young diagram fitting in the staircase
/// (m, m-1, ..., 1): on_diagonal[k] diagrams have k corners with
/// row + col = m + 1, off_diagonal[k] have k corners with row + col <= m.
struct StaircaseCornerStats {
  std::map<int, Count> on_diagonal;
  std::map<int, Count> off_diagonal;
};

StaircaseCornerStats staircase_corner_stats(int m) {
  StaircaseCornerStats stats;
  std::vector<int> lam(static_cast<size_t>(m) + 1, 0);
  std::function<void(int, int)> rec = [&](int row, int prev) {
    if (row > m) {
      int on = 0;
      int off = 0;
      for (int i = 1; i <= m; ++i) {
        const int len = lam[static_cast<size_t>(i)];
        const int next = i < m ? lam[static_cast<size_t>(i) + 1] : 0;
        if (len >= 1 && len > next) {
          if (i + len == m + 1) ++on;
          else ++off;
        }
      }
      ++stats.on_diagonal[on];
      ++stats.off_diagonal[off];
      return;
    }
    for (int v = std::min(prev, m - row + 1); v >= 0; --v) {
      lam[static_cast<size_t>(row)] = v;
      rec(row + 1, v);
    }
    lam[static_cast<size_t>(row)] = 0;
  };
  rec(1, m);
  return stats;
}

void sort_records(std::vector<CheckRecord>& out) {
  std::sort(out.begin(), out.end(), [](const CheckRecord& a, const CheckRecord& b) {
    if (a.check != b.check) return a.check < b.check;
    return a.n < b.n;
  });
}

}  // namespace

std::vector<CheckRecord> verify_identities(int max_n, int max_n_closed) {
  if (max_n < 1) throw std::invalid_argument("need max_n >= 1");
  std::vector<CheckRecord> out;
  const PatternSet schroeder_pair = tail_swap_patterns(4);

  for (int n = 1; n <= max_n; ++n) {
    const Count class_size = count_avoiding_parallel(n, schroeder_pair);
    out.push_back(record("class_size_schroeder", n, schroeder_number(n - 1), class_size));

    out.push_back(record(
        "closed_form_123_213", n, pow2(n - 1),
        count_avoiding_parallel(
            n, schroeder_pair.with(increasing_pattern(3)).with(two_one_increasing_pattern(3)))));

    const Count c321 = count_avoiding_parallel(n, schroeder_pair.with(decreasing_pattern(3)));
    out.push_back(record("closed_form_321", n, Count(n) + 2 * binomial(n, 3), c321));

    if (n >= 2) {
      Count formula = Count(n + 2) * pow2(n);  // (n+2) 2^{n-3}, kept integral
      formula /= 8;
      out.push_back(record(
          "closed_form_231", n, formula,
          count_avoiding_parallel(n, schroeder_pair.with(Permutation::parse("2 3 1")))));
    }

    out.push_back(record("closed_form_132_123_213", n, fibonacci_number(n + 1),
                         count_avoiding_parallel(n, PatternSet::parse("132,123,213"))));

    out.push_back(record("closed_form_132_231", n, pow2(n - 1),
                         count_avoiding_parallel(n, PatternSet::parse("132,231"))));

    out.push_back(record("essential_sets_total", n, schroeder_number(n - 1),
                         count_valid_essential_sets(n)));
    out.push_back(record("essential_sets_rank0", n, catalan_number(n),
                         count_rank0_essential_sets(n)));
    for (int s = 0; s <= n - 1; ++s) {
      out.push_back(record("narayana_size_" + std::to_string(s), n,
                           narayana_number(n, s + 1),
                           count_rank0_essential_sets_of_size(n, s)));
    }

    const StaircaseCornerStats stats = staircase_corner_stats(n - 1);
    for (int k = 0; k <= n - 1; ++k) {
      auto it = stats.on_diagonal.find(k);
      const Count actual = it == stats.on_diagonal.end() ? 0 : it->second;
      out.push_back(record("ballot_corners_k" + std::to_string(k), n,
                           ballot_number(n - 1, n - 1 - k), actual));
    }
    {
      auto it = stats.off_diagonal.find(0);
      const Count actual = it == stats.off_diagonal.end() ? 0 : it->second;
      out.push_back(record("off_diagonal_corners_none", n, pow2(n - 1), actual));
    }
    for (int k = 1; k <= n - 1; ++k) {
      auto it = stats.off_diagonal.find(k);
      const Count actual = it == stats.off_diagonal.end() ? 0 : it->second;
      out.push_back(record("off_diagonal_corners_k" + std::to_string(k), n,
                           off_diagonal_corner_count(n - 1, k), actual));
    }
  }

  for (int n = 0; n <= max_n_closed; ++n) {
    Count by_corners = pow2(n);
    for (int k = 1; k <= n - 1; ++k) {
      by_corners += pow2(k) * off_diagonal_corner_count(n, k);
    }
    out.push_back(record("identity_corner_expansion", n, schroeder_number(n), by_corners));

    Count by_catalan = 0;
    for (int k = 0; k <= n; ++k) {
      by_catalan += binomial(2 * n - k, k) * catalan_number(n - k);
    }
    out.push_back(record("identity_catalan_sum", n, schroeder_number(n), by_catalan));

    if (n >= 1) {
      const Count binomial_form = binomial(n - 1, 0) + binomial(n - 1, 1) +
                                  2 * binomial(n - 1, 2) + 2 * binomial(n - 1, 3);
      out.push_back(
          record("identity_321_binomial", n, Count(n) + 2 * binomial(n, 3), binomial_form));
    }
  }

  sort_records(out);
  return out;
}

std::vector<CheckRecord> check_conjecture(int m, int k, int max_n) {
  if (m < 3) throw std::invalid_argument("need m >= 3");
  if (k < 3) throw std::invalid_argument("need k >= 3");
  if (max_n < 1) throw std::invalid_argument("need max_n >= 1");
  const PatternSet base = tail_swap_patterns(m);
  const PatternSet lhs = base.with(increasing_pattern(k));
  const PatternSet rhs = base.with(two_one_increasing_pattern(k));
  const std::string name = "conjecture_m" + std::to_string(m) + "_k" + std::to_string(k);
  std::vector<CheckRecord> out;
  for (int n = 1; n <= max_n; ++n) {
    out.push_back(record(name, n, count_avoiding_parallel(n, lhs),
                         count_avoiding_parallel(n, rhs)));
  }
  sort_records(out);
  return out;
}

bool all_pass(std::span<const CheckRecord> records) {
  return std::all_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return r.pass; });
}

}  // namespace permdiag
