#include "permdiag/counting.hpp"

#include <future>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace permdiag {

namespace {

/// Divides exactly or refuses: every closed form here is integer-valued,
/// so a remainder means the formula was transcribed wrong.
Count exact_div(Count value, const Count& divisor) {
  if (value % divisor != 0) {
    throw std::logic_error("closed-form division left a remainder");
  }
  return value / divisor;
}

}  // namespace

Count binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  k = std::min(k, n - k);
  Count c = 1;
  for (int i = 1; i <= k; ++i) {
    c = exact_div(c * (n - k + i), i);
  }
  return c;
}

Count schroeder_number(int n) {
  if (n < 0) throw std::invalid_argument("negative index");
  static std::mutex mu;
  static std::vector<Count> memo{1};
  std::lock_guard lock(mu);
  while (static_cast<int>(memo.size()) <= n) {
    const int m = static_cast<int>(memo.size());
    Count next = memo[static_cast<size_t>(m) - 1];
    for (int i = 0; i < m; ++i) {
      next += memo[static_cast<size_t>(i)] * memo[static_cast<size_t>(m - 1 - i)];
    }
    memo.push_back(std::move(next));
  }
  return memo[static_cast<size_t>(n)];
}

Count catalan_number(int n) {
  if (n < 0) throw std::invalid_argument("negative index");
  return exact_div(binomial(2 * n, n), n + 1);
}

Count narayana_number(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("narayana_number: bad arguments");
  return exact_div(binomial(n, k - 1) * binomial(n, k), n);
}

Count ballot_number(int a, int b) {
  if (a < 0 || b < 0 || b > a) throw std::invalid_argument("ballot_number: bad arguments");
  return exact_div(Count(a - b + 1) * binomial(a + b + 1, a + 1), a + b + 1);
}

Count fibonacci_number(int n) {
  if (n < 1) throw std::invalid_argument("fibonacci_number: need n >= 1");
  Count a = 1, b = 1;
  for (int i = 2; i < n; ++i) {
    Count c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return n == 1 ? a : b;
}

Count off_diagonal_corner_count(int m, int k) {
  if (k < 1) throw std::invalid_argument("off_diagonal_corner_count: need k >= 1");
  if (m < 0) return 0;
  // sum_i i/(n-i) C(n-i, k) C(n-1, k+i) with n = m+1, rewritten with each
  // term multiplied by k so only one exact division remains.
  const int n = m + 1;
  Count total = 0;
  for (int i = 1; i <= n - 1 - k; ++i) {
    total += Count(i) * binomial(n - i - 1, k - 1) * binomial(n - 1, k + i);
  }
  return exact_div(std::move(total), k);
}

Count count_avoiding(int n, const PatternSet& constraint) {
  if (constraint.empty()) throw std::invalid_argument("empty avoidance constraint");
  Count total = 0;
  PermutationGenerator gen(n);
  while (auto p = gen.next()) {
    if (constraint.avoided_by(*p)) ++total;
  }
  return total;
}

Count count_avoiding_parallel(int n, const PatternSet& constraint) {
  if (constraint.empty()) throw std::invalid_argument("empty avoidance constraint");
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (n < 7 || hw == 1) return count_avoiding(n, constraint);
  std::vector<std::future<Count>> tasks;
  tasks.reserve(static_cast<size_t>(n));
  for (int first = 1; first <= n; ++first) {
    tasks.push_back(std::async(std::launch::async, [n, first, &constraint] {
      Count part = 0;
      PermutationGenerator gen(n, {first});
      while (auto p = gen.next()) {
        if (constraint.avoided_by(*p)) ++part;
      }
      return part;
    }));
  }
  Count total = 0;
  for (auto& t : tasks) total += t.get();
  return total;
}

namespace {

struct EssentialSetCounter {
  int n;
  bool rank0_only;
  int wanted_size;  // -1 = any

  Count count(int last_ishift, int last_jshift, int size) const {
    Count total = (wanted_size < 0 || size == wanted_size) ? 1 : 0;
    if (wanted_size >= 0 && size == wanted_size) return total;
    const int max_rank = rank0_only ? 0 : 1;
    for (int r = 0; r <= max_rank; ++r) {
      for (int i = r + 1; i <= n; ++i) {
        if (i - r >= last_ishift) continue;
        for (int j = r + 1; j <= n; ++j) {
          if (j - r <= last_jshift) continue;
          if (i + j > n + r) continue;
          total += count(i - r, j - r, size + 1);
        }
      }
    }
    return total;
  }
};

}  // namespace

Count count_valid_essential_sets(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  return EssentialSetCounter{n, false, -1}.count(n + 1, 0, 0);
}

Count count_rank0_essential_sets(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  return EssentialSetCounter{n, true, -1}.count(n + 1, 0, 0);
}

Count count_rank0_essential_sets_of_size(int n, int s) {
  if (n < 1 || s < 0) throw std::invalid_argument("bad arguments");
  return EssentialSetCounter{n, true, s}.count(n + 1, 0, 0);
}

}  // namespace permdiag
