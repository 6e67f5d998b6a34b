#pragma once

#include "permdiag/count.hpp"
#include "permdiag/permutation.hpp"

namespace permdiag {

/// C(n, k); zero outside 0 <= k <= n.
Count binomial(int n, int k);

/// Large Schröder numbers by the recurrence
/// r_0 = 1, r_n = r_{n-1} + sum_{i<n} r_i r_{n-1-i}. Memoized; safe to call
/// concurrently.
Count schroeder_number(int n);

/// C_n = C(2n, n) / (n + 1). The division is asserted exact.
Count catalan_number(int n);

/// N(n, k) = C(n, k-1) C(n, k) / n for 1 <= k <= n. Asserted exact.
Count narayana_number(int n, int k);

/// Ballot number b(a, b) = (a - b + 1) / (a + b + 1) * C(a + b + 1, a + 1)
/// for 0 <= b <= a. Asserted exact.
Count ballot_number(int a, int b);

/// F_1 = F_2 = 1, F_n = F_{n-1} + F_{n-2}.
Count fibonacci_number(int n);

/// Number of Young diagrams fitting in the staircase (m, m-1, ..., 1) with
/// exactly k >= 1 corners strictly inside the board diagonal, i.e. with
/// row + col <= m. Throws for k < 1.
Count off_diagonal_corner_count(int m, int k);

/// |S_n(T)| by exhaustive generation. Throws on an empty pattern set.
Count count_avoiding(int n, const PatternSet& constraint);

/// Same count, fanned out over first-entry prefixes of S_n and reduced.
Count count_avoiding_parallel(int n, const PatternSet& constraint);

/// Number of ranked square sequences that pass essential-set validation on
/// an n x n board (ranks in {0,1}); equals the Schröder number r_{n-1}.
Count count_valid_essential_sets(int n);

/// The rank-0-only count; equals the Catalan number C_n.
Count count_rank0_essential_sets(int n);

/// Rank-0-only sequences of exactly s entries; a Narayana slice N(n, s+1).
Count count_rank0_essential_sets_of_size(int n, int s);

}  // namespace permdiag
