#pragma once

#include "permdiag/diagram.hpp"
#include "permdiag/permutation.hpp"

#include <vector>

namespace permdiag {

/// Moves every rank-1 essential corner of a Schröder permutation one step
/// northwest and re-ranks it 0, then rebuilds the permutation. The image is
/// 132-avoiding; inversions are preserved, descents never decrease, and
/// every left-to-right minimum survives. Throws on non-Schröder input.
Permutation collapse(const Permutation& p);

/// Single-corner version of collapse: moves only the given rank-1 corner.
/// Throws unless `corner` is a rank-1 entry of the essential set of p.
Permutation collapse_corner(const Permutation& p, Square corner);

/// All Schröder permutations whose collapse equals the 132-avoiding
/// permutation s: one for every subset of essential corners (i,j) of s with
/// i + j < n, so exactly 2^s of them. Throws on non-132-avoiding input.
std::vector<Permutation> collapse_fiber(const Permutation& s);

/// Bijection from {Schröder permutations avoiding 1 2 ... k} onto {Schröder
/// permutations avoiding 2 1 3 ... k}: drops the rank-0 corners lying on the
/// diagonal row + col = n + 2 - k and rebuilds. Throws outside the domain.
Permutation to_213_avoider(const Permutation& p, int k);

/// Inverse of to_213_avoider: restores the staircase corners. Requires
/// k >= 3, is_schroeder(q) and avoids_two_one_increasing(q, k).
Permutation from_213_avoider(const Permutation& q, int k);

/// p avoids 1 2 ... k, decided from the diagram: the collapsed diagram must
/// contain the staircase (n+1-k, n-k, ..., 1). Requires is_schroeder(p),
/// k >= 1.
bool avoids_increasing(const Permutation& p, int k);

/// p avoids 2 1 3 ... k, decided from the ranked essential set: every entry
/// satisfies row + col >= n + 3 - k + rank. Requires is_schroeder(p), k >= 3.
bool avoids_two_one_increasing(const Permutation& p, int k);

/// p avoids k ... 2 1, decided from where the essential corners sit: either
/// fewer than k-1 corner rows or columns, or exactly k-1 corner rows with one
/// doubled row, one doubled column, and no corner doubled in both directions.
/// Requires is_schroeder(p), k >= 2. The corner conditions coincide with the
/// pattern oracle for k <= 4 (verified exhaustively through n = 9); from
/// k = 5 they can reject genuine avoiders whose corner sets double up more
/// than once, the smallest being 6 8 4 7 3 1 5 2.
bool avoids_decreasing(const Permutation& p, int k);

/// p avoids 231: every diagram row holds exactly one essential corner and
/// every diagram column at most one. Requires is_schroeder(p).
bool avoids_231(const Permutation& p);

/// Decides avoidance of {1243, 2143, 231} from the descent set alone, where
/// s is the position of the value 1 and d the number of descents: either
/// s > d with descents {1,...,d}, or s <= d with descents
/// {1,...,s-1, s+1,...,d+1} and p(s-1) > p(s+1) whenever 1 < s < n.
bool avoids_231_by_descents(const Permutation& p);

}  // namespace permdiag
