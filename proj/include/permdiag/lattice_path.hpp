#pragma once

#include "permdiag/count.hpp"
#include "permdiag/permutation.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permdiag {

enum class Step : char { North = 'N', East = 'E', Diagonal = 'D' };

/// A lattice path from (0,0) over steps N = [0,1], E = [1,0], D = [1,1] that
/// never passes below the line y = x. A Schröder path of size n ends at
/// (n,n); it is a Dyck-style path when no D step occurs.
class LatticePath {
 public:
  LatticePath() = default;

  /// Throws std::invalid_argument, naming the offending step index, if the
  /// path dips below the diagonal.
  explicit LatticePath(std::vector<Step> steps);

  /// Parses a bare step word such as "NENNEDENED". Rejects characters other
  /// than N, E, D and paths dipping below the diagonal, reporting the
  /// position of the first violation.
  static LatticePath parse(std::string_view word);

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  std::string word() const;

  std::pair<int, int> endpoint() const;
  bool ends_on_diagonal() const;

  bool operator==(const LatticePath&) const = default;

 private:
  std::vector<Step> steps_;
};

/// Height of a lattice point: y - x.
inline int height(int x, int y) { return y - x; }

/// Encodes a 132-avoiding permutation of length n as the D-free path of
/// length 2n tracing its diagram boundary inside the n x n board, emitted
/// with the origin at the bottom left. Throws on non-132-avoiding input.
LatticePath boundary_path(const Permutation& s);

/// Encodes a Schröder permutation of length n+1 as a Schröder path to (n,n):
/// trace the collapsed diagram boundary and fuse the N,E turn at every
/// corner whose original rank was 0 into a D step. Throws on non-Schröder
/// or empty input.
LatticePath schroeder_path(const Permutation& p);

/// Inverse of schroeder_path: reads the corner set and rank labels off the
/// path and rebuilds the permutation. Throws on paths not ending on the
/// diagonal.
Permutation permutation_from_schroeder_path(const LatticePath& path);

/// Sum of C(h, k-1) over the starting heights h of all E and D steps; equals
/// the number of 1 2 ... k subsequences of the encoded permutation. k >= 2.
Count increasing_statistic(const LatticePath& path, int k);

}  // namespace permdiag
