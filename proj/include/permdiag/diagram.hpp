#pragma once

#include "permdiag/permutation.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace permdiag {

/// A cell of the n x n board: row 1 at the top, column 1 at the left.
/// "Northwest" always means strictly smaller row and strictly smaller column.
struct Square {
  int row = 0;
  int col = 0;
  auto operator<=>(const Square&) const = default;
};

/// The set of board squares left unshaded after shading everything due south
/// or due east of a dot (i, p(i)). Squares are kept row-major sorted so set
/// equality and transposition are canonical.
class Diagram {
 public:
  Diagram() = default;
  Diagram(int board_size, std::vector<Square> squares);

  int board_size() const { return n_; }
  const std::vector<Square>& squares() const { return squares_; }
  std::size_t size() const { return squares_.size(); }
  bool contains(Square s) const;

  Diagram transpose() const;

  bool operator==(const Diagram&) const = default;
  auto operator<=>(const Diagram&) const = default;

 private:
  int n_ = 0;
  std::vector<Square> squares_;
};

struct RankedEntry {
  Square square;
  int rank = 0;
  auto operator<=>(const RankedEntry&) const = default;
};

/// Corner squares of the diagram components, each carrying its rank (number
/// of dots strictly northwest). Uniquely determines the permutation.
class RankedEssentialSet {
 public:
  RankedEssentialSet() = default;
  RankedEssentialSet(int board_size, std::vector<RankedEntry> entries);

  int board_size() const { return n_; }
  const std::vector<RankedEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Text form: header "n=<N>", then one "row col rank" line per entry.
  std::string str() const;
  static RankedEssentialSet parse(std::string_view text);

  bool operator==(const RankedEssentialSet&) const = default;
  auto operator<=>(const RankedEssentialSet&) const = default;

 private:
  int n_ = 0;
  std::vector<RankedEntry> entries_;
};

Diagram diagram(const Permutation& p);

/// Number of dots strictly northwest of s. Throws if s is not a diagram
/// square of p (the rank function is only defined there).
int rank_at(const Permutation& p, Square s);

RankedEssentialSet essential_set(const Permutation& p);

/// Maximum rank over the essential set; -1 when the set is empty.
int max_rank(const Permutation& p);

/// Rank <= 1 everywhere, equivalently p avoids both 1243 and 2143.
bool is_schroeder(const Permutation& p);

/// Rank <= m-3 everywhere, equivalently p avoids every pattern of length m
/// ending with m, m-1. Throws for m < 3.
bool avoids_tail_swap_by_rank(const Permutation& p, int m);

/// Decides whether the entries can be the ranked essential set of some
/// (necessarily unique, necessarily Schröder) permutation on the given
/// board. Only ranks 0 and 1 are supported; rank >= 2 throws.
bool validate_essential_set(const RankedEssentialSet& es);

/// Row by row, place a dot in the leftmost shaded square keeping one dot per
/// column. Throws if placement cannot complete or the result does not
/// reproduce d (i.e. d was not a genuine diagram).
Permutation permutation_from_diagram(const Diagram& d);

/// Reconstructs the unique Schröder permutation whose ranked essential set
/// equals es. Throws if validate_essential_set(es) fails.
Permutation retrieve(const RankedEssentialSet& es);

/// Connected components of the diagram under 4-adjacency, each row-major
/// sorted. All squares of a component share one rank (asserted in debug).
std::vector<std::vector<Square>> components(const Diagram& d);

/// Rank shared by every square of a diagram component of p.
int component_rank(const Permutation& p, const std::vector<Square>& component);

}  // namespace permdiag
