#pragma once

#include "permdiag/count.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace permdiag {

/// A permutation of {1,...,n} in one-line notation. Positions and values are
/// 1-based throughout; n = 0 is the legal empty permutation.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `entries` is a rearrangement of
  /// 1..n; the message names the duplicated or missing value.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);

  /// Parses whitespace- or comma-separated one-line notation, e.g.
  /// "4 7 5 2 6 3 1" or "4,7,5,2,6,3,1".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  /// Value at 1-based position i.
  int at(int i) const { return entries_[static_cast<size_t>(i) - 1]; }

  /// 1-based position of value v.
  int position_of(int v) const;

  const std::vector<int>& entries() const { return entries_; }

  std::string str() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> entries_;
};

Permutation inverse(const Permutation& p);

/// True iff some subsequence of p is order-isomorphic to `pattern`.
/// Backtracking over positions; deliberately naive, this is the ground-truth
/// oracle every characterization is tested against.
bool contains_pattern(const Permutation& p, const Permutation& pattern);

/// Number of index subsequences of p order-isomorphic to `pattern`.
Count count_pattern(const Permutation& p, const Permutation& pattern);

Count inversions(const Permutation& p);

/// Positions i with p(i) > p(i+1), ascending.
std::vector<int> descent_set(const Permutation& p);

/// Positions of entries smaller than everything to their left, ascending.
/// Position 1 is always included for n >= 1.
std::vector<int> left_to_right_minima(const Permutation& p);

/// The pattern 1 2 ... k.
Permutation increasing_pattern(int k);

/// The pattern k ... 2 1.
Permutation decreasing_pattern(int k);

/// The pattern 2 1 3 4 ... k (k >= 2).
Permutation two_one_increasing_pattern(int k);

/// A deduplicated collection of patterns used as an avoidance constraint.
class PatternSet {
 public:
  PatternSet() = default;
  explicit PatternSet(std::vector<Permutation> patterns);

  /// Parses comma-separated compact words, e.g. "1243,2143". Each word is a
  /// digit string, so patterns up to length 9 are expressible.
  static PatternSet parse(std::string_view text);

  bool avoided_by(const Permutation& p) const;

  const std::vector<Permutation>& patterns() const { return patterns_; }
  bool empty() const { return patterns_.empty(); }
  std::size_t size() const { return patterns_.size(); }

  PatternSet with(const Permutation& extra) const;

  bool operator==(const PatternSet&) const = default;

 private:
  std::vector<Permutation> patterns_;
};

/// All (m-2)! patterns of length m ending with the two entries m, m-1 in
/// that order. Throws for m < 3.
PatternSet tail_swap_patterns(int m);

/// Streams all n! permutations in lexicographic order, each exactly once.
/// Restartable from a fixed prefix so an enumeration can be partitioned.
class PermutationGenerator {
 public:
  explicit PermutationGenerator(int n);

  /// Only permutations starting with `prefix` (values distinct, in 1..n).
  PermutationGenerator(int n, const std::vector<int>& prefix);

  std::optional<Permutation> next();

 private:
  std::vector<int> current_;
  std::size_t prefix_len_ = 0;
  bool first_ = true;
  bool done_ = false;
};

/// Streams the members of S_n(T) in lexicographic order.
class AvoidingGenerator {
 public:
  AvoidingGenerator(int n, PatternSet constraint);
  std::optional<Permutation> next();

 private:
  PermutationGenerator gen_;
  PatternSet constraint_;
};

template <typename F>
void for_each_permutation(int n, F&& f) {
  PermutationGenerator gen(n);
  while (auto p = gen.next()) f(*p);
}

}  // namespace permdiag
