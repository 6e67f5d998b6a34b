#include "permdiag/maps.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace permdiag {

namespace {

void require_schroeder(const Permutation& p, const char* who) {
  if (!is_schroeder(p)) {
    throw std::domain_error(std::string(who) + ": input is not a Schröder permutation");
  }
}

/// Row lengths of the Young diagram whose corner set is `corners` (rows
/// 1..n, zero beyond the last corner row).
std::vector<int> shape_from_corners(int n, const std::vector<Square>& corners) {
  std::vector<int> lam(static_cast<size_t>(n) + 2, 0);
  for (const Square& c : corners) {
    for (int i = 1; i <= c.row; ++i) {
      lam[static_cast<size_t>(i)] = std::max(lam[static_cast<size_t>(i)], c.col);
    }
  }
  return lam;
}

/// Corners of the collapsed diagram of p: rank-1 corners shifted northwest,
/// rank-0 corners in place.
std::vector<Square> collapsed_corners(const Permutation& p) {
  std::vector<Square> out;
  const auto es = essential_set(p);
  for (const auto& e : es.entries()) {
    if (e.rank == 1) {
      out.push_back({e.square.row - 1, e.square.col - 1});
    } else {
      out.push_back(e.square);
    }
  }
  return out;
}

}  // namespace

Permutation collapse(const Permutation& p) {
  require_schroeder(p, "collapse");
  std::vector<RankedEntry> shifted;
  const auto es = essential_set(p);
  for (const auto& e : es.entries()) {
    if (e.rank == 1) {
      shifted.push_back({{e.square.row - 1, e.square.col - 1}, 0});
    } else {
      shifted.push_back(e);
    }
  }
  return retrieve(RankedEssentialSet(p.size(), std::move(shifted)));
}

Permutation collapse_corner(const Permutation& p, Square corner) {
  require_schroeder(p, "collapse_corner");
  std::vector<RankedEntry> entries;
  bool found = false;
  const auto es = essential_set(p);
  for (const auto& e : es.entries()) {
    if (e.square == corner) {
      if (e.rank != 1) {
        throw std::invalid_argument("collapse_corner: corner is not of rank 1");
      }
      entries.push_back({{e.square.row - 1, e.square.col - 1}, 0});
      found = true;
    } else {
      entries.push_back(e);
    }
  }
  if (!found) {
    throw std::invalid_argument("collapse_corner: square is not an essential corner");
  }
  return retrieve(RankedEssentialSet(p.size(), std::move(entries)));
}

std::vector<Permutation> collapse_fiber(const Permutation& s) {
  if (max_rank(s) > 0) {
    throw std::domain_error("collapse_fiber: input is not 132-avoiding");
  }
  const int n = s.size();
  std::vector<Square> corners;
  std::vector<Square> fixed;
  const auto es = essential_set(s);
  for (const auto& e : es.entries()) {
    if (e.square.row + e.square.col < n) {
      corners.push_back(e.square);
    } else {
      fixed.push_back(e.square);
    }
  }
  std::vector<Permutation> out;
  out.reserve(static_cast<size_t>(1) << corners.size());
  for (unsigned mask = 0; mask < (1u << corners.size()); ++mask) {
    std::vector<RankedEntry> entries;
    for (const Square& c : fixed) entries.push_back({c, 0});
    for (std::size_t b = 0; b < corners.size(); ++b) {
      if (mask >> b & 1u) {
        entries.push_back({{corners[b].row + 1, corners[b].col + 1}, 1});
      } else {
        entries.push_back({corners[b], 0});
      }
    }
    out.push_back(retrieve(RankedEssentialSet(n, std::move(entries))));
  }
  return out;
}

Permutation to_213_avoider(const Permutation& p, int k) {
  if (!avoids_increasing(p, k)) {
    throw std::domain_error("to_213_avoider: input contains 1 2 ... k");
  }
  const int n = p.size();
  std::vector<RankedEntry> kept;
  const auto es = essential_set(p);
  for (const auto& e : es.entries()) {
    if (e.rank == 0 && e.square.row + e.square.col == n + 2 - k) continue;
    kept.push_back(e);
  }
  return retrieve(RankedEssentialSet(n, std::move(kept)));
}

Permutation from_213_avoider(const Permutation& q, int k) {
  if (!avoids_two_one_increasing(q, k)) {
    throw std::domain_error("from_213_avoider: input contains 2 1 3 ... k");
  }
  const int n = q.size();
  std::set<Square> rank1;
  const auto es = essential_set(q);
  for (const auto& e : es.entries()) {
    if (e.rank == 1) rank1.insert(e.square);
  }
  // Union of the collapsed diagram with the staircase (n+1-k, ..., 1).
  std::vector<int> lam = shape_from_corners(n, collapsed_corners(q));
  for (int i = 1; i <= n + 1 - k; ++i) {
    lam[static_cast<size_t>(i)] = std::max(lam[static_cast<size_t>(i)], n + 2 - k - i);
  }
  std::vector<RankedEntry> entries;
  for (int i = 1; i <= n; ++i) {
    const int len = lam[static_cast<size_t>(i)];
    if (len >= 1 && len > lam[static_cast<size_t>(i) + 1]) {
      if (!rank1.contains({i + 1, len + 1})) entries.push_back({{i, len}, 0});
    }
  }
  for (const Square& s : rank1) entries.push_back({s, 1});
  return retrieve(RankedEssentialSet(n, std::move(entries)));
}

bool avoids_increasing(const Permutation& p, int k) {
  require_schroeder(p, "avoids_increasing");
  if (k < 1) throw std::invalid_argument("avoids_increasing: need k >= 1");
  const int n = p.size();
  const std::vector<int> lam = shape_from_corners(n, collapsed_corners(p));
  for (int i = 1; i <= n + 1 - k; ++i) {
    if (lam[static_cast<size_t>(i)] < n + 2 - k - i) return false;
  }
  return true;
}

bool avoids_two_one_increasing(const Permutation& p, int k) {
  require_schroeder(p, "avoids_two_one_increasing");
  if (k < 3) throw std::invalid_argument("avoids_two_one_increasing: need k >= 3");
  const int n = p.size();
  const auto es = essential_set(p);
  for (const auto& e : es.entries()) {
    if (e.square.row + e.square.col < n + 3 - k + e.rank) return false;
  }
  return true;
}

bool avoids_decreasing(const Permutation& p, int k) {
  require_schroeder(p, "avoids_decreasing");
  if (k < 2) throw std::invalid_argument("avoids_decreasing: need k >= 2");
  std::map<int, int> rows;
  std::map<int, int> cols;
  const auto es = essential_set(p);
  for (const auto& e : es.entries()) {
    ++rows[e.square.row];
    ++cols[e.square.col];
  }
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(cols.size());
  if (r <= k - 2 || c <= k - 2) return true;
  const auto doubled = [](const std::map<int, int>& m) {
    return static_cast<int>(std::count_if(m.begin(), m.end(),
                                          [](const auto& kv) { return kv.second >= 2; }));
  };
  if (r != k - 1 || doubled(rows) != 1 || doubled(cols) != 1) return false;
  for (const auto& e : es.entries()) {
    if (rows[e.square.row] >= 2 && cols[e.square.col] >= 2) return false;
  }
  return true;
}

bool avoids_231(const Permutation& p) {
  require_schroeder(p, "avoids_231");
  std::set<int> diagram_rows;
  const auto diag = diagram(p);
  for (const Square& s : diag.squares()) diagram_rows.insert(s.row);
  std::map<int, int> corner_rows;
  std::map<int, int> corner_cols;
  const auto es = essential_set(p);
  for (const auto& e : es.entries()) {
    ++corner_rows[e.square.row];
    ++corner_cols[e.square.col];
  }
  for (int i : diagram_rows) {
    auto it = corner_rows.find(i);
    if (it == corner_rows.end() || it->second != 1) return false;
  }
  for (const auto& [col, cnt] : corner_cols) {
    if (cnt > 1) return false;
  }
  return true;
}

bool avoids_231_by_descents(const Permutation& p) {
  const int n = p.size();
  if (n == 0) return true;
  const int s = p.position_of(1);
  const std::vector<int> descents = descent_set(p);
  const int d = static_cast<int>(descents.size());
  auto is_range = [&](int lo, int hi, std::size_t from) {
    // descents[from..] must be exactly lo..hi
    std::size_t idx = from;
    for (int v = lo; v <= hi; ++v, ++idx) {
      if (idx >= descents.size() || descents[idx] != v) return false;
    }
    return idx == descents.size();
  };
  if (s > d) return is_range(1, d, 0);
  // descents must be {1,...,s-1} followed by {s+1,...,d+1}
  std::size_t idx = 0;
  for (int v = 1; v <= s - 1; ++v, ++idx) {
    if (idx >= descents.size() || descents[idx] != v) return false;
  }
  if (!is_range(s + 1, d + 1, idx)) return false;
  if (1 < s && s < n && !(p.at(s - 1) > p.at(s + 1))) return false;
  return true;
}

}  // namespace permdiag
