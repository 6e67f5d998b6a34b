#include "permdiag/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace permdiag {

Diagram::Diagram(int board_size, std::vector<Square> squares)
    : n_(board_size), squares_(std::move(squares)) {
  if (n_ < 0) throw std::invalid_argument("negative board size");
  std::sort(squares_.begin(), squares_.end());
  for (std::size_t i = 0; i < squares_.size(); ++i) {
    const Square s = squares_[i];
    if (s.row < 1 || s.col < 1 || s.row > n_ || s.col > n_) {
      throw std::invalid_argument("square off the board");
    }
    // a diagram square is strictly northwest of its row dot and column dot
    if (s.row + s.col > 2 * n_ - 1) {
      throw std::invalid_argument("square cannot belong to any diagram");
    }
    if (i > 0 && squares_[i - 1] == s) {
      throw std::invalid_argument("duplicate square");
    }
  }
}

bool Diagram::contains(Square s) const {
  return std::binary_search(squares_.begin(), squares_.end(), s);
}

Diagram Diagram::transpose() const {
  std::vector<Square> t;
  t.reserve(squares_.size());
  for (const Square& s : squares_) t.push_back({s.col, s.row});
  return Diagram(n_, std::move(t));
}

RankedEssentialSet::RankedEssentialSet(int board_size, std::vector<RankedEntry> entries)
    : n_(board_size), entries_(std::move(entries)) {
  if (n_ < 0) throw std::invalid_argument("negative board size");
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.square.row < 1 || e.square.col < 1 || e.square.row > n_ || e.square.col > n_) {
      throw std::invalid_argument("essential square off the board");
    }
    if (e.rank < 0) throw std::invalid_argument("negative rank");
    if (i > 0 && entries_[i - 1].square == e.square) {
      throw std::invalid_argument("duplicate essential square");
    }
  }
}

std::string RankedEssentialSet::str() const {
  std::string out = "n=" + std::to_string(n_) + "\n";
  for (const auto& e : entries_) {
    out += std::to_string(e.square.row) + " " + std::to_string(e.square.col) + " " +
           std::to_string(e.rank) + "\n";
  }
  return out;
}

RankedEssentialSet RankedEssentialSet::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<RankedEntry> entries;
  while (std::getline(in, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (n < 0) {
      if (line.rfind("n=", 0) != 0) {
        throw std::invalid_argument("expected header line n=<N>");
      }
      n = std::stoi(line.substr(2));
      continue;
    }
    std::istringstream row(line);
    RankedEntry e;
    if (!(row >> e.square.row >> e.square.col >> e.rank)) {
      throw std::invalid_argument("expected 'row col rank' line, got '" + line + "'");
    }
    entries.push_back(e);
  }
  if (n < 0) throw std::invalid_argument("missing header line n=<N>");
  return RankedEssentialSet(n, std::move(entries));
}

Diagram diagram(const Permutation& p) {
  const int n = p.size();
  const Permutation inv = inverse(p);
  std::vector<Square> squares;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < p.at(i); ++j) {
      if (inv.at(j) > i) squares.push_back({i, j});
    }
  }
  return Diagram(n, std::move(squares));
}

namespace {

bool in_diagram(const Permutation& p, const Permutation& inv, Square s) {
  return s.row >= 1 && s.col >= 1 && s.row <= p.size() && s.col <= p.size() &&
         p.at(s.row) > s.col && inv.at(s.col) > s.row;
}

int rank_unchecked(const Permutation& p, Square s) {
  int r = 0;
  for (int i = 1; i < s.row; ++i) {
    if (p.at(i) < s.col) ++r;
  }
  return r;
}

}  // namespace

int rank_at(const Permutation& p, Square s) {
  if (!in_diagram(p, inverse(p), s)) {
    throw std::invalid_argument("(" + std::to_string(s.row) + "," + std::to_string(s.col) +
                                ") is not a diagram square");
  }
  return rank_unchecked(p, s);
}

RankedEssentialSet essential_set(const Permutation& p) {
  const int n = p.size();
  const Permutation inv = inverse(p);
  std::vector<RankedEntry> entries;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < p.at(i); ++j) {
      if (inv.at(j) <= i) continue;
      if (in_diagram(p, inv, {i + 1, j}) || in_diagram(p, inv, {i, j + 1})) continue;
      entries.push_back({{i, j}, rank_unchecked(p, {i, j})});
    }
  }
  return RankedEssentialSet(n, std::move(entries));
}

int max_rank(const Permutation& p) {
  int best = -1;
  const auto es = essential_set(p);
  for (const auto& e : es.entries()) best = std::max(best, e.rank);
  return best;
}

bool is_schroeder(const Permutation& p) { return max_rank(p) <= 1; }

bool avoids_tail_swap_by_rank(const Permutation& p, int m) {
  if (m < 3) throw std::invalid_argument("need m >= 3");
  return max_rank(p) <= m - 3;
}

bool validate_essential_set(const RankedEssentialSet& es) {
  for (const auto& e : es.entries()) {
    if (e.rank >= 2) {
      throw std::invalid_argument("rank " + std::to_string(e.rank) +
                                  " unsupported; only ranks 0 and 1 can be validated");
    }
  }
  // Order entries by column, breaking column ties by descending row, so a
  // valid set reads with weakly decreasing rows and weakly increasing
  // columns.
  auto sorted = es.entries();
  std::sort(sorted.begin(), sorted.end(), [](const RankedEntry& a, const RankedEntry& b) {
    if (a.square.col != b.square.col) return a.square.col < b.square.col;
    return a.square.row > b.square.row;
  });
  const int n = es.board_size();
  int prev_row = n + 1;
  int prev_ishift = n + 1;
  int prev_jshift = 0;
  for (const auto& e : sorted) {
    const int ishift = e.square.row - e.rank;
    const int jshift = e.square.col - e.rank;
    if (ishift <= 0 || jshift <= 0) return false;
    if (e.square.row + e.square.col > n + e.rank) return false;
    if (e.square.row > prev_row) return false;
    if (ishift >= prev_ishift) return false;
    if (jshift <= prev_jshift) return false;
    prev_row = e.square.row;
    prev_ishift = ishift;
    prev_jshift = jshift;
  }
  return true;
}

Permutation permutation_from_diagram(const Diagram& d) {
  const int n = d.board_size();
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);
  std::vector<int> entries;
  entries.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int placed = 0;
    for (int j = 1; j <= n; ++j) {
      if (!d.contains({i, j}) && !used[static_cast<size_t>(j)]) {
        placed = j;
        break;
      }
    }
    if (placed == 0) {
      throw std::invalid_argument("dot placement cannot complete in row " + std::to_string(i));
    }
    used[static_cast<size_t>(placed)] = 1;
    entries.push_back(placed);
  }
  Permutation p(std::move(entries));
  if (diagram(p) != d) {
    throw std::invalid_argument("squares do not form the diagram of any permutation");
  }
  return p;
}

Permutation retrieve(const RankedEssentialSet& es) {
  if (!validate_essential_set(es)) {
    throw std::invalid_argument("not a valid ranked essential set");
  }
  const int n = es.board_size();

  // (1) Grow the rank-0 component: the union of rectangles spanned by the
  // rank-0 entries, recorded as row lengths.
  std::vector<int> lam0(static_cast<size_t>(n) + 2, 0);
  for (const auto& e : es.entries()) {
    if (e.rank != 0) continue;
    for (int i = 1; i <= e.square.row; ++i) {
      lam0[static_cast<size_t>(i)] = std::max(lam0[static_cast<size_t>(i)], e.square.col);
    }
  }

  // (2) Dot every square just outside that component whose full northwest
  // rectangle lies inside it. These dots are the left-to-right minima.
  std::vector<int> dot(static_cast<size_t>(n) + 1, 0);  // row -> column
  for (int i = 1; i <= n; ++i) {
    const int j = lam0[static_cast<size_t>(i)] + 1;
    if (j > n) continue;
    bool ok = true;
    for (int i2 = 1; i2 < i && ok; ++i2) ok = lam0[static_cast<size_t>(i2)] >= j;
    if (ok) dot[static_cast<size_t>(i)] = j;
  }

  // (3) For every dot, whiten the rectangle it spans with each rank-1 entry
  // southeast of it. This completes the rank-1 components.
  std::vector<std::vector<char>> white(static_cast<size_t>(n) + 1,
                                       std::vector<char>(static_cast<size_t>(n) + 1, 0));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= lam0[static_cast<size_t>(i)]; ++j) {
      white[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
    }
  }
  for (int di = 1; di <= n; ++di) {
    const int dj = dot[static_cast<size_t>(di)];
    if (dj == 0) continue;
    for (const auto& e : es.entries()) {
      if (e.rank != 1) continue;
      for (int i = di + 1; i <= e.square.row; ++i) {
        for (int j = dj + 1; j <= e.square.col; ++j) {
          white[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
        }
      }
    }
  }

  // (4) Complete: row by row, dot the leftmost shaded square in a free column.
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    if (dot[static_cast<size_t>(i)]) used[static_cast<size_t>(dot[static_cast<size_t>(i)])] = 1;
  }
  std::vector<int> entries(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    if (dot[static_cast<size_t>(i)]) {
      entries[static_cast<size_t>(i) - 1] = dot[static_cast<size_t>(i)];
      continue;
    }
    for (int j = 1; j <= n; ++j) {
      if (!white[static_cast<size_t>(i)][static_cast<size_t>(j)] &&
          !used[static_cast<size_t>(j)]) {
        entries[static_cast<size_t>(i) - 1] = j;
        used[static_cast<size_t>(j)] = 1;
        break;
      }
    }
    if (entries[static_cast<size_t>(i) - 1] == 0) {
      throw std::invalid_argument("retrieval cannot complete in row " + std::to_string(i));
    }
  }
  return Permutation(std::move(entries));
}

std::vector<std::vector<Square>> components(const Diagram& d) {
  std::set<Square> pending(d.squares().begin(), d.squares().end());
  std::vector<std::vector<Square>> out;
  while (!pending.empty()) {
    std::vector<Square> comp;
    std::vector<Square> stack{*pending.begin()};
    pending.erase(pending.begin());
    while (!stack.empty()) {
      const Square s = stack.back();
      stack.pop_back();
      comp.push_back(s);
      for (Square nb : {Square{s.row - 1, s.col}, Square{s.row + 1, s.col},
                        Square{s.row, s.col - 1}, Square{s.row, s.col + 1}}) {
        auto it = pending.find(nb);
        if (it != pending.end()) {
          pending.erase(it);
          stack.push_back(nb);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int component_rank(const Permutation& p, const std::vector<Square>& component) {
  if (component.empty()) throw std::invalid_argument("empty component");
  const int r = rank_at(p, component.front());
#ifndef NDEBUG
  for (const Square& s : component) assert(rank_at(p, s) == r);
#endif
  return r;
}

}  // namespace permdiag
