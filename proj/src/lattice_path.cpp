#include "permdiag/lattice_path.hpp"

#include "permdiag/counting.hpp"
#include "permdiag/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace permdiag {

namespace {

void walk_checked(const std::vector<Step>& steps) {
  int x = 0;
  int y = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    switch (steps[i]) {
      case Step::North: ++y; break;
      case Step::East: ++x; break;
      case Step::Diagonal: ++x; ++y; break;
    }
    if (y < x) {
      throw std::invalid_argument("path passes below the diagonal at step " +
                                  std::to_string(i + 1));
    }
  }
}

}  // namespace

LatticePath::LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
  walk_checked(steps_);
}

LatticePath LatticePath::parse(std::string_view word) {
  std::vector<Step> steps;
  steps.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case 'N': steps.push_back(Step::North); break;
      case 'E': steps.push_back(Step::East); break;
      case 'D': steps.push_back(Step::Diagonal); break;
      default:
        throw std::invalid_argument("invalid step character '" + std::string(1, word[i]) +
                                    "' at position " + std::to_string(i + 1));
    }
  }
  return LatticePath(std::move(steps));
}

std::string LatticePath::word() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(static_cast<char>(s));
  return out;
}

std::pair<int, int> LatticePath::endpoint() const {
  int x = 0;
  int y = 0;
  for (Step s : steps_) {
    if (s != Step::North) ++x;
    if (s != Step::East) ++y;
  }
  return {x, y};
}

bool LatticePath::ends_on_diagonal() const {
  auto [x, y] = endpoint();
  return x == y;
}

namespace {

/// Row lengths of the Young diagram with the given corner set.
std::vector<int> shape_of(int rows, const std::vector<Square>& corners) {
  std::vector<int> lam(static_cast<size_t>(rows) + 2, 0);
  for (const Square& c : corners) {
    for (int i = 1; i <= c.row; ++i) {
      lam[static_cast<size_t>(i)] = std::max(lam[static_cast<size_t>(i)], c.col);
    }
  }
  return lam;
}

/// Boundary trace of a Young diagram inside an m x m board, from the top
/// right corner to the bottom left, already reflected to the bottom-left
/// origin: west steps become N, south steps become E. At every corner whose
/// label is 0 the E,N turn is fused into a single D step.
LatticePath trace_boundary(int m, const std::vector<int>& lam,
                           const std::map<Square, int>& labels) {
  struct Raw {
    Step step;
    int row;  // completed row for E steps, 0 for N
  };
  std::vector<Raw> raw;
  int prev = m;
  for (int i = 1; i <= m; ++i) {
    for (int w = 0; w < prev - lam[static_cast<size_t>(i)]; ++w) {
      raw.push_back({Step::North, 0});
    }
    raw.push_back({Step::East, i});
    prev = lam[static_cast<size_t>(i)];
  }
  for (int w = 0; w < (m >= 1 ? lam[static_cast<size_t>(m)] : 0); ++w) {
    raw.push_back({Step::North, 0});
  }

  std::vector<Step> steps;
  steps.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].step == Step::East) {
      const int row = raw[i].row;
      const int len = lam[static_cast<size_t>(row)];
      const int next_len = row + 1 <= m ? lam[static_cast<size_t>(row) + 1] : 0;
      const bool corner = len > next_len;
      if (corner) {
        auto it = labels.find({row, len});
        if (it != labels.end() && it->second == 0) {
          assert(i + 1 < raw.size() && raw[i + 1].step == Step::North);
          steps.push_back(Step::Diagonal);
          ++i;  // the fused N
          continue;
        }
      }
    }
    steps.push_back(raw[i].step);
  }
  return LatticePath(std::move(steps));
}

}  // namespace

LatticePath boundary_path(const Permutation& s) {
  if (max_rank(s) > 0) {
    throw std::domain_error("boundary_path: input is not 132-avoiding");
  }
  const int n = s.size();
  std::vector<Square> corners;
  const auto es = essential_set(s);
  for (const auto& e : es.entries()) corners.push_back(e.square);
  return trace_boundary(n, shape_of(n, corners), {});
}

LatticePath schroeder_path(const Permutation& p) {
  if (!is_schroeder(p)) {
    throw std::domain_error("schroeder_path: input is not a Schröder permutation");
  }
  if (p.empty()) {
    throw std::invalid_argument("schroeder_path: permutation must be nonempty");
  }
  const int m = p.size() - 1;
  std::map<Square, int> labels;
  std::vector<Square> corners;
  const auto es = essential_set(p);
  for (const auto& e : es.entries()) {
    Square c = e.square;
    if (e.rank == 1) {
      c = {c.row - 1, c.col - 1};
      assert(c.row + c.col <= m);
    }
    corners.push_back(c);
    labels[c] = e.rank;
  }
  assert(labels.size() == corners.size());
  return trace_boundary(m, shape_of(m, corners), labels);
}

Permutation permutation_from_schroeder_path(const LatticePath& path) {
  const auto [x, y] = path.endpoint();
  if (x != y) {
    throw std::invalid_argument("path does not end on the diagonal");
  }
  const int m = x;
  const int n = m + 1;
  // Row lengths of the traced diagram plus how each row's boundary turned.
  std::vector<int> lam(static_cast<size_t>(m) + 2, 0);
  std::vector<char> viaD(static_cast<size_t>(m) + 2, 0);
  int north_or_diag = 0;
  int row = 0;
  for (Step s : path.steps()) {
    if (s == Step::North) {
      ++north_or_diag;
      continue;
    }
    ++row;
    lam[static_cast<size_t>(row)] = m - north_or_diag;
    if (s == Step::Diagonal) {
      viaD[static_cast<size_t>(row)] = 1;
      ++north_or_diag;
    }
  }
  std::vector<RankedEntry> entries;
  for (int r = 1; r <= m; ++r) {
    const int len = lam[static_cast<size_t>(r)];
    const int next_len = lam[static_cast<size_t>(r) + 1];
    if (len > next_len) {  // corner (r, len)
      if (viaD[static_cast<size_t>(r)]) {
        entries.push_back({{r, len}, 0});
      } else {
        entries.push_back({{r + 1, len + 1}, 1});
      }
    }
  }
  return retrieve(RankedEssentialSet(n, std::move(entries)));
}

Count increasing_statistic(const LatticePath& path, int k) {
  if (k < 2) throw std::invalid_argument("increasing_statistic: need k >= 2");
  int x = 0;
  int y = 0;
  Count total = 0;
  for (Step s : path.steps()) {
    if (s != Step::North) total += binomial(height(x, y), k - 1);
    if (s != Step::North) ++x;
    if (s != Step::East) ++y;
  }
  return total;
}

}  // namespace permdiag
