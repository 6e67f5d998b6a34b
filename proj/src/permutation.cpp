#include "permdiag/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permdiag {

namespace {

void check_bijection(const std::vector<int>& entries) {
  const int n = static_cast<int>(entries.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : entries) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n));
    }
    if (seen[static_cast<size_t>(v)]) {
      int missing = 0;
      for (int w = 1; w <= n; ++w) {
        if (std::find(entries.begin(), entries.end(), w) == entries.end()) {
          missing = w;
          break;
        }
      }
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " appears twice; value " +
                                  std::to_string(missing) + " is missing");
    }
    seen[static_cast<size_t>(v)] = 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  check_bijection(entries_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse '" + token + "' as an entry");
    }
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return Permutation(std::move(values));
}

int Permutation::position_of(int v) const {
  for (int i = 1; i <= size(); ++i) {
    if (at(i) == v) return i;
  }
  throw std::invalid_argument("value " + std::to_string(v) + " not present");
}

std::string Permutation::str() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(entries_[static_cast<size_t>(i)]);
  }
  return out;
}

Permutation inverse(const Permutation& p) {
  std::vector<int> inv(static_cast<size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) {
    inv[static_cast<size_t>(p.at(i)) - 1] = i;
  }
  return Permutation(std::move(inv));
}

namespace {

// Backtracking match: chosen[t] is the position matched to pattern index t.
// The next candidate must respect the pairwise order of the pattern against
// every already-chosen value.
bool match_from(const Permutation& p, const Permutation& t, std::vector<int>& chosen,
                int next_pos) {
  const int k = t.size();
  const int got = static_cast<int>(chosen.size());
  if (got == k) return true;
  for (int pos = next_pos; pos + (k - got) <= p.size() + 1; ++pos) {
    bool ok = true;
    for (int a = 0; a < got && ok; ++a) {
      const bool vless = p.at(chosen[static_cast<size_t>(a)]) < p.at(pos);
      const bool tless = t.at(a + 1) < t.at(got + 1);
      ok = (vless == tless);
    }
    if (!ok) continue;
    chosen.push_back(pos);
    if (match_from(p, t, chosen, pos + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

Count count_from(const Permutation& p, const Permutation& t, std::vector<int>& chosen,
                 int next_pos) {
  const int k = t.size();
  const int got = static_cast<int>(chosen.size());
  if (got == k) return 1;
  Count total = 0;
  for (int pos = next_pos; pos + (k - got) <= p.size() + 1; ++pos) {
    bool ok = true;
    for (int a = 0; a < got && ok; ++a) {
      const bool vless = p.at(chosen[static_cast<size_t>(a)]) < p.at(pos);
      const bool tless = t.at(a + 1) < t.at(got + 1);
      ok = (vless == tless);
    }
    if (!ok) continue;
    chosen.push_back(pos);
    total += count_from(p, t, chosen, pos + 1);
    chosen.pop_back();
  }
  return total;
}

}  // namespace

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  if (pattern.size() > p.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(static_cast<size_t>(pattern.size()));
  return match_from(p, pattern, chosen, 1);
}

Count count_pattern(const Permutation& p, const Permutation& pattern) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  if (pattern.size() > p.size()) return 0;
  std::vector<int> chosen;
  chosen.reserve(static_cast<size_t>(pattern.size()));
  return count_from(p, pattern, chosen, 1);
}

Count inversions(const Permutation& p) {
  Count total = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) {
      if (p.at(i) > p.at(j)) ++total;
    }
  }
  return total;
}

std::vector<int> descent_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i + 1 <= p.size(); ++i) {
    if (p.at(i) > p.at(i + 1)) out.push_back(i);
  }
  return out;
}

std::vector<int> left_to_right_minima(const Permutation& p) {
  std::vector<int> out;
  int best = p.size() + 1;
  for (int i = 1; i <= p.size(); ++i) {
    if (p.at(i) < best) {
      best = p.at(i);
      out.push_back(i);
    }
  }
  return out;
}

Permutation increasing_pattern(int k) { return Permutation::identity(k); }

Permutation decreasing_pattern(int k) {
  std::vector<int> e(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) e[static_cast<size_t>(i)] = k - i;
  return Permutation(std::move(e));
}

Permutation two_one_increasing_pattern(int k) {
  if (k < 2) throw std::invalid_argument("pattern 21 3...k needs k >= 2");
  std::vector<int> e(static_cast<size_t>(k));
  e[0] = 2;
  e[1] = 1;
  for (int i = 3; i <= k; ++i) e[static_cast<size_t>(i) - 1] = i;
  return Permutation(std::move(e));
}

PatternSet::PatternSet(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
  for (const auto& t : patterns_) {
    if (t.empty()) throw std::invalid_argument("empty pattern in pattern set");
  }
}

PatternSet PatternSet::parse(std::string_view text) {
  std::vector<Permutation> pats;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::vector<int> vals;
    for (char c : token) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("bad pattern word '" + token + "'");
      }
      vals.push_back(c - '0');
    }
    pats.emplace_back(std::move(vals));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return PatternSet(std::move(pats));
}

bool PatternSet::avoided_by(const Permutation& p) const {
  for (const auto& t : patterns_) {
    if (contains_pattern(p, t)) return false;
  }
  return true;
}

PatternSet PatternSet::with(const Permutation& extra) const {
  auto pats = patterns_;
  pats.push_back(extra);
  return PatternSet(std::move(pats));
}

PatternSet tail_swap_patterns(int m) {
  if (m < 3) throw std::invalid_argument("tail swap patterns need m >= 3");
  std::vector<int> prefix(static_cast<size_t>(m) - 2);
  std::iota(prefix.begin(), prefix.end(), 1);
  std::vector<Permutation> pats;
  do {
    std::vector<int> e = prefix;
    e.push_back(m);
    e.push_back(m - 1);
    pats.emplace_back(std::move(e));
  } while (std::next_permutation(prefix.begin(), prefix.end()));
  return PatternSet(std::move(pats));
}

PermutationGenerator::PermutationGenerator(int n) : PermutationGenerator(n, {}) {}

PermutationGenerator::PermutationGenerator(int n, const std::vector<int>& prefix)
    : prefix_len_(prefix.size()) {
  if (n < 0) throw std::invalid_argument("negative n");
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);
  for (int v : prefix) {
    if (v < 1 || v > n || used[static_cast<size_t>(v)]) {
      throw std::invalid_argument("invalid prefix");
    }
    used[static_cast<size_t>(v)] = 1;
  }
  current_ = prefix;
  for (int v = 1; v <= n; ++v) {
    if (!used[static_cast<size_t>(v)]) current_.push_back(v);
  }
}

std::optional<Permutation> PermutationGenerator::next() {
  if (done_) return std::nullopt;
  if (first_) {
    first_ = false;
    return Permutation(current_);
  }
  auto tail = current_.begin() + static_cast<std::ptrdiff_t>(prefix_len_);
  if (!std::next_permutation(tail, current_.end())) {
    done_ = true;
    return std::nullopt;
  }
  return Permutation(current_);
}

AvoidingGenerator::AvoidingGenerator(int n, PatternSet constraint)
    : gen_(n), constraint_(std::move(constraint)) {
  if (constraint_.empty()) {
    throw std::invalid_argument("avoidance constraint must be nonempty");
  }
}

std::optional<Permutation> AvoidingGenerator::next() {
  while (auto p = gen_.next()) {
    if (constraint_.avoided_by(*p)) return p;
  }
  return std::nullopt;
}

}  // namespace permdiag
