#pragma once

#include "permdiag/count.hpp"

#include <span>
#include <string>
#include <vector>

namespace permdiag {

/// One verification result: a named identity instantiated at n, with the
/// closed-form (expected) and enumerated (actual) values.
struct CheckRecord {
  std::string check;
  int n = 0;
  Count expected;
  Count actual;
  bool pass = false;

  bool operator==(const CheckRecord&) const = default;
};

/// {"check": ..., "n": ..., "expected": "...", "actual": "...", "pass": ...}
/// with the counts as decimal strings.
std::string to_json_line(const CheckRecord& r);

/// Runs every identity of the library against brute-force enumeration:
/// class sizes against the Schröder recurrence, the five closed-form class
/// counts, the two Schröder-number identities (up to max_n_closed), the
/// off-diagonal corner formula, and the ballot/Narayana/essential-set
/// double counts. Enumerations run up to max_n. Records are sorted by check
/// name, then n.
std::vector<CheckRecord> verify_identities(int max_n, int max_n_closed = 20);

/// For every n <= max_n, compares |S_n(T_m + 1 2 ... k)| with
/// |S_n(T_m + 2 1 3 ... k)| by brute force. Any inequality is a
/// counterexample record with pass = false. Requires m >= 3 and k >= 3.
std::vector<CheckRecord> check_conjecture(int m, int k, int max_n);

bool all_pass(std::span<const CheckRecord> records);

}  // namespace permdiag
