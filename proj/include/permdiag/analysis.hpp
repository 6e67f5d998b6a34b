#pragma once

#include "permdiag/count.hpp"
#include "permdiag/diagram.hpp"
#include "permdiag/permutation.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace permdiag {

/// Everything the analyze command reports about one permutation. The
/// Schröder-only fields (collapse image, path word, increasing-subsequence
/// counts) are absent for permutations of higher rank.
struct AnalysisReport {
  Permutation permutation;
  int n = 0;
  bool schroeder = false;
  int max_rank = -1;
  Count inversion_count;
  std::size_t diagram_size = 0;
  std::vector<int> descents;
  std::vector<int> minima;
  RankedEssentialSet essential;
  std::optional<Permutation> collapse_image;
  std::optional<std::string> path_word;
  std::vector<std::pair<int, Count>> increasing_counts;  // k = 2..5

  bool operator==(const AnalysisReport&) const = default;
};

AnalysisReport analyze(const Permutation& p);

nlohmann::ordered_json to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const nlohmann::json& j);

/// One character per cell: dots "●", diagram squares their rank digit,
/// shaded squares "·".
std::string render_board(const Permutation& p);

}  // namespace permdiag
