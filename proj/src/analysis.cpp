#include "permdiag/analysis.hpp"

#include "permdiag/lattice_path.hpp"
#include "permdiag/maps.hpp"

#include <sstream>

namespace permdiag {

AnalysisReport analyze(const Permutation& p) {
  AnalysisReport r;
  r.permutation = p;
  r.n = p.size();
  r.max_rank = max_rank(p);
  r.schroeder = r.max_rank <= 1;
  r.inversion_count = inversions(p);
  r.diagram_size = diagram(p).size();
  r.descents = descent_set(p);
  r.minima = left_to_right_minima(p);
  r.essential = essential_set(p);
  if (r.schroeder) {
    r.collapse_image = collapse(p);
    if (!p.empty()) {
      const LatticePath path = schroeder_path(p);
      r.path_word = path.word();
      for (int k = 2; k <= 5; ++k) {
        r.increasing_counts.emplace_back(k, increasing_statistic(path, k));
      }
    }
  }
  return r;
}

nlohmann::ordered_json to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["permutation"] = r.permutation.str();
  j["n"] = r.n;
  j["is_schroeder"] = r.schroeder;
  j["max_rank"] = r.max_rank;
  j["inversions"] = to_decimal(r.inversion_count);
  j["diagram_size"] = r.diagram_size;
  j["descents"] = r.descents;
  j["left_to_right_minima"] = r.minima;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : r.essential.entries()) {
    entries.push_back({{"row", e.square.row}, {"col", e.square.col}, {"rank", e.rank}});
  }
  j["essential_set"] = entries;
  if (r.collapse_image) j["collapse"] = r.collapse_image->str();
  if (r.path_word) j["path"] = *r.path_word;
  if (!r.increasing_counts.empty()) {
    auto counts = nlohmann::ordered_json::object();
    for (const auto& [k, c] : r.increasing_counts) {
      counts[std::to_string(k)] = to_decimal(c);
    }
    j["increasing_counts"] = counts;
  }
  return j;
}

AnalysisReport report_from_json(const nlohmann::json& j) {
  AnalysisReport r;
  r.permutation = Permutation::parse(j.at("permutation").get<std::string>());
  r.n = j.at("n").get<int>();
  r.schroeder = j.at("is_schroeder").get<bool>();
  r.max_rank = j.at("max_rank").get<int>();
  r.inversion_count = count_from_decimal(j.at("inversions").get<std::string>());
  r.diagram_size = j.at("diagram_size").get<std::size_t>();
  r.descents = j.at("descents").get<std::vector<int>>();
  r.minima = j.at("left_to_right_minima").get<std::vector<int>>();
  std::vector<RankedEntry> entries;
  for (const auto& e : j.at("essential_set")) {
    entries.push_back({{e.at("row").get<int>(), e.at("col").get<int>()}, e.at("rank").get<int>()});
  }
  r.essential = RankedEssentialSet(r.n, std::move(entries));
  if (j.contains("collapse")) {
    r.collapse_image = Permutation::parse(j.at("collapse").get<std::string>());
  }
  if (j.contains("path")) r.path_word = j.at("path").get<std::string>();
  if (j.contains("increasing_counts")) {
    for (const auto& [key, value] : j.at("increasing_counts").items()) {
      r.increasing_counts.emplace_back(std::stoi(key),
                                       count_from_decimal(value.get<std::string>()));
    }
  }
  return r;
}

std::string render_board(const Permutation& p) {
  const int n = p.size();
  const Diagram d = diagram(p);
  std::ostringstream out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j > 1) out << ' ';
      if (p.at(i) == j) {
        out << "●";
      } else if (d.contains({i, j})) {
        const int r = rank_at(p, {i, j});
        if (r <= 9) out << r;
        else out << '#';
      } else {
        out << "·";
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace permdiag
