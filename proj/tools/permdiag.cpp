#include "permdiag/analysis.hpp"
#include "permdiag/counting.hpp"
#include "permdiag/diagram.hpp"
#include "permdiag/lattice_path.hpp"
#include "permdiag/maps.hpp"
#include "permdiag/permutation.hpp"
#include "permdiag/reports.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

int enumeration_cap() {
  if (const char* env = std::getenv("PERMDIAG_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring unparsable PERMDIAG_MAX_N\n";
    }
  }
  return 9;
}

/// Exit 3 unless n is within the cap or --force was given; warn from n = 10
/// up since each further step multiplies the runtime by n.
bool check_cap(int n, bool force) {
  const int cap = enumeration_cap();
  if (n > cap && !force) {
    std::cerr << "error: n=" << n << " exceeds the enumeration cap " << cap
              << " (use --force or raise PERMDIAG_MAX_N)\n";
    return false;
  }
  if (n >= 10) {
    std::cerr << "warning: enumerating S_" << n << " visits " << n
              << "! permutations; this may take a while\n";
  }
  return true;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  return file;
}

int emit_records(const std::vector<permdiag::CheckRecord>& records, const std::string& out_path) {
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  for (const auto& r : records) out << permdiag::to_json_line(r) << "\n";
  const bool ok = permdiag::all_pass(records);
  std::cerr << (ok ? "all checks passed" : "CHECK FAILURES PRESENT") << " ("
            << records.size() << " records)\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int run_analyze(const std::string& perm_text, bool ascii, bool json) {
  const auto p = permdiag::Permutation::parse(perm_text);
  const auto report = permdiag::analyze(p);
  if (json) {
    std::cout << permdiag::to_json(report).dump() << "\n";
    return kExitOk;
  }
  std::cout << "permutation: " << p.str() << "\n"
            << "n: " << report.n << "\n"
            << "schroeder: " << (report.schroeder ? "yes" : "no") << "\n"
            << "max rank: " << report.max_rank << "\n"
            << "inversions: " << permdiag::to_decimal(report.inversion_count) << "\n"
            << "diagram squares: " << report.diagram_size << "\n";
  std::cout << "descents:";
  for (int d : report.descents) std::cout << " " << d;
  std::cout << "\nleft-to-right minima:";
  for (int m : report.minima) std::cout << " " << m;
  std::cout << "\nessential set:\n" << report.essential.str();
  if (report.collapse_image) {
    std::cout << "collapse: " << report.collapse_image->str() << "\n";
  }
  if (report.path_word) std::cout << "path: " << *report.path_word << "\n";
  for (const auto& [k, c] : report.increasing_counts) {
    std::cout << "increasing " << k << ": " << permdiag::to_decimal(c) << "\n";
  }
  if (ascii) std::cout << permdiag::render_board(p);
  return kExitOk;
}

int run_enumerate(int n, const std::string& avoid, bool list, bool stats, bool force) {
  const auto constraint = permdiag::PatternSet::parse(avoid);
  if (constraint.empty()) {
    std::cerr << "error: --avoid requires at least one pattern\n";
    return kExitUsage;
  }
  if (!check_cap(n, force)) return kExitCapExceeded;
  if (!list && !stats) {
    std::cout << permdiag::to_decimal(permdiag::count_avoiding_parallel(n, constraint)) << "\n";
    return kExitOk;
  }
  std::map<std::string, std::map<long long, long long>> histograms;
  permdiag::Count total = 0;
  permdiag::AvoidingGenerator gen(n, constraint);
  while (auto p = gen.next()) {
    ++total;
    if (list) std::cout << p->str() << "\n";
    if (stats) {
      ++histograms["inversions"][permdiag::inversions(*p).convert_to<long long>()];
      ++histograms["descents"][static_cast<long long>(permdiag::descent_set(*p).size())];
    }
  }
  std::cout << "count: " << permdiag::to_decimal(total) << "\n";
  for (const auto& [name, hist] : histograms) {
    std::cout << name << " histogram:\n";
    for (const auto& [value, freq] : hist) {
      std::cout << "  " << value << ": " << freq << "\n";
    }
  }
  return kExitOk;
}

int run_fibers(const std::string& perm_text, bool json) {
  const auto s = permdiag::Permutation::parse(perm_text);
  const auto fiber = permdiag::collapse_fiber(s);
  if (json) {
    auto arr = nlohmann::json::array();
    for (const auto& q : fiber) arr.push_back(q.str());
    std::cout << arr.dump() << "\n";
  } else {
    for (const auto& q : fiber) std::cout << q.str() << "\n";
  }
  return kExitOk;
}

int run_path(const std::string& input) {
  const bool looks_like_word =
      input.empty() || std::any_of(input.begin(), input.end(), [](unsigned char c) {
        return std::isalpha(c);
      });
  if (looks_like_word) {
    const auto path = permdiag::LatticePath::parse(input);
    std::cout << permdiag::permutation_from_schroeder_path(path).str() << "\n";
  } else {
    const auto p = permdiag::Permutation::parse(input);
    std::cout << permdiag::schroeder_path(p).word() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation diagrams, essential sets, and Schröder combinatorics"};
  app.require_subcommand(1);

  std::string perm_text;
  std::string avoid;
  std::string out_path;
  std::string path_input;
  bool ascii = false;
  bool json = false;
  bool list = false;
  bool stats = false;
  bool force = false;
  int n = 0;
  int m = 0;
  int k = 0;
  int max_n = 7;

  auto* analyze_cmd = app.add_subcommand("analyze", "full report on one permutation");
  analyze_cmd->add_option("permutation", perm_text, "one-line notation, e.g. \"4 7 5 2 6 3 1\"")
      ->required();
  analyze_cmd->add_flag("--ascii", ascii, "print the rank-labeled board");
  analyze_cmd->add_flag("--json", json, "emit the report as JSON");

  auto* enum_cmd = app.add_subcommand("enumerate", "count or list a pattern-avoidance class");
  enum_cmd->add_option("n", n, "permutation length")->required();
  enum_cmd->add_option("--avoid", avoid, "comma-separated patterns, e.g. 1243,2143")->required();
  enum_cmd->add_flag("--list", list, "stream the members");
  enum_cmd->add_flag("--stats", stats, "inversion/descent histograms");
  enum_cmd->add_flag("--force", force, "ignore the enumeration cap");

  auto* verify_cmd = app.add_subcommand("verify", "run every identity check, JSON lines out");
  verify_cmd->add_option("--max-n", max_n, "largest class enumerated by brute force");
  verify_cmd->add_option("--out", out_path, "write the report here instead of stdout");
  verify_cmd->add_flag("--force", force, "ignore the enumeration cap");

  auto* conj_cmd = app.add_subcommand("conjecture",
                                      "compare |S_n(T_m + 12..k)| with |S_n(T_m + 213..k)|");
  conj_cmd->add_option("m", m, "pattern length of the T_m family (>= 3)")->required();
  conj_cmd->add_option("k", k, "length of the extra pattern (>= 3)")->required();
  conj_cmd->add_option("--max-n", max_n, "largest class enumerated");
  conj_cmd->add_option("--out", out_path, "write the report here instead of stdout");
  conj_cmd->add_flag("--force", force, "ignore the enumeration cap");

  auto* fibers_cmd = app.add_subcommand("fibers",
                                        "all Schröder permutations collapsing to a 132-avoider");
  fibers_cmd->add_option("permutation", perm_text, "a 132-avoiding permutation")->required();
  fibers_cmd->add_flag("--json", json, "emit a JSON array");

  auto* path_cmd = app.add_subcommand("path", "convert permutation <-> Schröder path word");
  path_cmd->add_option("input", path_input,
                       "a permutation, or a step word over N/E/D (empty word allowed)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) return run_analyze(perm_text, ascii, json);
    if (enum_cmd->parsed()) return run_enumerate(n, avoid, list, stats, force);
    if (verify_cmd->parsed()) {
      if (!check_cap(max_n, force)) return kExitCapExceeded;
      return emit_records(permdiag::verify_identities(max_n), out_path);
    }
    if (conj_cmd->parsed()) {
      if (m < 3 || k < 3) {
        std::cerr << "error: conjecture requires m >= 3 and k >= 3\n";
        return kExitUsage;
      }
      if (!check_cap(max_n, force)) return kExitCapExceeded;
      return emit_records(permdiag::check_conjecture(m, k, max_n), out_path);
    }
    if (fibers_cmd->parsed()) return run_fibers(perm_text, json);
    if (path_cmd->parsed()) return run_path(path_input);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
