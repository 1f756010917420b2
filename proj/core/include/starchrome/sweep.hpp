#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "starchrome/graph.hpp"
#include "starchrome/star_color.hpp"

namespace starchrome {

struct SweepRecord {
  std::string graph6;  // of the canonical form
  int n = 0;
  int m = 0;
  int delta = 0;
  std::optional<int> diameter;
  bool two_connected = false;
  bool maximal = false;
  bool exact = false;  // false: budget ran out, only [chi_lower, chi_upper] known
  std::optional<int> chi_star;
  int chi_lower = 0;
  int chi_upper = 0;
  std::uint64_t solver_nodes = 0;
  double elapsed_ms = 0;

  // floor(1.5 Delta) + 1 - chi
  std::optional<int> margin_conj16() const;
  // floor(1.5 Delta) + 5 - chi
  std::optional<int> margin_thm110() const;
  // Delta + 6 - chi, for 2-connected graphs with Delta >= 6
  std::optional<int> margin_conj41() const;
  // Delta + 4 - chi, for maximal outerplanar graphs with Delta >= 6
  std::optional<int> margin_conj42() const;
};

nlohmann::ordered_json to_json(const SweepRecord& r);
SweepRecord record_from_json(const nlohmann::json& j);

struct Finding {
  std::string graph6;
  std::string rule;   // "thm1.10", "thm1.5(2)", "thm1.8", "conj1.6", "conj4.1", "conj4.2"
  bool proven = false;
  std::string detail;
};

// Every bound a record breaks. The sweep only holds outerplanar graphs, so
// the outerplanar hypotheses are taken as given.
std::vector<Finding> check_record(const SweepRecord& r);
nlohmann::ordered_json to_json(const Finding& f);

SweepRecord solve_record(const Graph& g, const SolveOptions& opts);

// Append-only JSON-lines store keyed by canonical graph6. The first line
// names the schema; later lines are records, the last one per key wins.
class ResultCache {
 public:
  static constexpr int kSchemaVersion = 1;

  explicit ResultCache(std::filesystem::path path);

  const std::filesystem::path& path() const noexcept { return path_; }
  std::optional<SweepRecord> get(const std::string& graph6) const;
  // No-op when an exact record for the key is already stored.
  bool put(const SweepRecord& r);
  std::size_t size() const noexcept { return records_.size(); }

  // $STARCHROME_CACHE, else ~/.cache/starchrome/results.jsonl
  static std::filesystem::path default_path();

 private:
  std::filesystem::path path_;
  std::map<std::string, SweepRecord> records_;
};

struct SweepOptions {
  int n_min = 4;
  int n_max = 10;
  bool expand_subgraphs = false;
  int per_n_cap = 0;  // 0: no cap on instances per n
  int workers = 0;    // 0: hardware concurrency
  SolveOptions solve;
};

struct SweepSummary {
  std::size_t records = 0;
  std::size_t cached = 0;
  std::size_t budget_exhausted = 0;
  std::vector<Finding> hard_failures;
  std::vector<Finding> conjecture_findings;
};

// Instances in sweep order: sorted by (n, graph6).
std::vector<Graph> sweep_instances(const SweepOptions& opts);

SweepSummary run_sweep(const SweepOptions& opts, ResultCache* cache,
                       const std::function<void(const SweepRecord&)>& sink);

}  // namespace starchrome
