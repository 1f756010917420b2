#include "starchrome/sweep.hpp"

#include <algorithm>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include "starchrome/errors.hpp"
#include "starchrome/graph6.hpp"
#include "starchrome/outerplanar.hpp"

namespace starchrome {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {
int floor15(int d) { return (3 * d) / 2; }
}  // namespace

std::optional<int> SweepRecord::margin_conj16() const {
  if (!chi_star) return std::nullopt;
  return floor15(delta) + 1 - *chi_star;
}

std::optional<int> SweepRecord::margin_thm110() const {
  if (!chi_star) return std::nullopt;
  return floor15(delta) + 5 - *chi_star;
}

std::optional<int> SweepRecord::margin_conj41() const {
  if (!chi_star || !two_connected || delta < 6) return std::nullopt;
  return delta + 6 - *chi_star;
}

std::optional<int> SweepRecord::margin_conj42() const {
  if (!chi_star || !maximal || delta < 6) return std::nullopt;
  return delta + 4 - *chi_star;
}

namespace {
template <class T>
ordered_json opt(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}
}  // namespace

ordered_json to_json(const SweepRecord& r) {
  ordered_json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["delta"] = r.delta;
  j["diameter"] = opt(r.diameter);
  j["two_connected"] = r.two_connected;
  j["maximal"] = r.maximal;
  j["status"] = r.exact ? "exact" : "budget_exhausted";
  j["chi_star"] = opt(r.chi_star);
  j["chi_lower"] = r.chi_lower;
  j["chi_upper"] = r.chi_upper;
  j["bound_margin_conj16"] = opt(r.margin_conj16());
  j["bound_margin_thm110"] = opt(r.margin_thm110());
  j["bound_margin_conj41"] = opt(r.margin_conj41());
  j["bound_margin_conj42"] = opt(r.margin_conj42());
  j["solver_nodes"] = r.solver_nodes;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

SweepRecord record_from_json(const json& j) {
  try {
    SweepRecord r;
    r.graph6 = j.at("graph6").get<std::string>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.delta = j.at("delta").get<int>();
    if (!j.at("diameter").is_null()) r.diameter = j.at("diameter").get<int>();
    r.two_connected = j.at("two_connected").get<bool>();
    r.maximal = j.at("maximal").get<bool>();
    r.exact = j.at("status").get<std::string>() == "exact";
    if (!j.at("chi_star").is_null()) r.chi_star = j.at("chi_star").get<int>();
    r.chi_lower = j.at("chi_lower").get<int>();
    r.chi_upper = j.at("chi_upper").get<int>();
    r.solver_nodes = j.at("solver_nodes").get<std::uint64_t>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw MalformedText(std::string("bad sweep record: ") + e.what());
  }
}

std::vector<Finding> check_record(const SweepRecord& r) {
  std::vector<Finding> out;
  auto add = [&](const char* rule, bool proven, std::string detail) {
    out.push_back({r.graph6, rule, proven, std::move(detail)});
  };
  const int lo = r.chi_lower, hi = r.chi_upper;
  const std::string chi = r.exact ? std::to_string(*r.chi_star)
                                  : "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  // A bound is broken for sure when even the optimistic end of the interval
  // breaks it; for exact records lo == hi == chi.
  if (lo > floor15(r.delta) + 5)
    add("thm1.10", true, "chi " + chi + " > floor(1.5*" + std::to_string(r.delta) + ")+5");
  if (r.delta <= 3 && lo > 5) add("thm1.5(2)", true, "subcubic with chi " + chi + " > 5");
  if (r.maximal && r.n >= 4) {
    if (hi < 6) add("thm1.8", true, "maximal outerplanar with chi " + chi + " < 6");
    if (lo > r.n - 1)
      add("thm1.8", true, "maximal outerplanar with chi " + chi + " > n-1 = " + std::to_string(r.n - 1));
  }
  if (lo > floor15(r.delta) + 1)
    add("conj1.6", false, "chi " + chi + " > floor(1.5*" + std::to_string(r.delta) + ")+1");
  if (r.two_connected && r.delta >= 6 && lo > r.delta + 6)
    add("conj4.1", false, "chi " + chi + " > Delta+6");
  if (r.two_connected && r.maximal && r.delta >= 6 && lo > r.delta + 4)
    add("conj4.2", false, "chi " + chi + " > Delta+4");
  return out;
}

ordered_json to_json(const Finding& f) {
  ordered_json j;
  j["graph6"] = f.graph6;
  j["rule"] = f.rule;
  j["kind"] = f.proven ? "proven-bound-violation" : "conjecture-violation";
  j["detail"] = f.detail;
  return j;
}

SweepRecord solve_record(const Graph& input, const SolveOptions& opts) {
  const Graph g = canonical_form(input, std::max(kDefaultCanonicalLimit, input.order()));
  SweepRecord r;
  r.graph6 = graph6_encode(g);
  r.n = g.order();
  r.m = g.size();
  r.delta = g.max_degree();
  r.diameter = diameter(g);
  r.two_connected = is_two_connected(g);
  r.maximal = is_maximal_outerplanar(g, std::max(kDefaultRecognitionLimit, g.order()));
  const auto t0 = std::chrono::steady_clock::now();
  try {
    SolveResult s = exact_chi_star(g, opts);
    r.exact = true;
    r.chi_star = s.chi;
    r.chi_lower = r.chi_upper = s.chi;
    r.solver_nodes = s.nodes_expanded;
  } catch (const BudgetExhausted& e) {
    r.exact = false;
    r.chi_lower = e.lower();
    r.chi_upper = e.upper();
    r.solver_nodes = opts.budget.max_nodes;
  }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // a missing file is an empty cache
  std::string line;
  bool header = true;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw MalformedText(path_.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (header) {
      header = false;
      if (!j.contains("schema") || j["schema"] != "starchrome-results" ||
          j.value("version", 0) != kSchemaVersion)
        throw MalformedText(path_.string() + ": not a version " + std::to_string(kSchemaVersion) +
                            " result cache");
      continue;
    }
    SweepRecord r = record_from_json(j);
    records_[r.graph6] = r;
  }
}

std::optional<SweepRecord> ResultCache::get(const std::string& graph6) const {
  auto it = records_.find(graph6);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

bool ResultCache::put(const SweepRecord& r) {
  auto it = records_.find(r.graph6);
  if (it != records_.end() && it->second.exact) return false;
  const bool fresh_file = !std::filesystem::exists(path_);
  if (fresh_file && path_.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path_.parent_path(), ec);
  }
  std::ofstream out(path_, std::ios::app);
  if (!out) throw IoError("cannot append to result cache " + path_.string());
  if (fresh_file) {
    ordered_json h;
    h["schema"] = "starchrome-results";
    h["version"] = kSchemaVersion;
    out << h.dump() << '\n';
  }
  out << to_json(r).dump() << '\n';
  out.flush();
  if (!out) throw IoError("write to result cache " + path_.string() + " failed");
  records_[r.graph6] = r;
  return true;
}

std::filesystem::path ResultCache::default_path() {
  if (const char* env = std::getenv("STARCHROME_CACHE"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "starchrome" / "results.jsonl";
  return "starchrome-results.jsonl";
}

std::vector<Graph> sweep_instances(const SweepOptions& opts) {
  std::vector<std::pair<std::pair<int, std::string>, Graph>> keyed;
  std::set<std::string> seen;
  for (int n = std::max(3, opts.n_min); n <= opts.n_max; ++n) {
    int taken = 0;
    auto take = [&](const Graph& g) {
      if (opts.per_n_cap > 0 && taken >= opts.per_n_cap) return;
      Graph c = canonical_form(g, std::max(kDefaultCanonicalLimit, n));
      std::string g6 = graph6_encode(c);
      if (!seen.insert(g6).second) return;
      ++taken;
      keyed.push_back({{n, g6}, std::move(c)});
    };
    for (const auto& mem : enumerate_mops(n, std::max(kDefaultEnumerationLimit, opts.n_max)).members) {
      take(mem.graph);
      if (opts.expand_subgraphs)
        for (const auto& s : two_connected_spanning_subgraphs(mem.graph, true, std::max(16, n))) take(s);
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

SweepSummary run_sweep(const SweepOptions& opts, ResultCache* cache,
                       const std::function<void(const SweepRecord&)>& sink) {
  const auto graphs = sweep_instances(opts);
  const std::size_t total = graphs.size();
  std::vector<std::optional<SweepRecord>> slots(total);
  std::vector<char> from_cache(total, 0);
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < total; ++i) {
    if (cache)
      if (auto hit = cache->get(graph6_encode(graphs[i])); hit && hit->exact) {
        slots[i] = *hit;
        from_cache[i] = 1;
        continue;
      }
    todo.push_back(i);
  }

  std::mutex mu;
  std::condition_variable ready;
  std::size_t next_job = 0;
  std::exception_ptr failure;
  unsigned workers = opts.workers > 0 ? static_cast<unsigned>(opts.workers)
                                      : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<std::size_t>(1, todo.size()));

  auto work = [&] {
    for (;;) {
      std::size_t idx;
      {
        std::lock_guard lk(mu);
        if (next_job >= todo.size() || failure) return;
        idx = todo[next_job++];
      }
      try {
        SweepRecord r = solve_record(graphs[idx], opts.solve);
        std::lock_guard lk(mu);
        slots[idx] = std::move(r);
      } catch (...) {
        std::lock_guard lk(mu);
        if (!failure) failure = std::current_exception();
      }
      ready.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers && !todo.empty(); ++w) pool.emplace_back(work);

  // single writer: emit strictly in sweep order
  SweepSummary sum;
  try {
    for (std::size_t i = 0; i < total; ++i) {
      SweepRecord r;
      {
        std::unique_lock lk(mu);
        ready.wait(lk, [&] { return slots[i].has_value() || failure; });
        if (failure) std::rethrow_exception(failure);
        r = *slots[i];
      }
      if (cache && !from_cache[i]) cache->put(r);
      ++sum.records;
      if (from_cache[i]) ++sum.cached;
      if (!r.exact) ++sum.budget_exhausted;
      for (auto& f : check_record(r))
        (f.proven ? sum.hard_failures : sum.conjecture_findings).push_back(std::move(f));
      if (sink) sink(r);
    }
  } catch (...) {
    {
      std::lock_guard lk(mu);
      if (!failure) failure = std::current_exception();
    }
    for (auto& t : pool) t.join();
    throw;
  }
  for (auto& t : pool) t.join();
  return sum;
}

}  // namespace starchrome
