#pragma once

#include <chrono>
#include <functional>
#include <mutex>
#include <sstream>

#include "ilg/enumeration.hpp"
#include "ilg/index_engine.hpp"

namespace ilg {

struct VerifyConfig {
  int max_n = 8;          // corpus cap for "all prolific graphs" universes
  int claw_max_n = 13;    // claw-subdivision family cap (G checks)
  int tree_max_n = 10;    // tree universe cap (T1)
  int t3_max_n = 7;       // subgraph-pair universe cap (T3)
  int t6_max_n = 9;       // edge-count universe cap (T6)
  int cp_tail_max = 12;   // pendant-path family cap (D2)
  Budget budget{};
  int workers = 1;
  bool enable_expensive = false;  // X1/X2
};

struct Clause {
  std::string name;
  long long tested = 0;
  std::vector<std::string> counterexamples;  // graph6 (or descriptor tokens), sorted

  bool pass() const { return counterexamples.empty(); }
};

struct CheckReport {
  std::string id;
  std::string statement;
  std::string universe;
  long long graphs_tested = 0;
  std::vector<Clause> clauses;
  std::vector<std::string> budget_failures;
  std::vector<std::string> notes;
  double wall_ms = 0;

  bool pass() const {
    for (const auto& c : clauses)
      if (!c.pass()) return false;
    return true;
  }

  std::string to_text(bool include_timings = false) const {
    std::ostringstream os;
    os << "ilg-report v1\n";
    os << "check: " << id << "\n";
    os << "statement: " << statement << "\n";
    os << "universe: " << universe << "\n";
    os << "graphs-tested: " << graphs_tested << "\n";
    os << "result: " << (pass() ? "pass" : "fail") << "\n";
    os << "clauses: " << clauses.size() << "\n";
    for (const auto& c : clauses) {
      os << "clause: " << c.name << " | " << (c.pass() ? "pass" : "fail")
         << " | tested=" << c.tested << " | counterexamples=" << c.counterexamples.size()
         << "\n";
      size_t limit = 50;
      for (size_t i = 0; i < c.counterexamples.size() && i < limit; ++i)
        os << "cex: " << c.counterexamples[i] << "\n";
      if (c.counterexamples.size() > limit)
        os << "cex-omitted: " << (c.counterexamples.size() - limit) << "\n";
    }
    for (const auto& b : budget_failures) os << "budget-exceeded: " << b << "\n";
    for (const auto& n : notes) os << "note: " << n << "\n";
    if (include_timings) os << "wall-ms: " << static_cast<long long>(wall_ms) << "\n";
    os << "end\n";
    return os.str();
  }
};

namespace detail {

// Cached connected corpus per vertex count (n <= 8 is the routine universe;
// larger universes stream instead).
inline const std::vector<Graph>& connected_corpus(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_connected(n)).first;
  return it->second;
}

inline std::vector<Graph> corpus_range(int lo, int hi,
                                       const std::function<bool(const Graph&)>& keep) {
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n)
    for (const Graph& g : connected_corpus(n))
      if (keep(g)) out.push_back(g);
  return out;
}

inline std::vector<Graph> prolific_corpus(int hi) {
  return corpus_range(4, hi, [](const Graph& g) { return is_prolific(g); });
}

// Verdict values: -1 not applicable, 0 fail, 1 pass.
using Verdicts = std::vector<int8_t>;

template <typename Fn>
CheckReport run_universe_check(const std::string& id, const std::string& statement,
                               const std::string& universe_desc,
                               const std::vector<Graph>& universe,
                               const std::vector<std::string>& clause_names,
                               const VerifyConfig& cfg, Fn per_graph) {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.id = id;
  rep.statement = statement;
  rep.universe = universe_desc;
  rep.graphs_tested = static_cast<long long>(universe.size());
  for (const auto& name : clause_names) rep.clauses.push_back({name, 0, {}});

  std::vector<Verdicts> results(universe.size());
  std::vector<char> budget_hit(universe.size(), 0);
  parallel_for(universe.size(), cfg.workers, [&](size_t i) {
    Verdicts v(clause_names.size(), -1);
    try {
      per_graph(universe[i], v);
    } catch (const graph_error& e) {
      if (e.code() != errc::budget_exceeded) throw;
      budget_hit[i] = 1;
    }
    results[i] = std::move(v);
  });
  for (size_t i = 0; i < universe.size(); ++i) {
    if (budget_hit[i]) {
      rep.budget_failures.push_back(write_graph6(universe[i]));
      continue;
    }
    for (size_t c = 0; c < clause_names.size(); ++c) {
      if (results[i][c] < 0) continue;
      ++rep.clauses[c].tested;
      if (results[i][c] == 0)
        rep.clauses[c].counterexamples.push_back(write_graph6(universe[i]));
    }
  }
  for (auto& c : rep.clauses)
    std::sort(c.counterexamples.begin(), c.counterexamples.end());
  std::sort(rep.budget_failures.begin(), rep.budget_failures.end());
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

// Edge/vertex chains up to level 3/4 via the predicted-count recurrences
// (materializes at most L^2, which is small for corpus-sized inputs).
struct Chain {
  long long e0 = 0, e1 = 0, e2 = 0, e3 = 0;
  long long n0 = 0, n1 = 0, n2 = 0, n3 = 0, n4 = 0;
};

inline Chain edge_chain(const Graph& g, const Budget& b) {
  IterateCache c(g, b);
  Chain ch;
  auto need = [](std::optional<long long> v) {
    if (!v) throw graph_error(errc::budget_exceeded, "chain materialization");
    return *v;
  };
  ch.e0 = need(c.edges_at(0));
  ch.e1 = need(c.edges_at(1));
  ch.e2 = need(c.edges_at(2));
  ch.e3 = need(c.edges_at(3));
  ch.n0 = g.n();
  ch.n1 = ch.e0;
  ch.n2 = ch.e1;
  ch.n3 = ch.e2;
  ch.n4 = ch.e3;
  return ch;
}

inline std::vector<int> degrees_at_level(const Graph& g, int k, const Budget& b) {
  IterateCache c(g, b);
  const auto* d = c.degrees(k);
  if (!d) throw graph_error(errc::budget_exceeded, "degree chain materialization");
  return *d;
}

inline bool is_k14(const Graph& g) {
  return g.n() == 5 && g.m() == 4 && g.max_degree() == 4;
}
inline bool is_k4(const Graph& g) { return g.n() == 4 && g.m() == 6; }

inline std::string range_str(int lo, int hi) {
  return std::to_string(lo) + "<=n<=" + std::to_string(hi);
}

}  // namespace detail

using CheckFn = std::function<CheckReport(const VerifyConfig&)>;

struct CheckInfo {
  std::string id;
  std::string statement;
  CheckFn fn;
};

const std::vector<CheckInfo>& check_registry();

inline CheckReport run_check(const std::string& id, const VerifyConfig& cfg = {}) {
  for (const auto& info : check_registry())
    if (info.id == id) return info.fn(cfg);
  throw graph_error(errc::unknown_check, "unknown check id: " + id);
}

}  // namespace ilg

#include "ilg/verify_checks.hpp"
