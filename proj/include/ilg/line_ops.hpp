#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ilg/graph.hpp"

namespace ilg {

// Caps that keep iterated constructions and the exact solvers from running
// away. Truncation under these caps is reported in-band, never as data loss.
struct Budget {
  int max_vertices = 50000;
  int max_iterations = 8;
  long long solver_node_cap = 400000000;
  double solver_time_cap_s = 1e9;
};

// One level of an iteration trace. The graph (and the labeling of its
// vertices by edges of the previous level) is optional: degree-only levels
// carry just the counts and the degree multiset.
struct LevelRecord {
  int k = 0;
  long long n = 0;
  long long e = 0;
  std::vector<int> degrees;  // sorted ascending
  std::optional<Graph> graph;
  std::optional<std::vector<Edge>> labels;  // vertex i of this level <- edge of level k-1

  int max_degree() const { return degrees.empty() ? 0 : degrees.back(); }
  int min_degree() const { return degrees.empty() ? 0 : degrees.front(); }
};

struct IterationTrace {
  std::vector<LevelRecord> levels;
  bool truncated = false;
  std::string truncation_reason;
};

struct PredictedCounts {
  long long n1 = 0;
  long long e1 = 0;
  std::vector<int> degrees;  // degree multiset of L(G), sorted ascending
};

// n(L) = e(G); e(L) = sum of C(deg v, 2); degree of the L-vertex for edge uv
// is deg(u) + deg(v) - 2. Pure arithmetic on G, no construction.
inline PredictedCounts predicted_counts(const Graph& g) {
  PredictedCounts pc;
  pc.n1 = g.m();
  for (int v = 0; v < g.n(); ++v) {
    long long d = g.degree(v);
    pc.e1 += d * (d - 1) / 2;
  }
  pc.degrees.reserve(g.m());
  for (auto [u, v] : g.edges())
    pc.degrees.push_back(g.degree(u) + g.degree(v) - 2);
  std::sort(pc.degrees.begin(), pc.degrees.end());
  return pc;
}

// L(G): one vertex per edge of G (in edge-list order), adjacent when the
// edges share an endpoint. Works componentwise for disconnected inputs.
inline std::pair<Graph, std::vector<Edge>> line_graph(const Graph& g) {
  const auto& es = g.edges();
  const int m = g.m();
  // incident[v] = ids of edges at v, ascending.
  std::vector<std::vector<int>> incident(g.n());
  for (int i = 0; i < m; ++i) {
    incident[es[i].first].push_back(i);
    incident[es[i].second].push_back(i);
  }
  std::vector<Edge> ledges;
  for (int v = 0; v < g.n(); ++v) {
    const auto& ids = incident[v];
    for (size_t i = 0; i < ids.size(); ++i)
      for (size_t j = i + 1; j < ids.size(); ++j)
        ledges.push_back({ids[i], ids[j]});
  }
  // Two distinct simple edges share at most one endpoint, so every L-edge is
  // produced exactly once.
  std::sort(ledges.begin(), ledges.end());
  return {Graph::from_sorted_edges(m, std::move(ledges)), es};
}

enum class LastLevel { materialize, degree_only };

// Trace of L^0..L^k. Stops early with a truncation marker when a budget cap
// is reached or the sequence dies out (paths). Refuses disconnected input:
// every statement this library checks presumes connectivity.
inline IterationTrace iterate_line_graph(const Graph& g, int k, const Budget& b = {},
                                         LastLevel last = LastLevel::materialize) {
  if (!is_connected(g))
    throw graph_error(errc::disconnected, "iterate_line_graph requires a connected graph");
  IterationTrace tr;
  LevelRecord l0;
  l0.k = 0;
  l0.n = g.n();
  l0.e = g.m();
  l0.degrees = g.degree_multiset();
  l0.graph = g;
  tr.levels.push_back(std::move(l0));
  for (int step = 1; step <= k; ++step) {
    if (step > b.max_iterations) {
      tr.truncated = true;
      tr.truncation_reason = "max_iterations";
      break;
    }
    const Graph& prev = *tr.levels.back().graph;
    if (prev.m() > b.max_vertices) {
      tr.truncated = true;
      tr.truncation_reason = "max_vertices";
      break;
    }
    if (prev.n() == 0) {
      tr.truncated = true;
      tr.truncation_reason = "empty";
      break;
    }
    if (step == k && last == LastLevel::degree_only) {
      auto pc = predicted_counts(prev);
      LevelRecord rec;
      rec.k = step;
      rec.n = pc.n1;
      rec.e = pc.e1;
      rec.degrees = std::move(pc.degrees);
      tr.levels.push_back(std::move(rec));
      break;
    }
    auto [lg, labels] = line_graph(prev);
    LevelRecord rec;
    rec.k = step;
    rec.n = lg.n();
    rec.e = lg.m();
    rec.degrees = lg.degree_multiset();
    rec.labels = std::move(labels);
    rec.graph = std::move(lg);
    tr.levels.push_back(std::move(rec));
  }
  return tr;
}

}  // namespace ilg
