#pragma once

#include <queue>

#include "ilg/graph.hpp"

namespace ilg {

namespace detail {

// Dinic max-flow on a small integer network; capacities restorable so one
// network serves many source/sink pairs.
class Dinic {
 public:
  explicit Dinic(int n) : head_(n, -1) {}

  int add_node() {
    head_.push_back(-1);
    return static_cast<int>(head_.size()) - 1;
  }

  // Adds arc u->v with capacity cap and its reverse with capacity rev_cap.
  void add_arc(int u, int v, int cap, int rev_cap = 0) {
    arcs_.push_back({v, head_[u], cap});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, head_[v], rev_cap});
    head_[v] = static_cast<int>(arcs_.size()) - 1;
  }

  void snapshot() {
    base_caps_.resize(arcs_.size());
    for (size_t i = 0; i < arcs_.size(); ++i) base_caps_[i] = arcs_[i].cap;
  }
  void restore() {
    for (size_t i = 0; i < arcs_.size(); ++i) arcs_[i].cap = base_caps_[i];
  }

  // Max flow from s to t, stopping once `limit` is reached.
  int maxflow(int s, int t, int limit) {
    int flow = 0;
    while (flow < limit && bfs(s, t)) {
      iter_ = head_;
      int f;
      while (flow < limit && (f = dfs(s, t, limit - flow)) > 0) flow += f;
    }
    return flow;
  }

 private:
  struct Arc {
    int to, next, cap;
  };

  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int a = head_[v]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[v] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  int dfs(int v, int t, int limit) {
    if (v == t) return limit;
    for (int& a = iter_[v]; a >= 0; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap > 0 && level_[arc.to] == level_[v] + 1) {
        int got = dfs(arc.to, t, std::min(limit, arc.cap));
        if (got > 0) {
          arc.cap -= got;
          arcs_[a ^ 1].cap += got;
          return got;
        }
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> base_caps_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace detail

// Exact edge connectivity via unit-capacity max-flow from a fixed source to
// every other vertex. Requires a connected graph.
inline int edge_connectivity(const Graph& g) {
  if (!is_connected(g))
    throw graph_error(errc::disconnected, "edge_connectivity requires a connected graph");
  if (g.n() <= 1) return 0;
  detail::Dinic net(g.n());
  for (auto [u, v] : g.edges()) net.add_arc(u, v, 1, 1);
  net.snapshot();
  int best = g.min_degree();
  for (int t = 1; t < g.n() && best > 0; ++t) {
    net.restore();
    int f = net.maxflow(0, t, best);
    best = std::min(best, f);
  }
  return best;
}

namespace detail {

// Vertex-connectivity flows on the standard split network: v -> (v_in, v_out)
// with a unit arc between them, each original edge as infinite arcs both ways.
class VertexCutNetwork {
 public:
  explicit VertexCutNetwork(const Graph& g) : g_(g), net_(2 * g.n()) {
    const int inf = g.n() + 1;
    for (int v = 0; v < g_.n(); ++v) net_.add_arc(in(v), out(v), 1);
    for (auto [u, v] : g_.edges()) {
      net_.add_arc(out(u), in(v), inf);
      net_.add_arc(out(v), in(u), inf);
    }
    net_.snapshot();
  }

  int flow(int a, int b, int limit) {
    net_.restore();
    return net_.maxflow(out(a), in(b), limit);
  }

 private:
  static int in(int v) { return 2 * v; }
  static int out(int v) { return 2 * v + 1; }
  const Graph& g_;
  Dinic net_;
};

// Runs flows for the pivot pairs: pivot to each non-neighbor, plus every
// non-adjacent pair inside the pivot's neighborhood. Any minimum separator
// either avoids the pivot (then it separates the pivot from a non-neighbor)
// or contains it (then it separates two of its neighbors).
template <typename Visit>
void for_each_kappa_pair(const Graph& g, Visit&& visit) {
  int pivot = 0;
  for (int v = 1; v < g.n(); ++v)
    if (g.degree(v) > g.degree(pivot)) pivot = v;
  for (int u = 0; u < g.n(); ++u)
    if (u != pivot && !g.has_edge(pivot, u))
      if (!visit(pivot, u)) return;
  auto nb = g.neighbors(pivot);
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j)
      if (!g.has_edge(nb[i], nb[j]))
        if (!visit(nb[i], nb[j])) return;
}

inline bool complete_graph(const Graph& g) {
  return static_cast<long long>(g.m()) * 2 == static_cast<long long>(g.n()) * (g.n() - 1);
}

}  // namespace detail

// Exact vertex connectivity; kappa(K_n) = n - 1 by convention.
inline int vertex_connectivity(const Graph& g) {
  if (!is_connected(g))
    throw graph_error(errc::disconnected, "vertex_connectivity requires a connected graph");
  if (g.n() <= 1) return 0;
  if (detail::complete_graph(g)) return g.n() - 1;
  detail::VertexCutNetwork net(g);
  int best = g.min_degree();
  detail::for_each_kappa_pair(g, [&](int a, int b) {
    best = std::min(best, net.flow(a, b, best));
    return best > 0;
  });
  return best;
}

// Decision form: kappa(G) >= t, with flows capped at t.
inline bool vertex_connectivity_at_least(const Graph& g, int t) {
  if (t <= 0) return true;
  if (!is_connected(g)) return false;
  if (detail::complete_graph(g)) return g.n() - 1 >= t;
  if (g.min_degree() < t) return false;
  detail::VertexCutNetwork net(g);
  bool ok = true;
  detail::for_each_kappa_pair(g, [&](int a, int b) {
    if (net.flow(a, b, t) < t) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

}  // namespace ilg
