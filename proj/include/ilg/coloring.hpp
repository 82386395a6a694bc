#pragma once

#include <optional>

#include "ilg/bitset.hpp"
#include "ilg/clique.hpp"
#include "ilg/graph.hpp"
#include "ilg/line_ops.hpp"

namespace ilg {

namespace detail {

inline int greedy_clique_size(const Graph& g) {
  if (g.n() == 0) return 0;
  // Grow from a maximum-degree seed, always taking the candidate with the
  // most remaining candidates as neighbors.
  int seed = 0;
  for (int v = 1; v < g.n(); ++v)
    if (g.degree(v) > g.degree(seed)) seed = v;
  BitSet cand(g.n());
  for (int w : g.neighbors(seed)) cand.set(w);
  int size = 1;
  while (cand.any()) {
    int pick = -1, pick_score = -1;
    cand.for_each([&](int v) {
      int score = 0;
      cand.for_each([&](int w) {
        if (w != v && g.has_edge(v, w)) ++score;
      });
      if (score > pick_score) {
        pick_score = score;
        pick = v;
      }
    });
    ++size;
    BitSet next(g.n());
    cand.for_each([&](int v) {
      if (v != pick && g.has_edge(pick, v)) next.set(v);
    });
    cand = next;
  }
  return size;
}

// DSATUR branch and bound. With `limit` set, decides k-colorability; without,
// computes the chromatic number exactly.
class VertexColoring {
 public:
  VertexColoring(const Graph& g, long long node_cap)
      : g_(g), n_(g.n()), node_cap_(node_cap), color_(n_, 0) {}

  // Smallest k admitting a proper coloring.
  int chromatic() {
    if (n_ == 0) return 0;
    if (g_.m() == 0) return 1;
    int lower = std::max(2, greedy_clique_size(g_));
    int upper = greedy_dsatur();
    while (lower < upper) {
      if (decide(upper - 1))
        upper = used_in_solution_;
      else
        lower = upper;
    }
    return upper;
  }

  bool colorable(int k) {
    if (n_ == 0 || k >= n_) return true;
    if (k <= 0) return n_ == 0;
    if (g_.m() == 0) return true;
    return decide(k);
  }

 private:
  int greedy_dsatur() {
    std::fill(color_.begin(), color_.end(), 0);
    int used = 0;
    for (int step = 0; step < n_; ++step) {
      int v = select();
      int c = 1;
      while (conflicts(v, c)) ++c;
      color_[v] = c;
      used = std::max(used, c);
    }
    std::fill(color_.begin(), color_.end(), 0);
    return used;
  }

  bool conflicts(int v, int c) const {
    for (int w : g_.neighbors(v))
      if (color_[w] == c) return true;
    return false;
  }

  int saturation(int v) const {
    BitSet seen(n_ + 1);
    int s = 0;
    for (int w : g_.neighbors(v))
      if (color_[w] && !seen.test(color_[w])) {
        seen.set(color_[w]);
        ++s;
      }
    return s;
  }

  // Uncolored vertex with maximum saturation; ties by degree then index.
  int select() const {
    int pick = -1, ps = -1, pd = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v]) continue;
      int s = saturation(v);
      int d = g_.degree(v);
      if (s > ps || (s == ps && d > pd)) {
        pick = v;
        ps = s;
        pd = d;
      }
    }
    return pick;
  }

  bool decide(int k) {
    nodes_ = 0;
    std::fill(color_.begin(), color_.end(), 0);
    bool ok = descend(0, 0, k);
    if (ok) {
      used_in_solution_ = 0;
      for (int v = 0; v < n_; ++v) used_in_solution_ = std::max(used_in_solution_, color_[v]);
    }
    std::fill(color_.begin(), color_.end(), 0);
    return ok;
  }

  bool descend(int colored, int max_used, int k) {
    if (++nodes_ > node_cap_)
      throw graph_error(errc::budget_exceeded, "chromatic solver node cap");
    if (colored == n_) return true;
    int v = select();
    // New color classes are interchangeable: allow at most one fresh color.
    int cap = std::min(k, max_used + 1);
    for (int c = 1; c <= cap; ++c) {
      if (conflicts(v, c)) continue;
      color_[v] = c;
      if (descend(colored + 1, std::max(max_used, c), k)) return true;
      color_[v] = 0;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  long long node_cap_;
  long long nodes_ = 0;
  std::vector<int> color_;
  int used_in_solution_ = 0;
};

// Exact decision of proper k-edge-colorability; most-constrained edge first,
// fresh colors introduced in order.
class EdgeColoring {
 public:
  EdgeColoring(const Graph& g, long long node_cap)
      : g_(g), m_(g.m()), node_cap_(node_cap) {}

  bool colorable(int k) {
    if (m_ == 0) return true;
    if (k <= 0) return false;
    k_ = k;
    vertex_used_.assign(g_.n(), BitSet(k));
    edge_color_.assign(m_, -1);
    nodes_ = 0;
    return descend(0, 0);
  }

 private:
  bool descend(int colored, int max_used) {
    if (++nodes_ > node_cap_)
      throw graph_error(errc::budget_exceeded, "edge coloring node cap");
    if (colored == m_) return true;
    // Most saturated edge: fewest available colors, ties by index.
    const auto& es = g_.edges();
    int pick = -1, pick_avail = k_ + 1;
    for (int i = 0; i < m_; ++i) {
      if (edge_color_[i] >= 0) continue;
      auto [u, v] = es[i];
      BitSet used = vertex_used_[u];
      used |= vertex_used_[v];
      int avail = k_ - used.count();
      if (avail == 0) return false;
      if (avail < pick_avail) {
        pick_avail = avail;
        pick = i;
      }
    }
    auto [u, v] = es[pick];
    int cap = std::min(k_, max_used + 1);
    for (int c = 0; c < cap; ++c) {
      if (vertex_used_[u].test(c) || vertex_used_[v].test(c)) continue;
      vertex_used_[u].set(c);
      vertex_used_[v].set(c);
      edge_color_[pick] = c;
      if (descend(colored + 1, std::max(max_used, c + 1))) return true;
      edge_color_[pick] = -1;
      vertex_used_[u].reset(c);
      vertex_used_[v].reset(c);
    }
    return false;
  }

  const Graph& g_;
  int m_;
  long long node_cap_;
  long long nodes_ = 0;
  int k_ = 0;
  std::vector<BitSet> vertex_used_;
  std::vector<int> edge_color_;
};

}  // namespace detail

inline int chromatic_number(const Graph& g, const Budget& budget = {}) {
  return detail::VertexColoring(g, budget.solver_node_cap).chromatic();
}

inline bool chromatic_decision(const Graph& g, int k, const Budget& budget = {}) {
  return detail::VertexColoring(g, budget.solver_node_cap).colorable(k);
}

inline bool edge_colorable(const Graph& g, int k, const Budget& budget = {}) {
  return detail::EdgeColoring(g, budget.solver_node_cap).colorable(k);
}

// By Vizing's theorem the answer is max degree or max degree + 1; only the
// lower case needs a search.
inline int chromatic_index(const Graph& g, const Budget& budget = {}) {
  if (g.m() == 0)
    throw graph_error(errc::no_edges, "chromatic_index requires at least one edge");
  int delta = g.max_degree();
  return edge_colorable(g, delta, budget) ? delta : delta + 1;
}

}  // namespace ilg
