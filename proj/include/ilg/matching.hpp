#pragma once

#include <queue>

#include "ilg/bitset.hpp"
#include "ilg/graph.hpp"
#include "ilg/line_ops.hpp"

namespace ilg {

namespace detail {

// Maximum cardinality matching in a general graph: augmenting paths with
// blossom contraction, O(V^3).
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g), n_(g.n()), match_(n_, -1), parent_(n_), base_(n_) {}

  std::vector<int> solve() {
    // Greedy seed.
    for (int v = 0; v < n_; ++v)
      if (match_[v] < 0)
        for (int w : g_.neighbors(v))
          if (match_[w] < 0) {
            match_[v] = w;
            match_[w] = v;
            break;
          }
    for (int v = 0; v < n_; ++v)
      if (match_[v] < 0) augment_from(v);
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    a = base_[a];
    while (true) {
      seen[a] = 1;
      if (match_[a] < 0) break;
      a = base_[parent_[match_[a]]];
    }
    b = base_[b];
    while (!seen[b]) b = base_[parent_[match_[b]]];
    return b;
  }

  void mark_path(std::vector<char>& in_blossom, int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom[base_[v]] = 1;
      in_blossom[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  bool augment_from(int root) {
    std::vector<char> even(n_, 0);
    parent_.assign(n_, -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    even[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
          int cur = lca(v, to);
          std::vector<char> in_blossom(n_, 0);
          mark_path(in_blossom, v, cur, to);
          mark_path(in_blossom, to, cur, v);
          for (int i = 0; i < n_; ++i)
            if (in_blossom[base_[i]]) {
              base_[i] = cur;
              if (!even[i]) {
                even[i] = 1;
                q.push(i);
              }
            }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (match_[to] < 0) {
            // Augment along the alternating path back to the root.
            int u = to;
            while (u >= 0) {
              int pv = parent_[u];
              int next = match_[pv];
              match_[u] = pv;
              match_[pv] = u;
              u = next;
            }
            return true;
          }
          even[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_, parent_, base_;
};

}  // namespace detail

// mate[v] = matched partner or -1.
inline std::vector<int> maximum_matching(const Graph& g) {
  return detail::BlossomMatcher(g).solve();
}

inline int matching_number(const Graph& g) {
  auto mate = maximum_matching(g);
  int c = 0;
  for (int v = 0; v < g.n(); ++v)
    if (mate[v] > v) ++c;
  return c;
}

inline bool has_near_perfect_matching(const Graph& g) {
  return matching_number(g) == g.n() / 2;
}

namespace detail {

// Exact minimum maximal matching. Branches on the first edge with both
// endpoints unmatched: either the lower endpoint gets matched (to one of its
// free neighbors) or it is committed to stay unmatched, in which case the
// other endpoint must cover the edge.
class MinMaximalMatching {
 public:
  MinMaximalMatching(const Graph& g, long long node_cap)
      : g_(g), n_(g.n()), node_cap_(node_cap), matched_(n_), forbidden_(n_) {}

  int solve() {
    best_ = greedy_upper();
    recurse(0);
    return best_;
  }

 private:
  int greedy_upper() const {
    std::vector<char> used(n_, 0);
    int c = 0;
    for (auto [u, v] : g_.edges())
      if (!used[u] && !used[v]) {
        used[u] = used[v] = 1;
        ++c;
      }
    return c;
  }

  // Lower bound on edges still needed: any new edge shares endpoints with at
  // most two edges of a maximal matching of the uncovered part.
  int extra_lower_bound() const {
    BitSet used(n_);
    int gm = 0;
    for (auto [u, v] : g_.edges()) {
      if (matched_.test(u) || matched_.test(v)) continue;
      if (used.test(u) || used.test(v)) continue;
      used.set(u);
      used.set(v);
      ++gm;
    }
    return (gm + 1) / 2;
  }

  void recurse(int chosen) {
    if (++nodes_ > node_cap_)
      throw graph_error(errc::budget_exceeded, "min_maximal_matching node cap");
    if (chosen >= best_) return;
    if (chosen + extra_lower_bound() >= best_) return;
    // First edge not covered by the matching so far.
    int eu = -1, ev = -1;
    for (auto [u, v] : g_.edges())
      if (!matched_.test(u) && !matched_.test(v)) {
        eu = u;
        ev = v;
        break;
      }
    if (eu < 0) {
      best_ = chosen;  // every edge covered: matching is maximal
      return;
    }
    auto try_match = [&](int a) {
      if (forbidden_.test(a)) return;
      for (int w : g_.neighbors(a)) {
        if (matched_.test(w) || forbidden_.test(w)) continue;
        matched_.set(a);
        matched_.set(w);
        recurse(chosen + 1);
        matched_.reset(a);
        matched_.reset(w);
      }
    };
    try_match(eu);
    if (!forbidden_.test(eu)) {
      forbidden_.set(eu);
      try_match(ev);  // eu stays unmatched, so ev must cover the edge
      forbidden_.reset(eu);
    }
  }

  const Graph& g_;
  int n_;
  long long node_cap_;
  long long nodes_ = 0;
  BitSet matched_, forbidden_;
  int best_ = 0;
};

}  // namespace detail

inline int min_maximal_matching(const Graph& g, const Budget& budget = {}) {
  if (g.m() == 0) return 0;
  return detail::MinMaximalMatching(g, budget.solver_node_cap).solve();
}

}  // namespace ilg
