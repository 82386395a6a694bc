#pragma once

#include "ilg/bitset.hpp"
#include "ilg/graph.hpp"
#include "ilg/line_ops.hpp"

namespace ilg {

namespace detail {

// Vertex sets of the biconnected components (blocks). Cycles never cross
// articulation points, so the longest cycle lives inside one block.
inline std::vector<std::vector<int>> biconnected_blocks(const Graph& g) {
  const int n = g.n();
  std::vector<int> low(n, -1), disc(n, -1), parent(n, -1);
  std::vector<std::pair<int, int>> estack;
  std::vector<std::vector<int>> blocks;
  int timer = 0;

  struct Frame {
    int v;
    size_t edge_idx;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      auto nb = g.neighbors(v);
      if (idx < nb.size()) {
        int w = nb[idx++];
        if (disc[w] < 0) {
          estack.push_back({v, w});
          parent[w] = v;
          disc[w] = low[w] = timer++;
          stack.push_back({w, 0});
        } else if (w != parent[v] && disc[w] < disc[v]) {
          estack.push_back({v, w});
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= disc[p]) {
            // Pop the block rooted at edge (p, v).
            BitSet seen(n);
            std::vector<int> verts;
            while (!estack.empty()) {
              auto [a, b] = estack.back();
              estack.pop_back();
              for (int x : {a, b})
                if (!seen.test(x)) {
                  seen.set(x);
                  verts.push_back(x);
                }
              if (a == p && b == v) break;
            }
            std::sort(verts.begin(), verts.end());
            blocks.push_back(std::move(verts));
          }
        }
      }
    }
  }
  return blocks;
}

// Longest cycle inside one 2-connected block, by DFS over simple paths whose
// smallest vertex is the start. Prunes with reachability: a path can only be
// extended through vertices reachable from its head, and must eventually
// reach a neighbor of the start.
class BlockCycleSearch {
 public:
  BlockCycleSearch(const Graph& g, long long node_cap, int target)
      : g_(g), n_(g.n()), node_cap_(node_cap), target_(target) {
    rows_.reserve(n_);
    for (int v = 0; v < n_; ++v) {
      BitSet row(n_);
      for (int w : g_.neighbors(v)) row.set(w);
      rows_.push_back(std::move(row));
    }
  }

  // Longest cycle length (vertex count), or 0 when acyclic. Stops early once
  // `target` is reached (pass n+1 to force an exact answer).
  int run() {
    best_ = 0;
    for (int start = 0; start < n_ && best_ < target_; ++start) {
      start_ = start;
      BitSet avail(n_);
      for (int v = start + 1; v < n_; ++v) avail.set(v);
      path_len_ = 1;
      dfs(start, avail);
    }
    return best_;
  }

 private:
  void dfs(int head, const BitSet& avail) {
    if (best_ >= target_) return;
    if (++nodes_ > node_cap_)
      throw graph_error(errc::budget_exceeded, "circumference node cap");
    if (path_len_ >= 3 && rows_[head].test(start_) && path_len_ > best_)
      best_ = path_len_;
    // Reachable part of the remaining vertices.
    BitSet reach(n_);
    BitSet frontier = rows_[head];
    frontier &= avail;
    while (frontier.any()) {
      reach |= frontier;
      BitSet next(n_);
      frontier.for_each([&](int v) { next |= rows_[v]; });
      next &= avail;
      next.and_not(reach);
      frontier = next;
    }
    if (path_len_ + reach.count() <= best_) return;
    // The cycle must close at the start: some usable vertex (or the head)
    // must see it.
    if (!rows_[head].test(start_) && !reach.intersects(rows_[start_])) return;
    BitSet cand = rows_[head];
    cand &= avail;
    cand.for_each([&](int w) {
      if (best_ >= target_) return;
      BitSet next = avail;
      next.reset(w);
      ++path_len_;
      dfs(w, next);
      --path_len_;
    });
  }

  const Graph& g_;
  int n_;
  long long node_cap_;
  long long nodes_ = 0;
  int target_;
  std::vector<BitSet> rows_;
  int start_ = 0;
  int path_len_ = 0;
  int best_ = 0;
};

inline int longest_cycle_upto(const Graph& g, int target, long long node_cap) {
  int best = 0;
  for (const auto& block : biconnected_blocks(g)) {
    if (static_cast<int>(block.size()) < 3) continue;
    if (static_cast<int>(block.size()) <= best) continue;
    Graph sub = g.induced(block);
    BlockCycleSearch search(sub, node_cap, target);
    best = std::max(best, search.run());
    if (best >= target) break;
  }
  return best;
}

}  // namespace detail

// Length of a longest cycle; 0 for forests.
inline int circumference(const Graph& g, const Budget& budget = {}) {
  return detail::longest_cycle_upto(g, g.n() + 1, budget.solver_node_cap);
}

inline bool has_cycle_at_least(const Graph& g, int len, const Budget& budget = {}) {
  if (len <= 0) return true;
  return detail::longest_cycle_upto(g, len, budget.solver_node_cap) >= len;
}

inline bool is_hamiltonian(const Graph& g, const Budget& budget = {}) {
  if (g.n() < 3) return false;
  return has_cycle_at_least(g, g.n(), budget);
}

}  // namespace ilg
