#pragma once

#include "ilg/bitset.hpp"
#include "ilg/graph.hpp"
#include "ilg/line_ops.hpp"

namespace ilg {

namespace detail {

// Branch and bound maximum clique with a greedy-coloring upper bound
// (Tomita-style). Deterministic branching order.
class MaxClique {
 public:
  MaxClique(const Graph& g, long long node_cap) : g_(g), n_(g.n()), node_cap_(node_cap) {
    rows_.reserve(n_);
    for (int v = 0; v < n_; ++v) {
      BitSet row(n_);
      for (int w : g_.neighbors(v)) row.set(w);
      rows_.push_back(std::move(row));
    }
  }

  int solve() {
    if (n_ == 0) return 0;
    BitSet all(n_);
    for (int v = 0; v < n_; ++v) all.set(v);
    best_ = 0;
    expand(0, all);
    return best_;
  }

 private:
  void expand(int rsize, BitSet cand) {
    if (++nodes_ > node_cap_)
      throw graph_error(errc::budget_exceeded, "clique solver node cap");
    // Greedy coloring of the candidates; color index bounds the clique size
    // extendable through that vertex.
    std::vector<std::pair<int, int>> order;  // (color, vertex), colors ascending
    BitSet rest = cand;
    int color = 0;
    while (rest.any()) {
      ++color;
      BitSet cls = rest;
      while (true) {
        int v = cls.next(0);
        if (v < 0) break;
        order.emplace_back(color, v);
        rest.reset(v);
        cls.reset(v);
        cls.and_not(rows_[v]);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      auto [c, v] = order[i];
      if (rsize + c <= best_) return;
      BitSet next = cand;
      next &= rows_[v];
      if (next.any()) {
        expand(rsize + 1, std::move(next));
      } else if (rsize + 1 > best_) {
        best_ = rsize + 1;
      }
      cand.reset(v);
    }
  }

  const Graph& g_;
  int n_;
  long long node_cap_;
  long long nodes_ = 0;
  std::vector<BitSet> rows_;
  int best_ = 0;
};

}  // namespace detail

inline int clique_number(const Graph& g, const Budget& budget = {}) {
  return detail::MaxClique(g, budget.solver_node_cap).solve();
}

inline int independence_number(const Graph& g, const Budget& budget = {}) {
  return detail::MaxClique(g.complement(), budget.solver_node_cap).solve();
}

}  // namespace ilg
