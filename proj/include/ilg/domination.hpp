#pragma once

#include "ilg/bitset.hpp"
#include "ilg/graph.hpp"
#include "ilg/line_ops.hpp"

namespace ilg {

namespace detail {

// Shared scaffolding for the two domination solvers: branch on the first
// undominated vertex, enumerate its closed neighborhood as candidate
// dominators with exclusion (candidates already tried are banned from the
// remaining branches).
class DominationBase {
 public:
  DominationBase(const Graph& g, long long node_cap)
      : g_(g), n_(g.n()), node_cap_(node_cap) {
    closed_.reserve(n_);
    open_.reserve(n_);
    for (int v = 0; v < n_; ++v) {
      BitSet c(n_), o(n_);
      for (int w : g_.neighbors(v)) {
        c.set(w);
        o.set(w);
      }
      c.set(v);
      closed_.push_back(std::move(c));
      open_.push_back(std::move(o));
    }
  }

 protected:
  int greedy_domination() const {
    BitSet dominated(n_);
    int c = 0;
    while (dominated.count() < n_) {
      int pick = -1, gain = -1;
      for (int v = 0; v < n_; ++v) {
        BitSet add = closed_[v];
        add.and_not(dominated);
        int g = add.count();
        if (g > gain) {
          gain = g;
          pick = v;
        }
      }
      dominated |= closed_[pick];
      ++c;
    }
    return c;
  }

  void tick() {
    if (++nodes_ > node_cap_)
      throw graph_error(errc::budget_exceeded, "domination solver node cap");
  }

  const Graph& g_;
  int n_;
  long long node_cap_;
  long long nodes_ = 0;
  std::vector<BitSet> closed_, open_;
  int best_ = 0;
};

class MinDomination : public DominationBase {
 public:
  using DominationBase::DominationBase;

  int solve() {
    if (n_ == 0) return 0;
    best_ = greedy_domination();
    BitSet dominated(n_), banned(n_);
    recurse(0, dominated, banned);
    return best_;
  }

 private:
  void recurse(int chosen, const BitSet& dominated, const BitSet& banned) {
    tick();
    if (chosen >= best_) return;
    int u = -1;
    for (int v = 0; v < n_; ++v)
      if (!dominated.test(v)) {
        u = v;
        break;
      }
    if (u < 0) {
      best_ = chosen;
      return;
    }
    int undom = n_ - dominated.count();
    int maxcover = g_.max_degree() + 1;
    if (chosen + (undom + maxcover - 1) / maxcover >= best_) return;
    BitSet cands = closed_[u];
    cands.and_not(banned);
    BitSet banned2 = banned;
    cands.for_each([&](int w) {
      BitSet dom2 = dominated;
      dom2 |= closed_[w];
      recurse(chosen + 1, dom2, banned2);
      banned2.set(w);
    });
  }
};

// Minimum maximal independent set. Chosen vertices stay independent by
// banning their neighborhoods; a leaf with everything dominated is exactly a
// maximal independent set.
class MinIndependentDomination : public DominationBase {
 public:
  using DominationBase::DominationBase;

  int solve() {
    if (n_ == 0) return 0;
    best_ = greedy_upper();
    BitSet dominated(n_), banned(n_);
    recurse(0, dominated, banned);
    return best_;
  }

 private:
  int greedy_upper() const {
    // Any maximal independent set is feasible.
    BitSet banned(n_);
    int c = 0;
    for (int v = 0; v < n_; ++v)
      if (!banned.test(v)) {
        ++c;
        banned.set(v);
        for (int w : g_.neighbors(v)) banned.set(w);
      }
    return c;
  }

  void recurse(int chosen, const BitSet& dominated, const BitSet& banned) {
    tick();
    if (chosen >= best_) return;
    int u = -1;
    for (int v = 0; v < n_; ++v)
      if (!dominated.test(v)) {
        u = v;
        break;
      }
    if (u < 0) {
      best_ = chosen;
      return;
    }
    int undom = n_ - dominated.count();
    int maxcover = g_.max_degree() + 1;
    if (chosen + (undom + maxcover - 1) / maxcover >= best_) return;
    BitSet cands = closed_[u];
    cands.and_not(banned);
    BitSet banned2 = banned;
    cands.for_each([&](int w) {
      BitSet dom2 = dominated;
      dom2 |= closed_[w];
      BitSet ban_w = banned2;
      ban_w |= open_[w];  // independence
      ban_w.set(w);
      recurse(chosen + 1, dom2, ban_w);
      banned2.set(w);  // exclusion for later branches
    });
  }
};

}  // namespace detail

inline int domination_number(const Graph& g, const Budget& budget = {}) {
  return detail::MinDomination(g, budget.solver_node_cap).solve();
}

inline int independent_domination_number(const Graph& g, const Budget& budget = {}) {
  return detail::MinIndependentDomination(g, budget.solver_node_cap).solve();
}

}  // namespace ilg
