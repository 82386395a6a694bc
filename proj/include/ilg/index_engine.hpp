#pragma once

#include <map>
#include <optional>
#include <sstream>

#include "ilg/families.hpp"
#include "ilg/graph6.hpp"
#include "ilg/parallel.hpp"
#include "ilg/params.hpp"

namespace ilg {

// A level decided by bounds alone records the bracketing pair instead of an
// exact value.
struct BoundRecord {
  Rational lower;
  Rational upper;
  std::string method;
};

struct LevelValue {
  int level = 0;
  std::optional<Rational> exact;
  std::optional<BoundRecord> bound;

  std::string str() const {
    if (exact) return exact->str();
    return "[" + bound->lower.str() + "," + bound->upper.str() + "]:" + bound->method;
  }
};

enum class IndexOutcome { found, budget_exceeded };

struct IndexResult {
  ParamKind param{};
  Rational base;
  IndexOutcome outcome = IndexOutcome::budget_exceeded;
  int index = -1;  // smallest r with P_r > P_0, when found
  std::vector<LevelValue> levels;  // level 0 first
  std::vector<std::string> shortcut_log;
  std::string truncation_reason;

  bool found() const { return outcome == IndexOutcome::found; }
};

namespace detail {

// Lazily materialized iterates of one graph, with the degree-only chains
// n_k, e_k, degrees_k derived as far ahead of the materialization frontier as
// the recurrences allow.
class IterateCache {
 public:
  IterateCache(const Graph& g, const Budget& b) : budget_(b) { graphs_.push_back(g); }

  // Graph of level k, or nullptr if materializing it would exceed the vertex
  // budget.
  const Graph* graph(int k) {
    while (static_cast<int>(graphs_.size()) <= k) {
      const Graph& prev = graphs_.back();
      if (prev.m() > budget_.max_vertices) return nullptr;
      graphs_.push_back(line_graph(prev).first);
    }
    return &graphs_[k];
  }

  // Degree multiset of level k (needs level k-1 materialized for k >= 1).
  const std::vector<int>* degrees(int k) {
    while (static_cast<int>(degs_.size()) <= k) {
      int want = static_cast<int>(degs_.size());
      if (want == 0) {
        degs_.push_back(graphs_[0].degree_multiset());
        continue;
      }
      const Graph* prev = graph(want - 1);
      if (!prev) return nullptr;
      std::vector<int> d;
      d.reserve(prev->m());
      for (auto [u, v] : prev->edges())
        d.push_back(prev->degree(u) + prev->degree(v) - 2);
      std::sort(d.begin(), d.end());
      degs_.push_back(std::move(d));
    }
    return &degs_[k];
  }

  std::optional<long long> edges_at(int k) {
    if (k == 0) return graphs_[0].m();
    const auto* d = degrees(k - 1);
    if (!d) return std::nullopt;
    long long e = 0;
    for (long long x : *d) e += x * (x - 1) / 2;
    return e;
  }

  std::optional<long long> vertices_at(int k) {
    if (k == 0) return graphs_[0].n();
    return edges_at(k - 1);
  }

  std::optional<int> max_degree_at(int k) {
    const auto* d = degrees(k);
    if (!d) return std::nullopt;
    return d->empty() ? 0 : d->back();
  }
  std::optional<int> min_degree_at(int k) {
    const auto* d = degrees(k);
    if (!d) return std::nullopt;
    return d->empty() ? 0 : d->front();
  }

 private:
  Budget budget_;
  std::vector<Graph> graphs_;
  std::vector<std::vector<int>> degs_;
};

}  // namespace detail

// ind(P,G) = min{ r >= 1 : P(L^r(G)) > P(G) }, computed levelwise. Cheap
// certified bounds decide a level without running the exact solver whenever
// they already separate the comparison; every such decision is logged. With
// force_exact, the exact solver runs at every level as well and any
// disagreement with a shortcut aborts (test mode).
inline IndexResult parameter_index(const Graph& g, ParamKind p, const Budget& b = {},
                                   bool force_exact = false) {
  if (!is_prolific(g))
    throw graph_error(errc::not_prolific, "parameter_index requires a prolific graph");
  IndexResult res;
  res.param = p;
  res.base = compute_param(g, p, b);
  res.levels.push_back({0, res.base, std::nullopt});

  detail::IterateCache cache(g, b);
  const Rational& base = res.base;

  auto log = [&res](int level, const std::string& what) {
    res.shortcut_log.push_back("L" + std::to_string(level) + ":" + what);
  };

  // Evaluates level r. Returns nullopt when materialization hits the vertex
  // budget; otherwise fills out and reports whether P_r > base.
  auto evaluate = [&](int r, LevelValue& out) -> std::optional<bool> {
    out.level = r;
    auto exact_int = [&](long long v) {
      out.exact = Rational(v);
      return Rational(v) > base;
    };
    auto bound_decided = [&](Rational lo, Rational hi, const std::string& method,
                             bool greater) {
      out.bound = BoundRecord{lo, hi, method};
      log(r, method);
      return greater;
    };
    // In test mode, re-derive a bound decision with the exact solver.
    auto verify_bound = [&](bool greater, auto&& fn) {
      if (!force_exact) return;
      const Graph* lg = cache.graph(r);
      if (!lg) return;
      Rational exact(fn(*lg));
      if ((exact > base) != greater)
        throw std::logic_error("bound decided level " + std::to_string(r) +
                               " inconsistently: exact " + exact.str() + " vs base " +
                               base.str());
    };
    auto solver_value = [&](auto&& fn) -> std::optional<Rational> {
      const Graph* lg = cache.graph(r);
      if (!lg) return std::nullopt;
      return Rational(fn(*lg));
    };
    auto cross_check = [&](const char* tag, long long expect, auto&& fn) {
      if (!force_exact) return true;
      const Graph* lg = cache.graph(r);
      if (!lg) return true;  // cannot recheck under this budget
      long long actual = fn(*lg);
      if (actual != expect)
        throw std::logic_error(std::string("shortcut mismatch (") + tag + ") at level " +
                               std::to_string(r) + ": shortcut " + std::to_string(expect) +
                               " exact " + std::to_string(actual));
      return true;
    };

    switch (p) {
      case ParamKind::vertices: {
        auto v = cache.vertices_at(r);
        if (!v) return std::nullopt;
        return exact_int(*v);
      }
      case ParamKind::edges: {
        auto e = cache.edges_at(r);
        if (!e) return std::nullopt;
        return exact_int(*e);
      }
      case ParamKind::max_degree: {
        auto d = cache.max_degree_at(r);
        if (!d) return std::nullopt;
        return exact_int(*d);
      }
      case ParamKind::min_degree: {
        auto d = cache.min_degree_at(r);
        if (!d) return std::nullopt;
        return exact_int(*d);
      }
      case ParamKind::avg_degree: {
        auto nv = cache.vertices_at(r);
        auto ev = cache.edges_at(r);
        if (!nv || !ev) return std::nullopt;
        out.exact = Rational(2 * *ev, *nv);
        return *out.exact > base;
      }
      case ParamKind::matching: {
        // Iterated line graphs of a connected graph are connected and
        // claw-free, so mu = floor(n/2) (Sumner).
        auto nv = cache.vertices_at(r);
        if (!nv) return std::nullopt;
        long long mu = *nv / 2;
        log(r, "sumner");
        cross_check("sumner", mu, [](const Graph& h) { return matching_number(h); });
        return exact_int(mu);
      }
      case ParamKind::independence: {
        if (r == 1) {
          // Independent edge sets of G are independent vertex sets of L(G).
          long long a1 = matching_number(g);
          log(r, "alpha=mu");
          cross_check("alpha=mu", a1,
                      [&b](const Graph& h) { return independence_number(h, b); });
          return exact_int(a1);
        }
        auto ev = cache.edges_at(r - 2);
        if (!ev) return std::nullopt;
        long long ar = *ev / 2;  // alpha_{k+2} = mu_{k+1} = floor(e_k / 2)
        log(r, "alpha=mu+sumner");
        cross_check("alpha chain", ar,
                    [&b](const Graph& h) { return independence_number(h, b); });
        return exact_int(ar);
      }
      case ParamKind::clique: {
        // Maximum cliques of a line graph come from stars (or triangles);
        // with max degree >= 3 at the previous level the star wins.
        auto d = cache.max_degree_at(r - 1);
        if (!d) return std::nullopt;
        log(r, "omega=maxdeg");
        cross_check("omega=maxdeg", *d,
                    [&b](const Graph& h) { return clique_number(h, b); });
        return exact_int(*d);
      }
      case ParamKind::domination:
      case ParamKind::ind_domination: {
        // gamma_r = i_r = mu*(L^{r-1}); mu* is sandwiched in [mu/2, mu].
        long long mu_prev;
        if (r == 1) {
          mu_prev = matching_number(g);
        } else {
          auto nv = cache.vertices_at(r - 1);
          if (!nv) return std::nullopt;
          mu_prev = *nv / 2;
        }
        Rational lo((mu_prev + 1) / 2), hi(mu_prev);
        if (lo > base || hi <= base) {
          bool greater = lo > base;
          if (force_exact) {
            const Graph* prev = cache.graph(r - 1);
            if (prev && (Rational(min_maximal_matching(*prev, b)) > base) != greater)
              throw std::logic_error("mustar bracket decided level " + std::to_string(r) +
                                     " inconsistently");
          }
          return bound_decided(lo, hi, "mustar-in-[mu/2,mu]", greater);
        }
        const Graph* prev = cache.graph(r - 1);
        if (!prev) return std::nullopt;
        long long v = min_maximal_matching(*prev, b);
        log(r, "gamma=i=mustar(prev)");
        return exact_int(v);
      }
      case ParamKind::chromatic: {
        auto lb = cache.max_degree_at(r - 1);  // chi >= omega >= prev max degree
        if (!lb) return std::nullopt;
        if (Rational(*lb) > base) {
          verify_bound(true, [&b](const Graph& h) { return chromatic_number(h, b); });
          auto nv = cache.vertices_at(r);
          return bound_decided(*lb, nv ? Rational(*nv) : Rational(*lb), "clique-lb", true);
        }
        auto ub = cache.max_degree_at(r);  // chi <= Delta + 1
        if (ub && Rational(*ub + 1) <= base) {
          verify_bound(false, [&b](const Graph& h) { return chromatic_number(h, b); });
          return bound_decided(1, *ub + 1, "brooks-ub", false);
        }
        auto v = solver_value([&b](const Graph& h) { return chromatic_number(h, b); });
        if (!v) return std::nullopt;
        out.exact = *v;
        return *v > base;
      }
      case ParamKind::chromatic_index: {
        auto d = cache.max_degree_at(r);
        if (!d) return std::nullopt;
        if (Rational(*d) > base) {
          verify_bound(true, [&b](const Graph& h) { return chromatic_index(h, b); });
          return bound_decided(*d, *d + 1, "vizing-lb", true);
        }
        if (Rational(*d + 1) <= base) {
          verify_bound(false, [&b](const Graph& h) { return chromatic_index(h, b); });
          return bound_decided(*d, *d + 1, "vizing-ub", false);
        }
        auto v = solver_value([&b](const Graph& h) { return chromatic_index(h, b); });
        if (!v) return std::nullopt;
        out.exact = *v;
        return *v > base;
      }
      case ParamKind::circumference: {
        const Graph* lg = cache.graph(r);
        if (!lg) return std::nullopt;
        long long target = base.as_int() + 1;
        int got = detail::longest_cycle_upto(*lg, static_cast<int>(target),
                                             b.solver_node_cap);
        if (got >= target) {
          verify_bound(true, [&b](const Graph& h) { return circumference(h, b); });
          return bound_decided(got, lg->n(), "cycle-search", true);
        }
        return exact_int(got);
      }
      case ParamKind::edge_connectivity: {
        auto d = cache.min_degree_at(r);
        if (d && Rational(*d) <= base) {
          verify_bound(false, [](const Graph& h) { return edge_connectivity(h); });
          return bound_decided(0, *d, "mindeg-ub", false);
        }
        auto v = solver_value([](const Graph& h) { return edge_connectivity(h); });
        if (!v) return std::nullopt;
        out.exact = *v;
        return *v > base;
      }
      case ParamKind::vertex_connectivity: {
        auto d = cache.min_degree_at(r);
        if (d && Rational(*d) <= base) {
          verify_bound(false, [](const Graph& h) { return vertex_connectivity(h); });
          return bound_decided(0, *d, "mindeg-ub", false);
        }
        auto v = solver_value([](const Graph& h) { return vertex_connectivity(h); });
        if (!v) return std::nullopt;
        out.exact = *v;
        return *v > base;
      }
    }
    throw graph_error(errc::unknown_check, "unknown parameter");
  };

  for (int r = 1; r <= b.max_iterations; ++r) {
    LevelValue lv;
    auto verdict = evaluate(r, lv);
    if (!verdict) {
      res.outcome = IndexOutcome::budget_exceeded;
      res.truncation_reason = "max_vertices";
      return res;
    }
    res.levels.push_back(std::move(lv));
    if (*verdict) {
      res.outcome = IndexOutcome::found;
      res.index = r;
      return res;
    }
  }
  res.outcome = IndexOutcome::budget_exceeded;
  res.truncation_reason = "max_iterations";
  return res;
}

struct ScanResult {
  ParamKind param{};
  std::string universe;
  long long graphs = 0;
  int max_index = 0;
  std::vector<std::string> witnesses;        // graph6, sorted
  std::map<int, long long> histogram;        // index -> count (found outcomes)
  std::vector<std::string> budget_exceeded;  // graph6, sorted
};

// Aggregates parameter_index over a corpus; deterministic regardless of the
// worker count.
inline ScanResult family_index_scan(const std::vector<Graph>& corpus, ParamKind p,
                                    const Budget& b = {}, int workers = 1,
                                    const std::string& universe_desc = "") {
  ScanResult sr;
  sr.param = p;
  sr.universe = universe_desc;
  sr.graphs = static_cast<long long>(corpus.size());
  std::vector<int> found(corpus.size(), -1);  // index, or -1 for budget
  parallel_for(corpus.size(), workers, [&](size_t i) {
    IndexResult r = parameter_index(corpus[i], p, b);
    found[i] = r.found() ? r.index : -1;
  });
  for (size_t i = 0; i < corpus.size(); ++i) {
    if (found[i] < 0) {
      sr.budget_exceeded.push_back(write_graph6(corpus[i]));
      continue;
    }
    ++sr.histogram[found[i]];
    sr.max_index = std::max(sr.max_index, found[i]);
  }
  for (size_t i = 0; i < corpus.size(); ++i)
    if (found[i] == sr.max_index && sr.max_index > 0)
      sr.witnesses.push_back(write_graph6(corpus[i]));
  std::sort(sr.witnesses.begin(), sr.witnesses.end());
  std::sort(sr.budget_exceeded.begin(), sr.budget_exceeded.end());
  return sr;
}

}  // namespace ilg
