#pragma once

#include <array>
#include <optional>
#include <string>

#include "ilg/clique.hpp"
#include "ilg/coloring.hpp"
#include "ilg/connectivity.hpp"
#include "ilg/cycles.hpp"
#include "ilg/domination.hpp"
#include "ilg/graph.hpp"
#include "ilg/matching.hpp"
#include "ilg/rational.hpp"

namespace ilg {

// The fifteen tracked parameters, in the customary order.
enum class ParamKind {
  vertices,
  edges,
  max_degree,
  min_degree,
  avg_degree,
  circumference,
  matching,
  chromatic,
  chromatic_index,
  clique,
  edge_connectivity,
  vertex_connectivity,
  independence,
  ind_domination,
  domination,
};

inline constexpr std::array<ParamKind, 15> all_params = {
    ParamKind::vertices,        ParamKind::edges,
    ParamKind::max_degree,      ParamKind::min_degree,
    ParamKind::avg_degree,      ParamKind::circumference,
    ParamKind::matching,        ParamKind::chromatic,
    ParamKind::chromatic_index, ParamKind::clique,
    ParamKind::edge_connectivity, ParamKind::vertex_connectivity,
    ParamKind::independence,    ParamKind::ind_domination,
    ParamKind::domination,
};

inline const char* param_name(ParamKind p) {
  switch (p) {
    case ParamKind::vertices: return "n";
    case ParamKind::edges: return "e";
    case ParamKind::max_degree: return "Delta";
    case ParamKind::min_degree: return "delta";
    case ParamKind::avg_degree: return "d";
    case ParamKind::circumference: return "c";
    case ParamKind::matching: return "mu";
    case ParamKind::chromatic: return "chi";
    case ParamKind::chromatic_index: return "chi'";
    case ParamKind::clique: return "omega";
    case ParamKind::edge_connectivity: return "lambda";
    case ParamKind::vertex_connectivity: return "kappa";
    case ParamKind::independence: return "alpha";
    case ParamKind::ind_domination: return "i";
    case ParamKind::domination: return "gamma";
  }
  return "?";
}

inline std::optional<ParamKind> param_from_string(const std::string& s) {
  if (s == "n" || s == "vertices") return ParamKind::vertices;
  if (s == "e" || s == "edges") return ParamKind::edges;
  if (s == "Delta" || s == "maxdeg") return ParamKind::max_degree;
  if (s == "delta" || s == "mindeg") return ParamKind::min_degree;
  if (s == "d" || s == "avgdeg") return ParamKind::avg_degree;
  if (s == "c" || s == "circumference") return ParamKind::circumference;
  if (s == "mu" || s == "matching") return ParamKind::matching;
  if (s == "chi" || s == "chromatic") return ParamKind::chromatic;
  if (s == "chip" || s == "chi'" || s == "chromatic-index") return ParamKind::chromatic_index;
  if (s == "omega" || s == "clique") return ParamKind::clique;
  if (s == "lambda" || s == "edge-connectivity") return ParamKind::edge_connectivity;
  if (s == "kappa" || s == "vertex-connectivity") return ParamKind::vertex_connectivity;
  if (s == "alpha" || s == "independence") return ParamKind::independence;
  if (s == "i" || s == "ind-domination") return ParamKind::ind_domination;
  if (s == "gamma" || s == "domination") return ParamKind::domination;
  return std::nullopt;
}

struct BasicParams {
  long long n = 0, e = 0;
  int maxdeg = 0, mindeg = 0;
  Rational avgdeg;
};

inline BasicParams basic_params(const Graph& g) {
  if (g.n() == 0) throw graph_error(errc::empty_graph, "basic_params on the empty graph");
  BasicParams bp;
  bp.n = g.n();
  bp.e = g.m();
  bp.maxdeg = g.max_degree();
  bp.mindeg = g.min_degree();
  bp.avgdeg = Rational(2 * bp.e, bp.n);
  return bp;
}

// max over u of the largest neighbor degree not exceeding deg(u); an empty
// inner range contributes 0.
inline int stacho_phi(const Graph& g) {
  int best = 0;
  for (int u = 0; u < g.n(); ++u) {
    int du = g.degree(u);
    for (int v : g.neighbors(u)) {
      int dv = g.degree(v);
      if (dv <= du) best = std::max(best, dv);
    }
  }
  return best;
}

// An edge uv with deg(u) + deg(v) - 2 > maxdeg certifies that the maximum
// degree grows after one line-graph step.
inline bool is_fine(const Graph& g) {
  int delta = g.max_degree();
  for (auto [u, v] : g.edges())
    if (g.degree(u) + g.degree(v) - 2 > delta) return true;
  return false;
}

inline Rational compute_param(const Graph& g, ParamKind p, const Budget& budget = {}) {
  switch (p) {
    case ParamKind::vertices: return g.n();
    case ParamKind::edges: return g.m();
    case ParamKind::max_degree: return g.max_degree();
    case ParamKind::min_degree: return g.min_degree();
    case ParamKind::avg_degree:
      if (g.n() == 0) throw graph_error(errc::empty_graph, "average degree of empty graph");
      return Rational(2LL * g.m(), g.n());
    case ParamKind::circumference: return circumference(g, budget);
    case ParamKind::matching: return matching_number(g);
    case ParamKind::chromatic: return chromatic_number(g, budget);
    case ParamKind::chromatic_index: return chromatic_index(g, budget);
    case ParamKind::clique: return clique_number(g, budget);
    case ParamKind::edge_connectivity: return edge_connectivity(g);
    case ParamKind::vertex_connectivity: return vertex_connectivity(g);
    case ParamKind::independence: return independence_number(g, budget);
    case ParamKind::ind_domination: return independent_domination_number(g, budget);
    case ParamKind::domination: return domination_number(g, budget);
  }
  throw graph_error(errc::unknown_check, "unknown parameter");
}

}  // namespace ilg
