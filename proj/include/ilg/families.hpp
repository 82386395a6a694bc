#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "ilg/graph.hpp"

namespace ilg {

// Parameterized graph families used in the extremal characterizations.
struct ClawSubdivision {
  int m1, m2, m3;  // leg lengths in edges, m1 >= m2 >= m3 >= 1
};
struct DoubleStarSubdivision {
  int middle;  // middle path length in edges, >= 1; 1 is the double star itself
};
struct CyclePendantPath {
  int k;     // cycle length >= 3
  int tail;  // pendant path edges >= 1
};
struct CycleWithChords {
  int n;  // cycle length
  std::vector<Edge> chords;  // vertex-disjoint, endpoints non-adjacent on the cycle
};
struct TwoCyclesPath {
  int p1, p2;  // cycle lengths >= 3
  int path;    // connecting path edges >= 1
};
struct Star {
  int leaves;
};
struct Complete {
  int n;
};
struct PathFamily {
  int n;
};
struct CycleFamily {
  int n;
};
struct ChartrandHarary {
  int kappa, lambda, delta;  // 1 <= kappa <= lambda <= delta
};

using FamilyDescriptor =
    std::variant<ClawSubdivision, DoubleStarSubdivision, CyclePendantPath,
                 CycleWithChords, TwoCyclesPath, Star, Complete, PathFamily,
                 CycleFamily, ChartrandHarary>;

namespace detail {

[[noreturn]] inline void bad_descriptor(const std::string& why) {
  throw graph_error(errc::invalid_descriptor, "invalid family descriptor: " + why);
}

}  // namespace detail

inline char claw_type(const ClawSubdivision& c) {
  int ones = (c.m1 == 1) + (c.m2 == 1) + (c.m3 == 1);
  switch (ones) {
    case 0: return 'C';
    case 1: return 'B';
    case 2: return 'A';
    default: return 'K';  // (1,1,1) is K_{1,3} itself
  }
}

inline Graph generate(const FamilyDescriptor& fd) {
  std::vector<Edge> es;
  return std::visit(
      [&](const auto& f) -> Graph {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ClawSubdivision>) {
          if (!(f.m1 >= f.m2 && f.m2 >= f.m3 && f.m3 >= 1))
            detail::bad_descriptor("claw legs need m1 >= m2 >= m3 >= 1");
          int next = 1;
          for (int leg : {f.m1, f.m2, f.m3}) {
            int prev = 0;
            for (int i = 0; i < leg; ++i) {
              es.push_back(make_edge(prev, next));
              prev = next++;
            }
          }
          return Graph::build(next, es);
        } else if constexpr (std::is_same_v<T, DoubleStarSubdivision>) {
          if (f.middle < 1) detail::bad_descriptor("middle path length must be >= 1");
          // 0..middle is the middle path; two leaves at each end.
          int u = 0, v = f.middle;
          for (int i = 0; i < f.middle; ++i) es.push_back({i, i + 1});
          int next = f.middle + 1;
          es.push_back(make_edge(u, next++));
          es.push_back(make_edge(u, next++));
          es.push_back(make_edge(v, next++));
          es.push_back(make_edge(v, next++));
          return Graph::build(next, es);
        } else if constexpr (std::is_same_v<T, CyclePendantPath>) {
          if (f.k < 3) detail::bad_descriptor("cycle length must be >= 3");
          if (f.tail < 1)
            detail::bad_descriptor("pendant path must have >= 1 edge (a bare cycle is not prolific)");
          for (int i = 0; i < f.k; ++i) es.push_back(make_edge(i, (i + 1) % f.k));
          int prev = 0;
          for (int i = 0; i < f.tail; ++i) {
            es.push_back(make_edge(prev, f.k + i));
            prev = f.k + i;
          }
          return Graph::build(f.k + f.tail, es);
        } else if constexpr (std::is_same_v<T, CycleWithChords>) {
          if (f.n < 4) detail::bad_descriptor("chorded cycle needs n >= 4");
          std::vector<char> used(f.n, 0);
          for (auto [a, b] : f.chords) {
            if (a < 0 || b < 0 || a >= f.n || b >= f.n || a == b)
              detail::bad_descriptor("chord endpoint out of range");
            int dist = std::abs(a - b);
            dist = std::min(dist, f.n - dist);
            if (dist < 2) detail::bad_descriptor("chord joins adjacent cycle vertices");
            if (used[a] || used[b]) detail::bad_descriptor("chords must be vertex-disjoint");
            used[a] = used[b] = 1;
          }
          for (int i = 0; i < f.n; ++i) es.push_back(make_edge(i, (i + 1) % f.n));
          for (auto [a, b] : f.chords) es.push_back(make_edge(a, b));
          return Graph::build(f.n, es);
        } else if constexpr (std::is_same_v<T, TwoCyclesPath>) {
          if (f.p1 < 3 || f.p2 < 3) detail::bad_descriptor("cycle lengths must be >= 3");
          if (f.path < 1) detail::bad_descriptor("connecting path must have >= 1 edge");
          for (int i = 0; i < f.p1; ++i) es.push_back(make_edge(i, (i + 1) % f.p1));
          int base = f.p1;
          for (int i = 0; i < f.p2; ++i)
            es.push_back(make_edge(base + i, base + (i + 1) % f.p2));
          int prev = 0, next = f.p1 + f.p2;
          for (int i = 0; i + 1 < f.path; ++i) {
            es.push_back(make_edge(prev, next));
            prev = next++;
          }
          es.push_back(make_edge(prev, base));
          return Graph::build(next, es);
        } else if constexpr (std::is_same_v<T, Star>) {
          if (f.leaves < 1) detail::bad_descriptor("star needs >= 1 leaf");
          for (int i = 1; i <= f.leaves; ++i) es.push_back({0, i});
          return Graph::build(f.leaves + 1, es);
        } else if constexpr (std::is_same_v<T, Complete>) {
          if (f.n < 1) detail::bad_descriptor("complete graph needs n >= 1");
          for (int i = 0; i < f.n; ++i)
            for (int j = i + 1; j < f.n; ++j) es.push_back({i, j});
          return Graph::build(f.n, es);
        } else if constexpr (std::is_same_v<T, PathFamily>) {
          if (f.n < 1) detail::bad_descriptor("path needs n >= 1");
          for (int i = 0; i + 1 < f.n; ++i) es.push_back({i, i + 1});
          return Graph::build(f.n, es);
        } else if constexpr (std::is_same_v<T, CycleFamily>) {
          if (f.n < 3) detail::bad_descriptor("cycle needs n >= 3");
          for (int i = 0; i < f.n; ++i) es.push_back(make_edge(i, (i + 1) % f.n));
          return Graph::build(f.n, es);
        } else {
          static_assert(std::is_same_v<T, ChartrandHarary>);
          if (!(1 <= f.kappa && f.kappa <= f.lambda && f.lambda <= f.delta))
            detail::bad_descriptor("need 1 <= kappa <= lambda <= delta");
          // Two complete graphs on delta+1 vertices, joined by lambda cross
          // edges that meet exactly kappa vertices on the first side.
          int side = f.delta + 1;
          for (int i = 0; i < side; ++i)
            for (int j = i + 1; j < side; ++j) {
              es.push_back({i, j});
              es.push_back({side + i, side + j});
            }
          int heavy = f.lambda - f.kappa + 1;  // cross edges carried by vertex 0
          for (int t = 0; t < heavy; ++t) es.push_back({0, side + t});
          for (int i = 1; i < f.kappa; ++i) es.push_back({i, side + heavy + i - 1});
          return Graph::build(2 * side, es);
        }
      },
      fd);
}

// Connected, at least one vertex, and none of: path, cycle, K_{1,3}.
inline bool is_prolific(const Graph& g) {
  if (g.n() < 1 || !is_connected(g)) return false;
  int maxdeg = g.max_degree();
  if (g.m() == g.n() - 1 && maxdeg <= 2) return false;  // path (includes K1, K2)
  if (g.n() >= 3 && g.m() == g.n() && maxdeg == 2) return false;  // cycle
  if (g.n() == 4 && g.m() == 3 && maxdeg == 3) return false;  // K_{1,3}
  return true;
}

struct SpecialClassification {
  enum class Tag { none, claw_subdivision, double_star_subdivision, cycle_pendant_path };
  Tag tag = Tag::none;

  // claw_subdivision ('K' marks K_{1,3} itself):
  char claw = 0;
  int m1 = 0, m2 = 0, m3 = 0;

  // double_star_subdivision (middle-edge-only subdivisions); `middle` is also
  // filled for the loose reading below.
  int middle = 0;

  // cycle_pendant_path:
  int cycle_len = 0, tail = 0;

  // Loose reading: any tree homeomorphic to the double star (exactly two
  // degree-3 vertices, maximum degree 3). The strict tag above additionally
  // requires all four pendant legs to be single edges.
  bool double_star_loose = false;

  bool prolific = false, tree = false, unicyclic = false;

  bool is_claw_subdivision() const { return tag == Tag::claw_subdivision; }
  bool is_type(char t) const { return tag == Tag::claw_subdivision && claw == t; }
};

namespace detail {

// Follows the path away from `from` through degree-2 vertices; returns the
// number of edges walked until a vertex of degree != 2 (or `stop`) is hit.
inline int walk_leg(const Graph& g, int from, int first, int stop, int* endpoint = nullptr) {
  int prev = from, cur = first, len = 1;
  while (cur != stop && g.degree(cur) == 2) {
    auto nb = g.neighbors(cur);
    int nxt = (nb[0] == prev) ? nb[1] : nb[0];
    prev = cur;
    cur = nxt;
    ++len;
  }
  if (endpoint) *endpoint = cur;
  return len;
}

}  // namespace detail

inline SpecialClassification classify_special(const Graph& g) {
  SpecialClassification sc;
  sc.prolific = is_prolific(g);
  if (g.n() == 0 || !is_connected(g)) return sc;
  sc.tree = g.m() == g.n() - 1;
  sc.unicyclic = g.m() == g.n();
  int deg3 = 0, deg1 = 0, deg_high = 0;
  for (int v = 0; v < g.n(); ++v) {
    int d = g.degree(v);
    if (d == 1) ++deg1;
    if (d == 3) ++deg3;
    if (d >= 4) ++deg_high;
  }
  if (sc.tree && deg3 == 1 && deg_high == 0 && g.n() >= 4) {
    // Subdivision of K_{1,3}: one branch vertex, three pendant legs.
    int center = 0;
    while (g.degree(center) != 3) ++center;
    std::vector<int> legs;
    for (int w : g.neighbors(center))
      legs.push_back(detail::walk_leg(g, center, w, -1));
    std::sort(legs.begin(), legs.end(), std::greater<int>());
    sc.tag = SpecialClassification::Tag::claw_subdivision;
    sc.m1 = legs[0];
    sc.m2 = legs[1];
    sc.m3 = legs[2];
    sc.claw = claw_type({sc.m1, sc.m2, sc.m3});
    return sc;
  }
  if (sc.tree && deg3 == 2 && deg_high == 0) {
    sc.double_star_loose = true;
    int u = -1, v = -1;
    for (int x = 0; x < g.n(); ++x)
      if (g.degree(x) == 3) (u < 0 ? u : v) = x;
    // Legs from each branch vertex; the one ending at the other branch vertex
    // is the middle path.
    bool strict = true;
    for (int c : {u, v}) {
      int other = (c == u) ? v : u;
      for (int w : g.neighbors(c)) {
        int endpoint = 0;
        int len = detail::walk_leg(g, c, w, other, &endpoint);
        if (endpoint == other)
          sc.middle = len;
        else if (len != 1)
          strict = false;
      }
    }
    if (strict) sc.tag = SpecialClassification::Tag::double_star_subdivision;
    return sc;
  }
  if (sc.unicyclic && deg3 == 1 && deg1 == 1 && deg_high == 0) {
    // Unique cycle with one pendant path: find the leaf, walk to the branch
    // vertex; the rest is the cycle.
    int leaf = 0;
    while (g.degree(leaf) != 1) ++leaf;
    sc.tail = detail::walk_leg(g, leaf, g.neighbors(leaf)[0], -1) ;
    sc.cycle_len = g.n() - sc.tail;
    sc.tag = SpecialClassification::Tag::cycle_pendant_path;
    return sc;
  }
  return sc;
}

// -------- descriptor parsing for the CLI ("family:params") --------

inline std::optional<FamilyDescriptor> parse_family(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  std::string name = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  auto ints = [&rest]() {
    std::vector<int> out;
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ','))
      try {
        out.push_back(std::stoi(tok));
      } catch (...) {
        out.clear();
        return out;
      }
    return out;
  };
  auto v = ints();
  if (name == "claw" && v.size() == 3) return ClawSubdivision{v[0], v[1], v[2]};
  if (name == "s22" && v.size() == 1) return DoubleStarSubdivision{v[0]};
  if (name == "cp" && v.size() == 2) return CyclePendantPath{v[0], v[1]};
  if (name == "twocycles" && v.size() == 3) return TwoCyclesPath{v[0], v[1], v[2]};
  if (name == "star" && v.size() == 1) return Star{v[0]};
  if (name == "complete" && v.size() == 1) return Complete{v[0]};
  if (name == "path" && v.size() == 1) return PathFamily{v[0]};
  if (name == "cycle" && v.size() == 1) return CycleFamily{v[0]};
  if (name == "ch" && v.size() == 3) return ChartrandHarary{v[0], v[1], v[2]};
  if (name == "cyclechords") {
    // cyclechords:n,a-b,c-d,...
    std::stringstream ss(rest);
    std::string tok;
    if (!std::getline(ss, tok, ',')) return std::nullopt;
    CycleWithChords cc;
    try {
      cc.n = std::stoi(tok);
      while (std::getline(ss, tok, ',')) {
        auto dash = tok.find('-');
        if (dash == std::string::npos) return std::nullopt;
        cc.chords.push_back(make_edge(std::stoi(tok.substr(0, dash)),
                                      std::stoi(tok.substr(dash + 1))));
      }
    } catch (...) {
      return std::nullopt;
    }
    return cc;
  }
  return std::nullopt;
}

inline std::string family_to_string(const FamilyDescriptor& fd) {
  std::ostringstream os;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ClawSubdivision>)
          os << "claw:" << f.m1 << "," << f.m2 << "," << f.m3;
        else if constexpr (std::is_same_v<T, DoubleStarSubdivision>)
          os << "s22:" << f.middle;
        else if constexpr (std::is_same_v<T, CyclePendantPath>)
          os << "cp:" << f.k << "," << f.tail;
        else if constexpr (std::is_same_v<T, CycleWithChords>) {
          os << "cyclechords:" << f.n;
          for (auto [a, b] : f.chords) os << "," << a << "-" << b;
        } else if constexpr (std::is_same_v<T, TwoCyclesPath>)
          os << "twocycles:" << f.p1 << "," << f.p2 << "," << f.path;
        else if constexpr (std::is_same_v<T, Star>)
          os << "star:" << f.leaves;
        else if constexpr (std::is_same_v<T, Complete>)
          os << "complete:" << f.n;
        else if constexpr (std::is_same_v<T, PathFamily>)
          os << "path:" << f.n;
        else if constexpr (std::is_same_v<T, CycleFamily>)
          os << "cycle:" << f.n;
        else
          os << "ch:" << f.kappa << "," << f.lambda << "," << f.delta;
      },
      fd);
  return os.str();
}

// All claw subdivisions with at most max_n vertices, K_{1,3} excluded;
// deterministic order.
inline std::vector<ClawSubdivision> claw_subdivisions_up_to(int max_n) {
  std::vector<ClawSubdivision> out;
  for (int n = 5; n <= max_n; ++n) {
    int edges = n - 1;
    for (int m3 = 1; 3 * m3 <= edges; ++m3)
      for (int m2 = m3; m3 + 2 * m2 <= edges; ++m2) {
        int m1 = edges - m2 - m3;
        if (m1 < m2) continue;
        out.push_back({m1, m2, m3});
      }
  }
  return out;
}

}  // namespace ilg
