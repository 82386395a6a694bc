#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ilg {

enum class errc {
  self_loop,
  duplicate_edge,
  endpoint_out_of_range,
  empty_graph,
  no_edges,
  disconnected,
  not_prolific,
  malformed_graph6,
  cap_exceeded,
  invalid_descriptor,
  unknown_check,
  budget_exceeded,
};

class graph_error : public std::runtime_error {
 public:
  graph_error(errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// Unordered edge, stored with u < v.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Immutable undirected simple graph. Keeps sorted adjacency lists, the
// lexicographically sorted edge list, and (for small n) adjacency bit rows.
// All mutating operations return a new Graph.
class Graph {
 public:
  Graph() = default;

  // Validating constructor: rejects self-loops, duplicate edges (in either
  // orientation) and endpoints outside [0, n).
  static Graph build(int n, std::span<const Edge> edge_pairs) {
    if (n < 0) throw graph_error(errc::endpoint_out_of_range, "negative vertex count");
    std::vector<Edge> es;
    es.reserve(edge_pairs.size());
    for (auto [u, v] : edge_pairs) {
      if (u == v)
        throw graph_error(errc::self_loop,
                          "self-loop at vertex " + std::to_string(u));
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw graph_error(errc::endpoint_out_of_range,
                          "edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") out of range for n=" + std::to_string(n));
      es.push_back(make_edge(u, v));
    }
    std::sort(es.begin(), es.end());
    for (size_t i = 1; i < es.size(); ++i)
      if (es[i] == es[i - 1])
        throw graph_error(errc::duplicate_edge,
                          "duplicate edge (" + std::to_string(es[i].first) + "," +
                              std::to_string(es[i].second) + ")");
    return Graph(n, std::move(es));
  }

  static Graph build(int n, std::initializer_list<Edge> edge_pairs) {
    return build(n, std::span<const Edge>(edge_pairs.begin(), edge_pairs.size()));
  }

  // Trusted constructor for internal producers that guarantee a sorted,
  // duplicate-free edge list (line-graph construction, generators).
  static Graph from_sorted_edges(int n, std::vector<Edge> es) {
    return Graph(n, std::move(es));
  }

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const int> neighbors(int v) const {
    return {adj_flat_.data() + adj_off_[v], adj_flat_.data() + adj_off_[v + 1]};
  }
  int degree(int v) const { return adj_off_[v + 1] - adj_off_[v]; }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    if (!bits_.empty()) return bit(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // Adjacency row of u as 64-bit words; empty when n exceeds the bitset
  // threshold.
  std::span<const uint64_t> bit_row(int u) const {
    if (bits_.empty()) return {};
    return {bits_.data() + static_cast<size_t>(u) * words_, words_};
  }
  size_t words_per_row() const noexcept { return words_; }
  bool has_bit_rows() const noexcept { return !bits_.empty(); }

  // Sorted ascending.
  std::vector<int> degree_multiset() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
  }

  int max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
  }
  int min_degree() const {
    if (n_ == 0) return 0;
    int best = degree(0);
    for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
  }

  Graph permuted(std::span<const int> perm) const {
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (auto [u, v] : edges_) es.push_back(make_edge(perm[u], perm[v]));
    std::sort(es.begin(), es.end());
    return Graph(n_, std::move(es));
  }

  // Subgraph induced by the given (sorted, duplicate-free) vertex set,
  // relabeled densely in the given order.
  Graph induced(std::span<const int> verts) const {
    std::vector<int> pos(n_, -1);
    for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (auto [u, v] : edges_)
      if (pos[u] >= 0 && pos[v] >= 0) es.push_back(make_edge(pos[u], pos[v]));
    std::sort(es.begin(), es.end());
    return Graph(static_cast<int>(verts.size()), std::move(es));
  }

  Graph complement() const {
    std::vector<Edge> es;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (!has_edge(u, v)) es.push_back({u, v});
    return Graph(n_, std::move(es));
  }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  Graph(int n, std::vector<Edge> es) : n_(n), edges_(std::move(es)) {
    adj_off_.assign(n_ + 1, 0);
    for (auto [u, v] : edges_) {
      ++adj_off_[u + 1];
      ++adj_off_[v + 1];
    }
    for (int v = 0; v < n_; ++v) adj_off_[v + 1] += adj_off_[v];
    adj_flat_.resize(2 * edges_.size());
    std::vector<int> cursor(adj_off_.begin(), adj_off_.end() - 1);
    for (auto [u, v] : edges_) {
      adj_flat_[cursor[u]++] = v;
      adj_flat_[cursor[v]++] = u;
    }
    for (int v = 0; v < n_; ++v)
      std::sort(adj_flat_.begin() + adj_off_[v], adj_flat_.begin() + adj_off_[v + 1]);
    if (n_ > 0 && n_ <= kBitsetMaxN) {
      words_ = static_cast<size_t>((n_ + 63) / 64);
      bits_.assign(static_cast<size_t>(n_) * words_, 0);
      for (auto [u, v] : edges_) {
        set_bit(u, v);
        set_bit(v, u);
      }
    }
  }

  void set_bit(int u, int v) {
    bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v) / 64] |=
        uint64_t{1} << (v % 64);
  }
  bool bit(int u, int v) const {
    return (bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v) / 64] >>
            (v % 64)) &
           1;
  }

  static constexpr int kBitsetMaxN = 4096;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> adj_off_{0};
  std::vector<int> adj_flat_;
  size_t words_ = 0;
  std::vector<uint64_t> bits_;
};

// Convenience alias used by callers that just need the first edge endpoint
// order guarantee.
inline Graph build_graph(int n, std::span<const Edge> edge_pairs) {
  return Graph::build(n, edge_pairs);
}
inline Graph build_graph(int n, std::initializer_list<Edge> edge_pairs) {
  return Graph::build(n, edge_pairs);
}

// Connected components, each a sorted vertex list; deterministic order by
// smallest contained vertex.
inline std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack;
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    stack.assign(1, s);
    std::vector<int> comp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Vacuously true for n <= 1 (including n = 0).
inline bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.n();
}

}  // namespace ilg
