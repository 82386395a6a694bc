#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "ilg/graph.hpp"

namespace ilg {

// Isomorphism-invariant certificate: vertex count plus the edge list under a
// canonical relabeling. Equal certificates <=> isomorphic graphs.
struct CanonicalForm {
  int n = 0;
  std::vector<Edge> edges;
  uint64_t hash = 0;

  bool operator==(const CanonicalForm& o) const {
    return n == o.n && edges == o.edges;
  }
  bool operator<(const CanonicalForm& o) const {
    if (n != o.n) return n < o.n;
    if (edges.size() != o.edges.size()) return edges.size() < o.edges.size();
    return edges < o.edges;
  }

  // Compact string key for hash containers.
  std::string key() const {
    std::string s;
    s.reserve(8 + edges.size() * 4);
    auto put = [&s](int x) {
      s.push_back(static_cast<char>(x & 0xff));
      s.push_back(static_cast<char>((x >> 8) & 0xff));
    };
    put(n);
    put(static_cast<int>(edges.size()));
    for (auto [u, v] : edges) {
      put(u);
      put(v);
    }
    return s;
  }
};

namespace detail {

// Equitable refinement of an ordered partition: repeatedly splits cells by
// the multiset of neighbor counts into every cell until stable. Cell order is
// deterministic, so the refined partition is a pure function of the input.
class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(g), cell_of_(g.n()) {}

  // partition: ordered cells, each a vector of vertices.
  void refine(std::vector<std::vector<int>>& cells) {
    const int n = g_.n();
    for (size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_of_[v] = static_cast<int>(c);
    bool changed = true;
    std::vector<std::vector<int>> counts(n);
    while (changed) {
      changed = false;
      std::vector<std::vector<int>> next;
      next.reserve(cells.size());
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        // Signature of v: counts of neighbors per current cell id.
        for (int v : cell) {
          auto& sig = counts[v];
          sig.assign(cells.size(), 0);
          for (int w : g_.neighbors(v)) ++sig[cell_of_[w]];
        }
        std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) {
          return counts[a] < counts[b];
        });
        size_t start = 0;
        for (size_t i = 1; i <= cell.size(); ++i) {
          if (i == cell.size() || counts[cell[i]] != counts[cell[start]]) {
            next.emplace_back(cell.begin() + start, cell.begin() + i);
            if (i - start != cell.size()) changed = true;
            start = i;
          }
        }
      }
      cells.swap(next);
      for (size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) cell_of_[v] = static_cast<int>(c);
    }
  }

 private:
  const Graph& g_;
  std::vector<int> cell_of_;
};

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), refiner_(g), orbits_(g.n()) {}

  std::vector<int> run() {
    const int n = g_.n();
    best_labeling_.clear();
    // Initial partition: group by degree, ascending.
    std::vector<std::vector<int>> cells;
    {
      std::map<int, std::vector<int>> by_deg;
      for (int v = 0; v < n; ++v) by_deg[g_.degree(v)].push_back(v);
      for (auto& [d, vs] : by_deg) cells.push_back(std::move(vs));
    }
    refiner_.refine(cells);
    descend(cells, 0);
    return best_labeling_;
  }

 private:
  // Two cell-mates with identical neighborhoods (ignoring each other) are
  // interchangeable; branching on more than one of them is redundant.
  bool twins(int a, int b) const {
    auto na = g_.neighbors(a);
    auto nb = g_.neighbors(b);
    size_t i = 0, j = 0;
    while (i < na.size() || j < nb.size()) {
      int x = i < na.size() ? na[i] : INT32_MAX;
      int y = j < nb.size() ? nb[j] : INT32_MAX;
      if (x == b) {
        ++i;
        continue;
      }
      if (y == a) {
        ++j;
        continue;
      }
      if (x != y) return false;
      ++i;
      ++j;
    }
    return true;
  }

  void descend(std::vector<std::vector<int>>& cells, int depth) {
    size_t target = cells.size();
    for (size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<int> branch = cells[target];
    std::vector<int> tried;
    for (int v : branch) {
      bool skip = false;
      for (int u : tried) {
        if (twins(u, v)) {
          skip = true;
          break;
        }
        // Orbit pruning is only sound at the root of the search tree, where
        // every automorphism found so far fixes the (empty) branching prefix.
        if (depth == 0 && orbits_.find(u) == orbits_.find(v)) {
          skip = true;
          break;
        }
      }
      if (skip) continue;
      tried.push_back(v);
      std::vector<std::vector<int>> child;
      child.reserve(cells.size() + 1);
      for (size_t c = 0; c < cells.size(); ++c) {
        if (c == target) {
          child.push_back({v});
          std::vector<int> rest;
          for (int w : cells[c])
            if (w != v) rest.push_back(w);
          child.push_back(std::move(rest));
        } else {
          child.push_back(cells[c]);
        }
      }
      refiner_.refine(child);
      descend(child, depth + 1);
    }
  }

  void leaf(const std::vector<std::vector<int>>& cells) {
    const int n = g_.n();
    // labeling[v] = canonical position of v.
    std::vector<int> labeling(n);
    for (int i = 0; i < n; ++i) labeling[cells[i][0]] = i;
    std::vector<uint64_t> code = encode(labeling);
    if (best_labeling_.empty() || code < best_code_) {
      best_code_ = std::move(code);
      best_labeling_ = labeling;
    } else if (code == best_code_) {
      // labeling and best_labeling_ induce the same canonical graph, so
      // best^-1 * labeling is an automorphism; record its orbit merges.
      std::vector<int> inv(n);
      for (int v = 0; v < n; ++v) inv[best_labeling_[v]] = v;
      for (int v = 0; v < n; ++v) orbits_.unite(v, inv[labeling[v]]);
    }
  }

  std::vector<uint64_t> encode(const std::vector<int>& labeling) const {
    const int n = g_.n();
    std::vector<uint64_t> code((static_cast<size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
    for (auto [u, v] : g_.edges()) {
      int a = labeling[u], b = labeling[v];
      if (a > b) std::swap(a, b);
      // Upper triangle, row-major: position of (a,b), a < b.
      size_t idx = static_cast<size_t>(a) * n - static_cast<size_t>(a) * (a + 1) / 2 +
                   (b - a - 1);
      code[idx / 64] |= uint64_t{1} << (idx % 64);
    }
    return code;
  }

  const Graph& g_;
  Refiner refiner_;
  DSU orbits_;
  std::vector<uint64_t> best_code_;
  std::vector<int> best_labeling_;
};

}  // namespace detail

// labeling[v] = canonical position of vertex v.
inline std::vector<int> canonical_labeling(const Graph& g) {
  if (g.n() == 0) return {};
  detail::CanonSearch search(g);
  return search.run();
}

inline CanonicalForm canonical_form(const Graph& g) {
  CanonicalForm cf;
  cf.n = g.n();
  auto lab = canonical_labeling(g);
  cf.edges.reserve(g.m());
  for (auto [u, v] : g.edges()) cf.edges.push_back(make_edge(lab[u], lab[v]));
  std::sort(cf.edges.begin(), cf.edges.end());
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<uint64_t>(cf.n));
  for (auto [u, v] : cf.edges) mix((static_cast<uint64_t>(u) << 32) | static_cast<uint32_t>(v));
  cf.hash = h;
  return cf;
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.n() != h.n() || g.m() != h.m()) return false;
  if (g.degree_multiset() != h.degree_multiset()) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace ilg
