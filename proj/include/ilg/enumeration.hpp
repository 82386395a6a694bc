#pragma once

#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <unordered_set>

#include "ilg/canonical.hpp"
#include "ilg/graph.hpp"

namespace ilg {

struct EnumOptions {
  // Only emit graphs with at most this many edges (-1: no cap). The cap also
  // prunes intermediate levels: every later extension adds at least one edge.
  int max_edges = -1;
};

namespace detail {

inline Graph graph_from_canonical_key(const std::string& key) {
  auto get = [&key](size_t i) {
    return static_cast<int>(static_cast<unsigned char>(key[2 * i])) |
           (static_cast<int>(static_cast<unsigned char>(key[2 * i + 1])) << 8);
  };
  int n = get(0);
  int m = get(1);
  std::vector<Edge> es;
  es.reserve(m);
  for (int i = 0; i < m; ++i) es.push_back({get(2 + 2 * i), get(3 + 2 * i)});
  std::sort(es.begin(), es.end());
  return Graph::from_sorted_edges(n, std::move(es));
}

}  // namespace detail

// Canonical keys (see CanonicalForm::key) of all connected graphs on exactly
// n vertices, sorted, one per isomorphism class. Levelwise construction:
// every connected graph on k vertices arises from a connected graph on k-1
// vertices by attaching a new vertex to a nonempty neighbor set; duplicates
// collapse by canonical form at every level.
inline std::vector<std::string> connected_canonical_keys(int n, const EnumOptions& opt = {}) {
  constexpr int kHardCap = 10;
  if (n < 1 || n > kHardCap)
    throw graph_error(errc::cap_exceeded,
                      "enumerate_connected supports 1 <= n <= " + std::to_string(kHardCap) +
                          "; ingest graph6 for larger universes");
  // The big levels are expensive to rebuild; memoize per (n, cap).
  static std::mutex cache_mu;
  static std::map<std::pair<int, int>, std::vector<std::string>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find({n, opt.max_edges});
    if (it != cache.end()) return it->second;
  }
  std::vector<std::string> keys{canonical_form(Graph::build(1, {})).key()};
  for (int k = 2; k <= n; ++k) {
    long long cap = opt.max_edges < 0 ? std::numeric_limits<long long>::max()
                                      : opt.max_edges - (n - k);
    std::unordered_set<std::string> seen;
    for (const auto& parent_key : keys) {
      Graph parent = detail::graph_from_canonical_key(parent_key);
      for (unsigned mask = 1; mask < (1u << (k - 1)); ++mask) {
        if (parent.m() + __builtin_popcount(mask) > cap) continue;
        std::vector<Edge> es = parent.edges();
        for (int b = 0; b < k - 1; ++b)
          if (mask & (1u << b)) es.push_back({b, k - 1});
        std::sort(es.begin(), es.end());
        Graph child = Graph::from_sorted_edges(k, std::move(es));
        seen.insert(canonical_form(child).key());
      }
    }
    keys.assign(seen.begin(), seen.end());
    std::sort(keys.begin(), keys.end());
  }
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    cache[{n, opt.max_edges}] = keys;
  }
  return keys;
}

inline std::vector<Graph> enumerate_connected(int n, const EnumOptions& opt = {}) {
  std::vector<Graph> out;
  auto keys = connected_canonical_keys(n, opt);
  out.reserve(keys.size());
  for (const auto& key : keys) out.push_back(detail::graph_from_canonical_key(key));
  return out;
}

inline std::vector<Graph> enumerate_connected_filtered(
    int n, const std::function<bool(const Graph&)>& keep, const EnumOptions& opt = {}) {
  std::vector<Graph> out;
  for (auto& g : enumerate_connected(n, opt))
    if (keep(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace ilg
