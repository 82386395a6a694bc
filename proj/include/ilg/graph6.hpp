#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ilg/graph.hpp"

namespace ilg {

// graph6: 6-bit printable encoding of the upper-triangular adjacency matrix,
// bits ordered column by column ((0,1),(0,2),(1,2),(0,3),...), each 6-bit
// group offset by 63. Vertex counts: one byte for n <= 62, '~' + 3 bytes for
// n <= 258047, '~~' + 6 bytes above that.
inline std::string write_graph6(const Graph& g) {
  std::string out;
  long long n = g.n();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    out.push_back('~');
    out.push_back('~');
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
  std::vector<char> bits(nbits, 0);
  for (auto [u, v] : g.edges()) {
    // column-major upper triangle: bit index of (u,v), u < v.
    size_t idx = static_cast<size_t>(v) * (v - 1) / 2 + u;
    bits[idx] = 1;
  }
  for (size_t i = 0; i < nbits; i += 6) {
    int grp = 0;
    for (size_t j = 0; j < 6; ++j) {
      grp <<= 1;
      if (i + j < nbits) grp |= bits[i + j];
    }
    out.push_back(static_cast<char>(grp + 63));
  }
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  auto fail = [&](const std::string& why) -> Graph {
    throw graph_error(errc::malformed_graph6, "graph6: " + why);
  };
  // Optional header used by some tools.
  constexpr std::string_view hdr = ">>graph6<<";
  if (text.substr(0, hdr.size()) == hdr) text.remove_prefix(hdr.size());
  if (text.empty()) fail("empty line");
  for (char c : text)
    if (c < 63 || c > 126) fail("byte out of range");

  size_t pos = 0;
  long long n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) fail("truncated vertex count");
    n = ((long long)(text[1] - 63) << 12) | ((long long)(text[2] - 63) << 6) |
        (long long)(text[3] - 63);
    pos = 4;
  } else {
    if (text.size() < 8) fail("truncated vertex count");
    for (int i = 2; i < 8; ++i) n = (n << 6) | (long long)(text[i] - 63);
    pos = 8;
  }
  if (n < 0 || n > 2000000) fail("implausible vertex count");
  size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
  size_t expect = (nbits + 5) / 6;
  if (text.size() - pos != expect)
    fail("wrong length: expected " + std::to_string(expect) + " data bytes, got " +
         std::to_string(text.size() - pos));
  std::vector<Edge> es;
  size_t bit = 0;
  int bu = 0, bv = 1;  // walks the upper triangle in column-major order
  for (size_t i = pos; i < text.size(); ++i) {
    int grp = text[i] - 63;
    for (int j = 5; j >= 0; --j, ++bit) {
      bool set = (grp >> j) & 1;
      if (bit >= nbits) {
        if (set) fail("nonzero padding bits");
        continue;
      }
      if (set) es.push_back({bu, bv});
      if (++bu == bv) {
        bu = 0;
        ++bv;
      }
    }
  }
  std::sort(es.begin(), es.end());
  return Graph::from_sorted_edges(static_cast<int>(n), std::move(es));
}

}  // namespace ilg
