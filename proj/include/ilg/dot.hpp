#pragma once

#include <sstream>
#include <string>

#include "ilg/graph.hpp"

namespace ilg {

// Deterministic DOT export for figure-sized graphs.
inline std::string write_dot(const Graph& g, const std::string& name = "G") {
  if (g.n() > 100)
    throw graph_error(errc::cap_exceeded, "DOT export is limited to n <= 100");
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ilg
