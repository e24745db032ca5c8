//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "zdchaos/dot.hpp"

#include <sstream>

namespace zdchaos {

namespace {

std::string quote(const std::string &s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

void write_edges(std::ostringstream &out, const DirectedGraph &g) {
  for (const auto &[u, v] : g.edges())
    out << "  " << quote(g.name(u)) << " -> " << quote(g.name(v)) << ";\n";
}

}  // namespace

std::string to_dot(const EmbeddingLevel &level) {
  const DirectedGraph &g = *level.graph;
  std::ostringstream out;
  out << "digraph G" << level.n << " {\n";
  out << "  subgraph cluster_F {\n    label=\"F_" << level.n << "\";\n";
  for (VertexIndex v : level.f_vertex)
    out << "    " << quote(g.name(v)) << " [shape=box];\n";
  out << "  }\n";
  for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
    if (level.address[v].in_f()) continue;
    out << "  " << quote(g.name(v))
        << (v == level.hub ? " [shape=doublecircle]" : "") << ";\n";
  }
  write_edges(out, g);
  out << "}\n";
  return out.str();
}

std::string to_dot(const DirectedGraph &g, const std::string &name) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  for (const auto &v : g.names()) out << "  " << quote(v) << ";\n";
  write_edges(out, g);
  out << "}\n";
  return out.str();
}

}  // namespace zdchaos
