//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "zdchaos/covering_file.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace zdchaos {

namespace {

const std::set<std::string, std::less<>> kKeywords = {
    "covering", "level", "vertices", "edges", "map", "anchors", "end", "->"};

std::vector<std::string> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

struct PendingLevel {
  std::size_t line = 0;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::size_t> edge_lines;
  std::map<std::string, std::pair<std::string, std::size_t>> map;  // v -> (u, line)
  bool has_vertices = false, has_map = false;
  std::optional<std::pair<std::string, std::string>> anchors;
  std::size_t anchors_line = 0;
};

}  // namespace

CoveringFile parse_covering(std::string_view text) {
  CoveringFile out;
  std::vector<PendingLevel> levels;
  enum class Section { kNone, kEdges, kMap } section = Section::kNone;
  bool have_header = false, in_level = false;
  std::size_t lineno = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    const auto tok = tokenize(raw);
    if (tok.empty()) continue;
    const std::string &kw = tok[0];

    if (!have_header) {
      if (kw != "covering" || tok.size() != 2)
        throw ParseError(lineno, "expected 'covering <name>'");
      out.covering.name = tok[1];
      have_header = true;
      continue;
    }
    if (!in_level) {
      if (kw != "level" || tok.size() != 2)
        throw ParseError(lineno, "expected 'level <n>'");
      if (tok[1] != std::to_string(levels.size() + 1))
        throw ParseError(lineno, "expected level " + std::to_string(levels.size() + 1));
      levels.emplace_back();
      levels.back().line = lineno;
      in_level = true;
      section = Section::kNone;
      continue;
    }
    PendingLevel &lv = levels.back();
    if (kw == "vertices") {
      if (lv.has_vertices) throw ParseError(lineno, "duplicate vertices line");
      if (tok.size() < 2) throw ParseError(lineno, "a level needs at least one vertex");
      lv.vertices.assign(tok.begin() + 1, tok.end());
      lv.has_vertices = true;
      section = Section::kNone;
    } else if (kw == "edges") {
      if (tok.size() != 1) throw ParseError(lineno, "'edges' takes no arguments");
      section = Section::kEdges;
    } else if (kw == "map") {
      if (tok.size() != 1) throw ParseError(lineno, "'map' takes no arguments");
      lv.has_map = true;
      section = Section::kMap;
    } else if (kw == "anchors") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'anchors <v1> <v2>'");
      lv.anchors = {tok[1], tok[2]};
      lv.anchors_line = lineno;
      section = Section::kNone;
    } else if (kw == "end") {
      if (tok.size() != 1) throw ParseError(lineno, "'end' takes no arguments");
      if (!lv.has_vertices) throw ParseError(lineno, "level has no vertices line");
      in_level = false;
    } else if (kw == "covering" || kw == "level") {
      throw ParseError(lineno, "missing 'end' before '" + kw + "'");
    } else if (section == Section::kEdges) {
      if (tok.size() != 2) throw ParseError(lineno, "edge line needs exactly two vertex ids");
      lv.edges.emplace_back(tok[0], tok[1]);
      lv.edge_lines.push_back(lineno);
    } else if (section == Section::kMap) {
      if (tok.size() != 3 || tok[1] != "->")
        throw ParseError(lineno, "map line must read '<v> -> <u>'");
      if (!lv.map.emplace(tok[0], std::pair{tok[2], lineno}).second)
        throw ParseError(lineno, "vertex " + tok[0] + " is mapped twice");
    } else {
      throw ParseError(lineno, "unexpected '" + kw + "'");
    }
  }
  if (!have_header) throw ParseError(lineno, "empty covering file");
  if (in_level) throw ParseError(lineno, "missing 'end' at end of file");
  if (levels.empty()) throw ParseError(lineno, "covering has no levels");

  out.covering.levels.push_back(
      std::make_shared<const DirectedGraph>(DirectedGraph::Singleton("v0")));
  out.hints.emplace_back();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    PendingLevel &lv = levels[i];
    const std::size_t n = i + 1;
    std::set<std::string> names(lv.vertices.begin(), lv.vertices.end());
    if (names.size() != lv.vertices.size())
      throw ParseError(lv.line, "duplicate vertex id at level " + std::to_string(n));
    for (const auto &v : names)
      if (kKeywords.count(v)) throw ParseError(lv.line, "vertex id '" + v + "' is a keyword");
    for (std::size_t e = 0; e < lv.edges.size(); ++e)
      for (const auto &v : {lv.edges[e].first, lv.edges[e].second})
        if (!names.count(v))
          throw ParseError(lv.edge_lines[e], "unknown vertex " + v);
    auto g = std::make_shared<const DirectedGraph>(
        std::vector<std::string>(lv.vertices), lv.edges);
    const GraphPtr &below = out.covering.levels.back();
    std::vector<VertexIndex> map(g->num_vertices());
    for (const auto &[v, target] : lv.map)
      if (!names.count(v)) throw ParseError(target.second, "unknown vertex " + v);
    for (VertexIndex v = 0; v < g->num_vertices(); ++v) {
      auto it = lv.map.find(g->name(v));
      if (it == lv.map.end()) {
        if (n == 1) {
          map[v] = 0;
          continue;
        }
        throw ParseError(lv.line, "vertex " + g->name(v) + " at level " +
                                      std::to_string(n) + " has no image");
      }
      auto u = below->find(it->second.first);
      if (!u)
        throw ParseError(it->second.second, "unknown target " + it->second.first +
                                                " at level " + std::to_string(n - 1));
      map[v] = *u;
    }
    AnchorHint hint;
    if (lv.anchors) {
      hint.v1 = g->find(lv.anchors->first);
      hint.v2 = g->find(lv.anchors->second);
      if (!hint.v1 || !hint.v2) throw ParseError(lv.anchors_line, "unknown anchor vertex");
    }
    out.covering.homs.emplace_back(g, below, std::move(map));
    out.covering.levels.push_back(std::move(g));
    out.hints.push_back(hint);
  }
  return out;
}

CoveringFile load_covering(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_covering(buf.str());
}

std::string write_covering(const CoveringSequence &c,
                           const std::vector<AnchorHint> &hints) {
  auto check = [](const std::string &id) {
    if (id.empty() || kKeywords.count(id) ||
        id.find_first_of(" \t\r\n#") != std::string::npos)
      throw std::invalid_argument("vertex id '" + id + "' cannot be written");
    return id;
  };
  if (c.levels.empty() || c.levels[0]->num_vertices() != 1 ||
      c.levels[0]->name(0) != "v0")
    throw std::invalid_argument("level 0 must be the singleton v0");
  std::ostringstream out;
  out << "covering " << check(c.name) << "\n";
  for (std::size_t n = 1; n <= c.depth(); ++n) {
    const DirectedGraph &g = *c.levels[n];
    const GraphHom &h = c.hom_into(n);
    out << "level " << n << "\nvertices";
    for (const auto &v : g.names()) out << " " << check(v);
    out << "\nedges\n";
    for (const auto &[u, v] : g.edges()) out << g.name(u) << " " << g.name(v) << "\n";
    out << "map\n";
    for (VertexIndex v = 0; v < g.num_vertices(); ++v)
      out << g.name(v) << " -> " << h.target()->name(h(v)) << "\n";
    if (n < hints.size() && hints[n].v1 && hints[n].v2)
      out << "anchors " << g.name(*hints[n].v1) << " " << g.name(*hints[n].v2) << "\n";
    out << "end\n";
  }
  return out.str();
}

}  // namespace zdchaos
