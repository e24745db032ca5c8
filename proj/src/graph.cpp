//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "zdchaos/graph.hpp"

#include <algorithm>
#include <deque>
#include <tuple>
#include <limits>
#include <stdexcept>

namespace zdchaos {

DirectedGraph::DirectedGraph(
    std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>> &edges) {
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end())
    throw std::invalid_argument("duplicate vertex name");
  names_ = std::move(names);
  edges_.reserve(edges.size());
  for (const auto &[u, v] : edges) edges_.emplace_back(index(u), index(v));
  index_edges();
}

DirectedGraph DirectedGraph::FromSortedNames(std::vector<std::string> names,
                                             std::vector<Edge> edges) {
  DirectedGraph g;
  g.names_ = std::move(names);
  for (const auto &[u, v] : edges)
    if (u >= g.names_.size() || v >= g.names_.size())
      throw std::out_of_range("edge endpoint out of range");
  g.edges_ = std::move(edges);
  g.index_edges();
  return g;
}

DirectedGraph DirectedGraph::Singleton(std::string name) {
  return FromSortedNames({std::move(name)}, {{0, 0}});
}

void DirectedGraph::index_edges() {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  const std::size_t n = names_.size();
  out_begin_.assign(n + 1, 0);
  in_begin_.assign(n + 1, 0);
  for (const auto &[u, v] : edges_) {
    ++out_begin_[u + 1];
    ++in_begin_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    out_begin_[i + 1] += out_begin_[i];
    in_begin_[i + 1] += in_begin_[i];
  }
  out_adj_.resize(edges_.size());
  in_adj_.resize(edges_.size());
  std::vector<std::uint32_t> out_fill(out_begin_.begin(), out_begin_.end() - 1);
  std::vector<std::uint32_t> in_fill(in_begin_.begin(), in_begin_.end() - 1);
  // edges_ is sorted by source, so both adjacency lists come out sorted.
  for (const auto &[u, v] : edges_) out_adj_[out_fill[u]++] = v;
  std::vector<Edge> by_target(edges_);
  std::sort(by_target.begin(), by_target.end(),
            [](const Edge &a, const Edge &b) {
              return std::tie(a.second, a.first) < std::tie(b.second, b.first);
            });
  for (const auto &[u, v] : by_target) in_adj_[in_fill[v]++] = u;
}

std::optional<VertexIndex> DirectedGraph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexIndex>(it - names_.begin());
}

VertexIndex DirectedGraph::index(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw std::out_of_range("unknown vertex '" + std::string(name) + "'");
}

std::span<const VertexIndex> DirectedGraph::out(VertexIndex v) const {
  return {out_adj_.data() + out_begin_.at(v),
          out_adj_.data() + out_begin_.at(v + 1)};
}

std::span<const VertexIndex> DirectedGraph::in(VertexIndex v) const {
  return {in_adj_.data() + in_begin_.at(v),
          in_adj_.data() + in_begin_.at(v + 1)};
}

bool DirectedGraph::has_edge(VertexIndex u, VertexIndex v) const {
  auto o = out(u);
  return std::binary_search(o.begin(), o.end(), v);
}

SurjectivityReport DirectedGraph::validate_surjective() const {
  SurjectivityReport report;
  for (VertexIndex v = 0; v < num_vertices(); ++v) {
    bool no_in = in(v).empty();
    bool no_out = out(v).empty();
    if (no_in || no_out) report.violations.push_back({names_[v], no_in, no_out});
  }
  if (names_.empty()) report.violations.push_back({"<empty graph>", true, true});
  return report;
}

namespace {

std::vector<bool> reachable(std::size_t n, VertexIndex start, bool forward,
                            const DirectedGraph &g) {
  std::vector<bool> seen(n, false);
  std::vector<VertexIndex> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    VertexIndex u = stack.back();
    stack.pop_back();
    for (VertexIndex w : forward ? g.out(u) : g.in(u)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool DirectedGraph::is_irreducible() const {
  if (!validate_surjective().ok())
    throw std::invalid_argument("graph is not a surjective relation");
  const std::size_t n = num_vertices();
  auto fwd = reachable(n, 0, true, *this);
  auto bwd = reachable(n, 0, false, *this);
  return std::all_of(fwd.begin(), fwd.end(), [](bool b) { return b; }) &&
         std::all_of(bwd.begin(), bwd.end(), [](bool b) { return b; });
}

std::vector<VertexIndex> DirectedGraph::shortest_path(VertexIndex u,
                                                      VertexIndex v) const {
  constexpr VertexIndex kUnseen = std::numeric_limits<VertexIndex>::max();
  std::vector<VertexIndex> parent(num_vertices(), kUnseen);
  std::deque<VertexIndex> queue{u};
  parent.at(u) = u;
  while (!queue.empty() && parent.at(v) == kUnseen) {
    VertexIndex x = queue.front();
    queue.pop_front();
    for (VertexIndex y : out(x)) {
      if (parent[y] == kUnseen) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  if (parent[v] == kUnseen) return {};
  std::vector<VertexIndex> path{v};
  while (path.back() != u) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

Walk::Walk(GraphPtr graph, std::vector<VertexIndex> vertices)
    : graph_(std::move(graph)), vertices_(std::move(vertices)) {
  if (!graph_) throw std::invalid_argument("walk without a graph");
  if (vertices_.empty()) throw std::invalid_argument("walk must be nonempty");
  for (VertexIndex v : vertices_)
    if (v >= graph_->num_vertices())
      throw std::out_of_range("walk vertex out of range");
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
    if (!graph_->has_edge(vertices_[i], vertices_[i + 1]))
      throw std::invalid_argument(
          "not a walk: no edge " + graph_->name(vertices_[i]) + " -> " +
          graph_->name(vertices_[i + 1]));
}

bool Walk::is_path() const {
  std::vector<VertexIndex> sorted(vertices_);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::vector<Edge> Walk::edge_set() const {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
    e.emplace_back(vertices_[i], vertices_[i + 1]);
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

Walk concat(const Walk &w1, const Walk &w2) {
  if (w1.graph() != w2.graph())
    throw std::invalid_argument("concat: walks live in different graphs");
  if (w1.back() != w2.front())
    throw std::invalid_argument("concat: endpoint mismatch");
  std::vector<VertexIndex> seq(w1.vertices());
  seq.insert(seq.end(), w2.vertices().begin() + 1, w2.vertices().end());
  return Walk(w1.graph(), std::move(seq));
}

Walk subwalk(const Walk &w, std::size_t a, std::size_t b) {
  if (a > b || b > w.length())
    throw std::out_of_range("subwalk: bad range");
  return Walk(w.graph(), std::vector<VertexIndex>(w.vertices().begin() + a,
                                                  w.vertices().begin() + b + 1));
}

Walk edge_covering_walk(const GraphPtr &g, VertexIndex u, VertexIndex v) {
  if (!g->is_irreducible())
    throw std::invalid_argument("edge_covering_walk: graph is not irreducible");
  if (u >= g->num_vertices() || v >= g->num_vertices())
    throw std::out_of_range("edge_covering_walk: vertex out of range");
  std::vector<VertexIndex> seq{u};
  std::vector<bool> covered(g->num_edges(), false);
  auto edge_id = [&](VertexIndex a, VertexIndex b) {
    auto it = std::lower_bound(g->edges().begin(), g->edges().end(),
                               Edge{a, b});
    return static_cast<std::size_t>(it - g->edges().begin());
  };
  auto append = [&](const std::vector<VertexIndex> &path) {
    for (std::size_t i = 1; i < path.size(); ++i) {
      covered[edge_id(path[i - 1], path[i])] = true;
      seq.push_back(path[i]);
    }
  };
  for (std::size_t e = 0; e < g->num_edges(); ++e) {
    if (covered[e]) continue;
    const auto [s, t] = g->edges()[e];
    append(g->shortest_path(seq.back(), s));
    append({s, t});
  }
  append(g->shortest_path(seq.back(), v));
  return Walk(g, std::move(seq));
}

}  // namespace zdchaos
