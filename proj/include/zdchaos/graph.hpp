//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zdchaos {

using VertexIndex = std::uint32_t;
using Edge = std::pair<VertexIndex, VertexIndex>;

struct DegreeViolation {
  std::string vertex;
  bool no_in_edge = false;
  bool no_out_edge = false;
};

struct SurjectivityReport {
  std::vector<DegreeViolation> violations;
  bool ok() const { return violations.empty(); }
};

// A finite directed graph. Vertex ids are opaque names; internally vertices
// are numbered in lexicographic name order, so every canonical ordering in
// the library is the name order. Immutable after construction.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  // Names must be unique. Edges referring to unknown names throw.
  // Duplicate edges collapse into one.
  DirectedGraph(std::vector<std::string> names,
                const std::vector<std::pair<std::string, std::string>> &edges);

  // Fast path for generated graphs: `names` must already be sorted and unique.
  static DirectedGraph FromSortedNames(std::vector<std::string> names,
                                       std::vector<Edge> edges);

  static DirectedGraph Singleton(std::string name);

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::string &name(VertexIndex v) const { return names_.at(v); }
  const std::vector<std::string> &names() const { return names_; }
  std::optional<VertexIndex> find(std::string_view name) const;
  // Throws std::out_of_range for an unknown name.
  VertexIndex index(std::string_view name) const;

  // Sorted by (source, target).
  const std::vector<Edge> &edges() const { return edges_; }
  std::span<const VertexIndex> out(VertexIndex v) const;
  std::span<const VertexIndex> in(VertexIndex v) const;
  bool has_edge(VertexIndex u, VertexIndex v) const;

  SurjectivityReport validate_surjective() const;

  // Strong connectivity. Throws std::invalid_argument on a graph that is not
  // a surjective relation.
  bool is_irreducible() const;

  // BFS shortest path u -> v, ties broken towards smaller vertex indices.
  // Empty when v is unreachable.
  std::vector<VertexIndex> shortest_path(VertexIndex u, VertexIndex v) const;

  friend bool operator==(const DirectedGraph &a, const DirectedGraph &b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  void index_edges();

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> out_begin_, in_begin_;
  std::vector<VertexIndex> out_adj_, in_adj_;
};

using GraphPtr = std::shared_ptr<const DirectedGraph>;

// A walk (v_0, ..., v_l) in a graph. Consecutive vertices are joined by edges.
class Walk {
 public:
  Walk(GraphPtr graph, std::vector<VertexIndex> vertices);

  const GraphPtr &graph() const { return graph_; }
  std::size_t length() const { return vertices_.size() - 1; }
  VertexIndex at(std::size_t i) const { return vertices_.at(i); }
  VertexIndex front() const { return vertices_.front(); }
  VertexIndex back() const { return vertices_.back(); }
  const std::vector<VertexIndex> &vertices() const { return vertices_; }

  // True when all vertices are mutually distinct.
  bool is_path() const;
  std::vector<Edge> edge_set() const;  // sorted, unique

  friend bool operator==(const Walk &a, const Walk &b) {
    return a.graph_ == b.graph_ && a.vertices_ == b.vertices_;
  }

 private:
  GraphPtr graph_;
  std::vector<VertexIndex> vertices_;
};

// w1 w2; the junction vertex appears once.
Walk concat(const Walk &w1, const Walk &w2);

// w[a, b] = (v_a, ..., v_b).
Walk subwalk(const Walk &w, std::size_t a, std::size_t b);

// Walk from u to v that traverses every edge of an irreducible graph.
// Edges are visited in sorted order; each not yet traversed edge is reached
// by a shortest path from the current endpoint. Not length-minimal.
Walk edge_covering_walk(const GraphPtr &g, VertexIndex u, VertexIndex v);

}  // namespace zdchaos
