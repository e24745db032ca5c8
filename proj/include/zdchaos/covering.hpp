//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>
#include <vector>

#include "zdchaos/graph.hpp"

namespace zdchaos {

struct HomFlags {
  bool is_hom = false;
  bool edge_surjective = false;
  bool plus_directional = false;
  bool bidirectional = false;

  bool is_cover() const { return is_hom && edge_surjective && plus_directional; }
  friend bool operator==(const HomFlags &, const HomFlags &) = default;
};

// Vertex map between two graphs. Structural flags are computed once at
// construction; recompute_flags() redoes the work from scratch.
class GraphHom {
 public:
  // `map` must be total: one target vertex per source vertex.
  GraphHom(GraphPtr source, GraphPtr target, std::vector<VertexIndex> map);

  static GraphHom Identity(const GraphPtr &g);

  const GraphPtr &source() const { return source_; }
  const GraphPtr &target() const { return target_; }
  VertexIndex operator()(VertexIndex v) const { return map_.at(v); }
  const std::vector<VertexIndex> &map() const { return map_; }

  const HomFlags &flags() const { return flags_; }
  HomFlags recompute_flags() const;

  // Source vertices at which the out-neighbour (resp. in-neighbour) images
  // disagree. Empty for a +directional (resp. bidirectional) map.
  std::vector<VertexIndex> plus_directional_failures() const;
  std::vector<VertexIndex> minus_directional_failures() const;
  // Source edges whose image is not an edge.
  std::vector<Edge> non_edges() const;

 private:
  GraphPtr source_, target_;
  std::vector<VertexIndex> map_;
  HomFlags flags_;
};

bool check_homomorphism(const GraphHom &h);
// The following three throw std::invalid_argument when h is not a
// homomorphism.
bool check_edge_surjective(const GraphHom &h);
bool check_plus_directional(const GraphHom &h);
bool check_bidirectional(const GraphHom &h);

// Composite of a chain. hs[i].source() must be hs[i+1].target(), i.e. the
// list runs from the shallow end: compose({phi_{n+1}, ..., phi_m}) is
// phi_{m,n} = phi_{n+1} o ... o phi_m.
GraphHom compose(const std::vector<GraphHom> &hs);

// levels[0] is the singleton graph; homs[n-1] maps levels[n] -> levels[n-1].
struct CoveringSequence {
  std::string name;
  std::vector<GraphPtr> levels;
  std::vector<GraphHom> homs;

  std::size_t depth() const { return levels.empty() ? 0 : levels.size() - 1; }
  const GraphHom &hom_into(std::size_t n) const { return homs.at(n - 1); }
};

struct LevelCheck {
  std::size_t level = 0;
  SurjectivityReport surjectivity;
  bool irreducible = false;
  HomFlags hom;  // flags of the map into level-1 (level 0 has none)
  std::vector<std::string> problems;
};

struct CoveringReport {
  bool singleton_base = false;
  std::vector<LevelCheck> levels;
  bool all_covers = false;
  bool bidirectional = false;
  bool chain_transitive = false;
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
  std::string to_text() const;
};

// Never throws; every failure lands in the report.
CoveringReport validate_covering(const CoveringSequence &c);

}  // namespace zdchaos
