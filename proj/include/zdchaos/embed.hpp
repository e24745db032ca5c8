//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zdchaos/address.hpp"
#include "zdchaos/anchors.hpp"
#include "zdchaos/covering.hpp"
#include "zdchaos/witness.hpp"

namespace zdchaos {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultVertexBudget = 200'000;

// One materialized level G_n of the augmented covering: F_n plus a hub with a
// loop, a path p_1 from the hub into F_n and a path p_2 from F_n back to the
// hub. Vertex names: "H", "p1:<j>", "p2:<j>", "F:<name>".
struct EmbeddingLevel {
  std::size_t n = 0;
  GraphPtr graph;
  std::vector<Address> address;         // per vertex of graph
  std::vector<VertexIndex> f_vertex;    // F_n index -> vertex of graph
  VertexIndex hub = 0;                  // the F_0 vertex at level 0
  std::size_t l1 = 0, l2 = 0;           // 0 at level 0
  std::optional<Walk> p1, p2, w;        // absent at level 0

  std::optional<VertexIndex> vertex_of(const Address &a) const;
};

struct Embedding {
  std::shared_ptr<const CoveringSequence> base;
  AnchorData anchors;
  std::size_t l11 = 1, l21 = 1;
  std::vector<EmbeddingLevel> levels;  // 0..max_level
  std::vector<GraphHom> homs;          // homs[n-1] : G_n -> G_{n-1}

  std::size_t max_level() const { return levels.size() - 1; }
  const GraphHom &hom_into(std::size_t n) const { return homs.at(n - 1); }
  CoveringSequence as_covering(std::string name = "embedding") const;
};

// Level 0: G_0 = F_0.
EmbeddingLevel base_level(const CoveringSequence &f);

// Builds G_{n+1} and phi_{n+1} from G_n by concatenating the image words of
// the new connector paths explicitly. prev.n == 0 builds the base case, with
// path lengths l11 and l21.
std::pair<EmbeddingLevel, GraphHom> build_level(const EmbeddingLevel &prev,
                                                const CoveringSequence &f,
                                                const AnchorData &anchors,
                                                std::size_t l11 = 1,
                                                std::size_t l21 = 1);

struct EmbeddingOptions {
  std::size_t l11 = 1, l21 = 1;
  std::size_t vertex_budget = kDefaultVertexBudget;
  // When absent anchors are chosen by select_anchor_threads.
  std::optional<AnchorData> anchors;
};

// Explicit tower G_0..G_max_level. Throws BudgetExceeded before building a
// level with more than vertex_budget vertices.
Embedding build_embedding(const CoveringSequence &f, std::size_t max_level,
                          const EmbeddingOptions &options = {});

// Cover checks on every phi_n, bidirectionality when the base is
// bidirectional, and individual certificates for the hub and the two path
// endpoints inside F at every level.
WitnessReport verify_construction(const Embedding &e);

// Copy of `e` in which one interior vertex of p_{1,level}, nearest the
// midpoint, is sent to a vertex that breaks an incident edge. Throws
// std::invalid_argument when G_{level-1} is complete and no such choice exists.
Embedding sabotage_flip_path_image(const Embedding &e, std::size_t level);

// Copy of `e` with an extra edge from the hub into the middle of p_{1,level}.
Embedding sabotage_extra_path_edge(const Embedding &e, std::size_t level);

}  // namespace zdchaos
