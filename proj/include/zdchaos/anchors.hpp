//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zdchaos/covering.hpp"

namespace zdchaos {

// Finite shadows of two orbit threads of the base system, one running
// forward from v_{n,1} and one running backward into v_{n,2}.
//
// forward[n]  = (v_{n,1,0}, v_{n,1,1}, ..., v_{n,1,n+1})
// backward[n] = (v_{n,2,0}, v_{n,2,-1}, ..., v_{n,2,-(n+1)})
//
// Entry 0 of both vectors describes the singleton level and is unused by the
// construction. Each row is a walk (forward) or a reversed walk (backward) in
// F_n, and row n+1 projects onto row n entrywise.
struct AnchorData {
  std::vector<std::vector<VertexIndex>> forward;
  std::vector<std::vector<VertexIndex>> backward;

  std::size_t depth() const { return forward.empty() ? 0 : forward.size() - 1; }
};

// Optional pinned choices for v_{n,1}, v_{n,2} (e.g. from a covering file).
struct AnchorHint {
  std::optional<VertexIndex> v1, v2;
};

// Lists every violated invariant; empty when `a` is coherent for F up to
// a.depth().
std::vector<std::string> check_anchor_data(const CoveringSequence &f,
                                           const AnchorData &a);

// Chooses anchors for levels 1..depth. The orbit segments are selected at the
// deepest level available (depth + 1 when F has it) as the lexicographically
// smallest walks compatible with any hints, then projected down, which makes
// the families coherent by construction. Throws std::invalid_argument when F
// is not a valid chain transitive covering, when depth exceeds F, or when the
// hints cannot be met.
AnchorData select_anchor_threads(const CoveringSequence &f, std::size_t depth,
                                 const std::vector<AnchorHint> &hints = {});

}  // namespace zdchaos
