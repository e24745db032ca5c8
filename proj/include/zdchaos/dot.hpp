//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>

#include "zdchaos/embed.hpp"

namespace zdchaos {

// Graphviz rendering of one tower level. The F subgraph sits in its own
// cluster; the hub is drawn as a double circle.
std::string to_dot(const EmbeddingLevel &level);

// Plain rendering of a base level.
std::string to_dot(const DirectedGraph &g, const std::string &name);

}  // namespace zdchaos
