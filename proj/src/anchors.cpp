//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "zdchaos/anchors.hpp"

#include <algorithm>
#include <stdexcept>

namespace zdchaos {

std::vector<std::string> check_anchor_data(const CoveringSequence &f,
                                           const AnchorData &a) {
  std::vector<std::string> bad;
  if (a.forward.size() != a.backward.size()) {
    bad.push_back("forward/backward row count mismatch");
    return bad;
  }
  if (a.depth() > f.depth()) {
    bad.push_back("anchors deeper than the covering");
    return bad;
  }
  for (std::size_t n = 1; n <= a.depth(); ++n) {
    const auto &g = *f.levels[n];
    const auto &fw = a.forward[n];
    const auto &bw = a.backward[n];
    std::string tag = "level " + std::to_string(n) + ": ";
    if (fw.size() != n + 2 || bw.size() != n + 2) {
      bad.push_back(tag + "anchor rows must have n+2 entries");
      continue;
    }
    for (std::size_t i = 0; i + 1 < fw.size(); ++i) {
      if (!g.has_edge(fw[i], fw[i + 1]))
        bad.push_back(tag + "forward thread breaks at position " +
                      std::to_string(i));
      if (!g.has_edge(bw[i + 1], bw[i]))
        bad.push_back(tag + "backward thread breaks at position -" +
                      std::to_string(i + 1));
    }
    if (n + 1 <= a.depth()) {
      const auto &h = f.hom_into(n + 1);
      for (std::size_t i = 0; i < n + 2; ++i) {
        if (h(a.forward[n + 1][i]) != fw[i])
          bad.push_back(tag + "forward entry " + std::to_string(i) +
                        " is not the image of level " + std::to_string(n + 1));
        if (h(a.backward[n + 1][i]) != bw[i])
          bad.push_back(tag + "backward entry -" + std::to_string(i) +
                        " is not the image of level " + std::to_string(n + 1));
      }
    }
  }
  return bad;
}

AnchorData select_anchor_threads(const CoveringSequence &f, std::size_t depth,
                                 const std::vector<AnchorHint> &hints) {
  auto report = validate_covering(f);
  if (!report.ok() || !report.chain_transitive) {
    std::string msg = "select_anchor_threads: input covering is invalid";
    for (const auto &p : report.problems) msg += "; " + p;
    throw std::invalid_argument(msg);
  }
  if (depth < 1 || depth > f.depth())
    throw std::invalid_argument("select_anchor_threads: depth out of range");
  const std::size_t top = std::min(depth + 1, f.depth());

  // to_level[n][v] = phi_{top,n}(v) for v in level top.
  std::vector<std::vector<VertexIndex>> to_level(top + 1);
  to_level[top].resize(f.levels[top]->num_vertices());
  for (VertexIndex v = 0; v < to_level[top].size(); ++v) to_level[top][v] = v;
  for (std::size_t n = top; n-- > 0;) {
    to_level[n] = to_level[n + 1];
    for (auto &v : to_level[n]) v = f.hom_into(n + 1)(v);
  }

  auto pick = [&](bool second) -> VertexIndex {
    for (VertexIndex s = 0; s < f.levels[top]->num_vertices(); ++s) {
      bool ok = true;
      for (std::size_t n = 1; n < hints.size() && n <= top && ok; ++n) {
        const auto &want = second ? hints[n].v2 : hints[n].v1;
        if (want && to_level[n][s] != *want) ok = false;
      }
      if (ok) return s;
    }
    throw std::invalid_argument(
        "select_anchor_threads: no coherent thread meets the pinned anchors");
  };

  const auto &g = *f.levels[top];
  std::vector<VertexIndex> fw{pick(false)}, bw{pick(true)};
  while (fw.size() < depth + 2) fw.push_back(g.out(fw.back())[0]);
  while (bw.size() < depth + 2) bw.push_back(g.in(bw.back())[0]);

  AnchorData a;
  a.forward.resize(depth + 1);
  a.backward.resize(depth + 1);
  a.forward[0].assign(2, 0);
  a.backward[0].assign(2, 0);
  for (std::size_t n = 1; n <= depth; ++n) {
    for (std::size_t i = 0; i < n + 2; ++i) {
      a.forward[n].push_back(to_level[n][fw[i]]);
      a.backward[n].push_back(to_level[n][bw[i]]);
    }
  }
  return a;
}

}  // namespace zdchaos
