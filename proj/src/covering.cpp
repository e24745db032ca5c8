//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "zdchaos/covering.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zdchaos {

namespace {

HomFlags compute_flags(const DirectedGraph &s, const DirectedGraph &t,
                       const std::vector<VertexIndex> &map) {
  HomFlags f;
  f.is_hom = std::all_of(s.edges().begin(), s.edges().end(), [&](const Edge &e) {
    return t.has_edge(map[e.first], map[e.second]);
  });
  if (!f.is_hom) return f;
  std::vector<Edge> image;
  image.reserve(s.num_edges());
  for (const auto &[u, v] : s.edges()) image.emplace_back(map[u], map[v]);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  f.edge_surjective = image == t.edges();
  auto uniform = [&](std::span<const VertexIndex> nbrs) {
    return std::all_of(nbrs.begin(), nbrs.end(),
                       [&](VertexIndex w) { return map[w] == map[nbrs[0]]; });
  };
  f.plus_directional = true;
  bool minus = true;
  for (VertexIndex v = 0; v < s.num_vertices(); ++v) {
    f.plus_directional = f.plus_directional && uniform(s.out(v));
    minus = minus && uniform(s.in(v));
  }
  f.bidirectional = f.plus_directional && minus;
  return f;
}

}  // namespace

GraphHom::GraphHom(GraphPtr source, GraphPtr target,
                   std::vector<VertexIndex> map)
    : source_(std::move(source)), target_(std::move(target)),
      map_(std::move(map)) {
  if (!source_ || !target_) throw std::invalid_argument("null graph in hom");
  if (map_.size() != source_->num_vertices())
    throw std::invalid_argument("hom map is not total on the source");
  for (VertexIndex v : map_)
    if (v >= target_->num_vertices())
      throw std::out_of_range("hom image outside target");
  flags_ = compute_flags(*source_, *target_, map_);
}

GraphHom GraphHom::Identity(const GraphPtr &g) {
  std::vector<VertexIndex> map(g->num_vertices());
  for (VertexIndex v = 0; v < map.size(); ++v) map[v] = v;
  return GraphHom(g, g, std::move(map));
}

HomFlags GraphHom::recompute_flags() const {
  return compute_flags(*source_, *target_, map_);
}

std::vector<VertexIndex> GraphHom::plus_directional_failures() const {
  std::vector<VertexIndex> bad;
  for (VertexIndex v = 0; v < source_->num_vertices(); ++v) {
    auto o = source_->out(v);
    for (VertexIndex w : o)
      if (map_[w] != map_[o[0]]) {
        bad.push_back(v);
        break;
      }
  }
  return bad;
}

std::vector<VertexIndex> GraphHom::minus_directional_failures() const {
  std::vector<VertexIndex> bad;
  for (VertexIndex v = 0; v < source_->num_vertices(); ++v) {
    auto i = source_->in(v);
    for (VertexIndex w : i)
      if (map_[w] != map_[i[0]]) {
        bad.push_back(v);
        break;
      }
  }
  return bad;
}

std::vector<Edge> GraphHom::non_edges() const {
  std::vector<Edge> bad;
  for (const auto &[u, v] : source_->edges())
    if (!target_->has_edge(map_[u], map_[v])) bad.emplace_back(u, v);
  return bad;
}

bool check_homomorphism(const GraphHom &h) { return h.flags().is_hom; }

namespace {
void require_hom(const GraphHom &h) {
  if (!h.flags().is_hom)
    throw std::invalid_argument("map is not a graph homomorphism");
}
}  // namespace

bool check_edge_surjective(const GraphHom &h) {
  require_hom(h);
  return h.flags().edge_surjective;
}

bool check_plus_directional(const GraphHom &h) {
  require_hom(h);
  return h.flags().plus_directional;
}

bool check_bidirectional(const GraphHom &h) {
  require_hom(h);
  return h.flags().bidirectional;
}

GraphHom compose(const std::vector<GraphHom> &hs) {
  if (hs.empty()) throw std::invalid_argument("compose: empty chain");
  std::vector<VertexIndex> map = hs.back().map();
  for (std::size_t i = hs.size() - 1; i-- > 0;) {
    if (hs[i].source() != hs[i + 1].target() &&
        !(*hs[i].source() == *hs[i + 1].target()))
      throw std::invalid_argument("compose: chain mismatch at position " +
                                  std::to_string(i));
    for (auto &v : map) v = hs[i](v);
  }
  return GraphHom(hs.back().source(), hs.front().target(), std::move(map));
}

CoveringReport validate_covering(const CoveringSequence &c) {
  CoveringReport r;
  if (c.levels.empty()) {
    r.problems.push_back("covering has no levels");
    return r;
  }
  const auto &g0 = *c.levels[0];
  r.singleton_base = g0.num_vertices() == 1 && g0.num_edges() == 1;
  if (!r.singleton_base) r.problems.push_back("level 0 is not the singleton graph");
  if (c.homs.size() != c.depth())
    r.problems.push_back("expected " + std::to_string(c.depth()) +
                         " maps, found " + std::to_string(c.homs.size()));
  r.all_covers = true;
  r.bidirectional = true;
  r.chain_transitive = true;
  for (std::size_t n = 0; n < c.levels.size(); ++n) {
    LevelCheck lc;
    lc.level = n;
    const auto &g = *c.levels[n];
    lc.surjectivity = g.validate_surjective();
    for (const auto &v : lc.surjectivity.violations)
      lc.problems.push_back("vertex " + v.vertex + " has no " +
                            (v.no_in_edge && v.no_out_edge ? "in- or out-edge"
                             : v.no_in_edge                ? "in-edge"
                                                           : "out-edge"));
    lc.irreducible = lc.surjectivity.ok() && g.is_irreducible();
    if (!lc.irreducible) {
      r.chain_transitive = false;
      lc.problems.push_back("not irreducible");
    }
    if (n >= 1 && n - 1 < c.homs.size()) {
      const auto &h = c.homs[n - 1];
      if (h.source() != c.levels[n] || h.target() != c.levels[n - 1]) {
        lc.problems.push_back("phi_" + std::to_string(n) +
                              " does not connect levels " + std::to_string(n) +
                              " and " + std::to_string(n - 1));
      } else {
        lc.hom = h.flags();
        std::string tag = "phi_" + std::to_string(n);
        if (!lc.hom.is_hom) lc.problems.push_back(tag + " is not a homomorphism");
        else if (!lc.hom.edge_surjective)
          lc.problems.push_back(tag + " is not edge-surjective");
        if (lc.hom.is_hom && !lc.hom.plus_directional)
          lc.problems.push_back(tag + " is not +directional");
      }
      r.all_covers = r.all_covers && lc.hom.is_cover();
      r.bidirectional = r.bidirectional && lc.hom.bidirectional;
    }
    for (const auto &p : lc.problems)
      r.problems.push_back("level " + std::to_string(n) + ": " + p);
    r.levels.push_back(std::move(lc));
  }
  if (c.homs.size() != c.depth()) r.all_covers = false;
  return r;
}

std::string CoveringReport::to_text() const {
  std::ostringstream os;
  for (const auto &lc : levels) {
    os << "level " << lc.level << " surjective=" << (lc.surjectivity.ok() ? "yes" : "no")
       << " irreducible=" << (lc.irreducible ? "yes" : "no");
    if (lc.level > 0)
      os << " cover=" << (lc.hom.is_cover() ? "yes" : "no")
         << " bidirectional=" << (lc.hom.bidirectional ? "yes" : "no");
    os << "\n";
  }
  for (const auto &p : problems) os << "problem: " << p << "\n";
  os << "cover_chain=" << (all_covers ? "yes" : "no")
     << " bidirectional=" << (bidirectional ? "true" : "false") << "\n";
  os << "CHAIN_TRANSITIVE " << (chain_transitive ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace zdchaos
