//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "zdchaos/embed.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <string>

namespace zdchaos {

namespace {

std::string f_name(const CoveringSequence &f, std::size_t n, VertexIndex v) {
  return "F:" + f.levels[n]->name(v);
}

}  // namespace

std::optional<VertexIndex> EmbeddingLevel::vertex_of(const Address &a) const {
  auto it = std::find(address.begin(), address.end(), a);
  if (it == address.end()) return std::nullopt;
  return static_cast<VertexIndex>(it - address.begin());
}

CoveringSequence Embedding::as_covering(std::string name) const {
  CoveringSequence c;
  c.name = std::move(name);
  for (const auto &lv : levels) c.levels.push_back(lv.graph);
  c.homs = homs;
  return c;
}

EmbeddingLevel base_level(const CoveringSequence &f) {
  EmbeddingLevel lv;
  lv.n = 0;
  lv.graph = std::make_shared<const DirectedGraph>(
      DirectedGraph::Singleton(f_name(f, 0, 0)));
  lv.address = {Address::InF(0, 0)};
  lv.f_vertex = {0};
  lv.hub = 0;
  return lv;
}

std::pair<EmbeddingLevel, GraphHom> build_level(const EmbeddingLevel &prev,
                                                const CoveringSequence &f,
                                                const AnchorData &anchors,
                                                std::size_t l11,
                                                std::size_t l21) {
  const std::size_t n = prev.n;
  const std::size_t N = n + 1;
  if (N > f.depth() || N > anchors.depth())
    throw std::invalid_argument("build_level: base covering or anchors end at level " +
                                std::to_string(std::min(f.depth(), anchors.depth())));
  if (l11 < 1 || l21 < 1)
    throw std::invalid_argument("build_level: initial path lengths must be >= 1");
  const GraphPtr &fN = f.levels[N];
  const VertexIndex v1 = anchors.forward[N][N];
  const VertexIndex v2 = anchors.backward[N][N];

  // Image words of the new connector paths, as walks in G_n.
  std::optional<Walk> img1, img2;
  std::size_t l1 = l11, l2 = l21;
  if (n >= 1) {
    const GraphPtr &g = prev.graph;
    auto F = [&](VertexIndex v) { return prev.f_vertex.at(v); };
    Walk loop(g, {prev.hub, prev.hub});
    Walk group = concat(concat(*prev.p1, *prev.w), *prev.p2);
    Walk exit(g, {F(anchors.forward[n][n]), F(anchors.forward[n][n + 1])});
    Walk entry(g, {F(anchors.backward[n][n + 1]), F(anchors.backward[n][n])});
    img1 = concat(concat(concat(concat(loop, group), group), *prev.p1), exit);
    img2 = concat(concat(concat(concat(entry, *prev.p2), group), group), loop);
    l1 = img1->length();
    l2 = img2->length();
  }

  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  names.reserve(l1 + l2 + fN->num_vertices());
  names.push_back("H");
  auto p1_name = [&](std::size_t j) {
    return j == 0 ? std::string("H")
                  : j == l1 ? f_name(f, N, v1) : "p1:" + std::to_string(j);
  };
  auto p2_name = [&](std::size_t j) {
    return j == 0 ? f_name(f, N, v2)
                  : j == l2 ? std::string("H") : "p2:" + std::to_string(j);
  };
  for (std::size_t j = 1; j < l1; ++j) names.push_back(p1_name(j));
  for (std::size_t j = 1; j < l2; ++j) names.push_back(p2_name(j));
  for (VertexIndex v = 0; v < fN->num_vertices(); ++v)
    names.push_back(f_name(f, N, v));
  edges.emplace_back("H", "H");
  for (std::size_t j = 0; j < l1; ++j) edges.emplace_back(p1_name(j), p1_name(j + 1));
  for (std::size_t j = 0; j < l2; ++j) edges.emplace_back(p2_name(j), p2_name(j + 1));
  for (const auto &[u, v] : fN->edges())
    edges.emplace_back(f_name(f, N, u), f_name(f, N, v));

  EmbeddingLevel lv;
  lv.n = N;
  lv.l1 = l1;
  lv.l2 = l2;
  lv.graph = std::make_shared<const DirectedGraph>(std::move(names), edges);
  const DirectedGraph &g = *lv.graph;
  lv.address.resize(g.num_vertices());
  lv.hub = g.index("H");
  lv.address[lv.hub] = Address::Hub(N);
  for (std::size_t j = 1; j < l1; ++j)
    lv.address[g.index(p1_name(j))] = Address::OnPath(N, 1, j);
  for (std::size_t j = 1; j < l2; ++j)
    lv.address[g.index(p2_name(j))] = Address::OnPath(N, 2, j);
  lv.f_vertex.resize(fN->num_vertices());
  for (VertexIndex v = 0; v < fN->num_vertices(); ++v) {
    lv.f_vertex[v] = g.index(f_name(f, N, v));
    lv.address[lv.f_vertex[v]] = Address::InF(N, v);
  }
  auto walk_of = [&](auto name_at, std::size_t len) {
    std::vector<VertexIndex> seq;
    for (std::size_t j = 0; j <= len; ++j) seq.push_back(g.index(name_at(j)));
    return Walk(lv.graph, std::move(seq));
  };
  lv.p1 = walk_of(p1_name, l1);
  lv.p2 = walk_of(p2_name, l2);
  {
    Walk wf = edge_covering_walk(fN, v1, v2);
    std::vector<VertexIndex> seq;
    for (VertexIndex v : wf.vertices()) seq.push_back(lv.f_vertex[v]);
    lv.w = Walk(lv.graph, std::move(seq));
  }

  std::vector<VertexIndex> map(g.num_vertices());
  for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
    const Address &a = lv.address[v];
    if (n == 0) {
      map[v] = 0;
    } else if (a.is_hub()) {
      map[v] = prev.hub;
    } else if (a.in_f()) {
      map[v] = prev.f_vertex.at(f.hom_into(N)(static_cast<VertexIndex>(a.index)));
    } else {
      const auto j = static_cast<std::size_t>(a.index);
      map[v] = a.path == 1 ? img1->at(j) : img2->at(j);
    }
  }
  GraphHom hom(lv.graph, prev.graph, std::move(map));
  return {std::move(lv), std::move(hom)};
}

Embedding build_embedding(const CoveringSequence &f, std::size_t max_level,
                          const EmbeddingOptions &options) {
  if (max_level < 1) throw std::invalid_argument("build_embedding: max_level >= 1");
  if (max_level > f.depth())
    throw std::invalid_argument("build_embedding: the base covering has only " +
                                std::to_string(f.depth()) + " levels");
  Embedding e;
  e.base = std::make_shared<const CoveringSequence>(f);
  e.anchors = options.anchors ? *options.anchors
                              : select_anchor_threads(f, max_level);
  if (auto bad = check_anchor_data(f, e.anchors); !bad.empty())
    throw std::invalid_argument("build_embedding: " + bad.front());
  e.l11 = options.l11;
  e.l21 = options.l21;
  e.levels.push_back(base_level(f));
  for (std::size_t N = 1; N <= max_level; ++N) {
    const EmbeddingLevel &prev = e.levels.back();
    std::size_t l1 = options.l11, l2 = options.l21;
    if (N >= 2) {
      const std::size_t lw = prev.w->length();
      l1 = 2 + 3 * prev.l1 + 2 * (lw + prev.l2);
      l2 = 2 + 3 * prev.l2 + 2 * (prev.l1 + lw);
    }
    const std::size_t predicted = l1 + l2 - 1 + f.levels[N]->num_vertices();
    if (predicted > options.vertex_budget)
      throw BudgetExceeded("level " + std::to_string(N) + " would have " +
                           std::to_string(predicted) +
                           " vertices; budget is " +
                           std::to_string(options.vertex_budget));
    auto [lv, hom] = build_level(prev, f, e.anchors, options.l11, options.l21);
    e.levels.push_back(std::move(lv));
    e.homs.push_back(std::move(hom));
  }
  return e;
}

namespace {

bool uniform_image(const GraphHom &h, std::span<const VertexIndex> nbrs) {
  return std::all_of(nbrs.begin(), nbrs.end(),
                     [&](VertexIndex w) { return h(w) == h(nbrs[0]); });
}

}  // namespace

WitnessReport verify_construction(const Embedding &e) {
  auto t0 = std::chrono::steady_clock::now();
  WitnessReport r;
  r.claim = "well-defined";
  r.level = e.max_level();
  r.mode = ScheduleMode::kRelaxed;
  r.pass = true;
  bool base_bidirectional = true;
  for (std::size_t n = 1; n <= e.max_level(); ++n)
    base_bidirectional =
        base_bidirectional && e.base->hom_into(n).flags().bidirectional;
  r.add("base_bidirectional", base_bidirectional ? 1 : 0);

  for (std::size_t N = 1; N <= e.max_level(); ++N) {
    const auto &lv = e.levels[N];
    const GraphHom &h = e.hom_into(N);
    const HomFlags fl = h.recompute_flags();
    const DirectedGraph &g = *lv.graph;
    const std::string tag = std::to_string(N);
    r.add("cover." + tag, fl.is_cover() ? 1 : 0);
    r.add("bidirectional." + tag, fl.bidirectional ? 1 : 0);
    bool ok = fl.is_cover() && (!base_bidirectional || fl.bidirectional);

    std::set<VertexIndex> failing;
    for (const auto &[u, v] : h.non_edges()) {
      failing.insert(u);
      failing.insert(v);
    }
    for (VertexIndex v : h.plus_directional_failures()) failing.insert(v);
    if (base_bidirectional)
      for (VertexIndex v : h.minus_directional_failures()) failing.insert(v);

    const VertexIndex critical[] = {
        lv.hub, lv.f_vertex[e.anchors.forward[N][N]],
        lv.f_vertex[e.anchors.backward[N][N]]};
    const char *role[] = {"hub", "v1", "v2"};
    for (int i = 0; i < 3; ++i) {
      const VertexIndex c = critical[i];
      bool local = uniform_image(h, g.out(c)) &&
                   (!base_bidirectional || uniform_image(h, g.in(c)));
      for (VertexIndex w : g.out(c))
        local = local && h.target()->has_edge(h(c), h(w));
      r.add("critical." + tag + "." + role[i], local ? 1 : 0);
      if (!local) failing.insert(c);
      r.nodes_visited += g.out(c).size() + g.in(c).size();
    }
    if (N >= 2) {
      // Loop, first edge of p1 and last edge of p2 all land on e_{N-1}.
      const auto &prev = e.levels[N - 1];
      const VertexIndex H = lv.hub;
      const VertexIndex after = lv.p1->at(1);
      const VertexIndex before = lv.p2->at(lv.l2 - 1);
      bool hub_ok = h(H) == prev.hub && h(after) == prev.hub &&
                    h(before) == prev.hub;
      r.add("hub_edges_to_loop." + tag, hub_ok ? 1 : 0);
      if (!hub_ok) failing.insert(H);
    }
    for (VertexIndex v : failing) {
      r.add("failing." + tag + "." + g.name(v), 1);
      r.notes.push_back("level " + tag + ": local condition fails at " +
                        g.name(v));
    }
    ok = ok && failing.empty();
    r.pass = r.pass && ok;
    r.nodes_visited += g.num_vertices() + g.num_edges();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

Embedding sabotage_flip_path_image(const Embedding &e, std::size_t level) {
  Embedding s = e;
  const auto &lv = s.levels.at(level);
  if (lv.l1 < 2) throw std::invalid_argument("p1 has no interior vertex");
  const GraphHom &h = s.hom_into(level);
  const auto &below = s.levels[level - 1];
  const DirectedGraph &gb = *below.graph;
  std::vector<VertexIndex> map = h.map();
  // Walk outward from the midpoint until some replacement image breaks an
  // incident edge; on a complete level below no such vertex exists.
  std::optional<std::pair<VertexIndex, VertexIndex>> pick;
  const std::size_t mid = lv.l1 / 2;
  for (std::size_t d = 0; d < lv.l1 && !pick; ++d)
    for (std::size_t j : {mid + d, mid - std::min(d, mid)}) {
      if (j < 1 || j >= lv.l1 || pick) continue;
      const VertexIndex prev = map[lv.p1->at(j - 1)], next = map[lv.p1->at(j + 1)];
      for (VertexIndex u = 0; u < gb.num_vertices() && !pick; ++u)
        if (u != map[lv.p1->at(j)] && (!gb.has_edge(prev, u) || !gb.has_edge(u, next)))
          pick = std::pair{lv.p1->at(j), u};
    }
  if (!pick) throw std::invalid_argument("every relabelling of p1 stays a homomorphism");
  map[pick->first] = pick->second;
  s.homs[level - 1] = GraphHom(h.source(), h.target(), std::move(map));
  return s;
}

Embedding sabotage_extra_path_edge(const Embedding &e, std::size_t level) {
  Embedding s = e;
  auto &lv = s.levels.at(level);
  const GraphHom &h = s.hom_into(level);
  std::optional<VertexIndex> target;
  for (std::size_t j = 2; j < lv.l1 && !target; ++j)
    if (h(lv.p1->at(j - 1)) != h(lv.hub)) target = lv.p1->at(j);
  if (!target) throw std::invalid_argument("no path vertex with a distinct image");
  const DirectedGraph &g = *lv.graph;
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(lv.hub, *target);
  auto graph = std::make_shared<const DirectedGraph>(
      DirectedGraph::FromSortedNames(g.names(), std::move(edges)));
  lv.graph = graph;
  lv.p1 = Walk(graph, lv.p1->vertices());
  lv.p2 = Walk(graph, lv.p2->vertices());
  lv.w = Walk(graph, lv.w->vertices());
  s.homs[level - 1] = GraphHom(graph, h.target(), h.map());
  if (level < s.max_level()) {
    const GraphHom &up = s.hom_into(level + 1);
    s.homs[level] = GraphHom(up.source(), graph, up.map());
  }
  return s;
}

}  // namespace zdchaos
