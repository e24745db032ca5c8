//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "zdchaos/graph.hpp"

using namespace zdchaos;

namespace {

GraphPtr make(std::vector<std::string> names,
              std::vector<std::pair<std::string, std::string>> edges) {
  return std::make_shared<const DirectedGraph>(std::move(names), edges);
}

GraphPtr cycle(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(names[i], names[(i + 1) % n]);
  return make(names, edges);
}

Walk walk(const GraphPtr &g, std::vector<std::string> seq) {
  std::vector<VertexIndex> v;
  for (auto &s : seq) v.push_back(g->index(s));
  return Walk(g, v);
}

// Transitive closure by repeated squaring of the adjacency relation.
bool reachability_oracle(const DirectedGraph &g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) r[u][v] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!r[i][j]) return false;
  return true;
}

}  // namespace

TEST(DirectedGraph, NamesAreSortedAndEdgesDeduplicated) {
  auto g = make({"b", "a", "c"}, {{"a", "b"}, {"a", "b"}, {"c", "a"}, {"b", "c"}});
  EXPECT_EQ(g->names(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(g->num_edges(), 3u);
  EXPECT_TRUE(g->has_edge(g->index("a"), g->index("b")));
  EXPECT_FALSE(g->has_edge(g->index("b"), g->index("a")));
  EXPECT_THROW(make({"a", "a"}, {}), std::invalid_argument);
  EXPECT_THROW(make({"a"}, {{"a", "z"}}), std::exception);
}

TEST(DirectedGraph, SurjectiveRelation) {
  EXPECT_TRUE(DirectedGraph::Singleton("a").validate_surjective().ok());
  auto bad = make({"a", "b"}, {{"a", "b"}}) -> validate_surjective();
  ASSERT_EQ(bad.violations.size(), 2u);
  EXPECT_TRUE(cycle(4)->validate_surjective().ok());
}

TEST(DirectedGraph, Irreducibility) {
  EXPECT_TRUE(DirectedGraph::Singleton("a").is_irreducible());
  EXPECT_FALSE(make({"a", "b"}, {{"a", "a"}, {"b", "b"}})->is_irreducible());
  EXPECT_TRUE(cycle(4)->is_irreducible());
  EXPECT_THROW(make({"a", "b"}, {{"a", "b"}})->is_irreducible(), std::invalid_argument);
}

TEST(DirectedGraph, IrreducibilityMatchesReachabilityOracle) {
  std::mt19937 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rng() % 3 == 0) edges.emplace_back(names[i], names[j]);
    auto g = make(names, edges);
    if (!g->validate_surjective().ok()) continue;
    ++checked;
    EXPECT_EQ(g->is_irreducible(), reachability_oracle(*g));
  }
  EXPECT_GT(checked, 500);
}

TEST(Walk, ConcatAndSubwalk) {
  auto loop = DirectedGraph::Singleton("a");
  auto g1 = std::make_shared<const DirectedGraph>(loop);
  auto aa = walk(g1, {"a", "a"});
  EXPECT_EQ(concat(aa, aa).length(), 2u);

  auto g = make({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  auto ab = walk(g, {"a", "b"}), ba = walk(g, {"b", "a"});
  auto aba = concat(ab, ba);
  EXPECT_EQ(aba, walk(g, {"a", "b", "a"}));
  EXPECT_THROW(concat(ab, ab), std::invalid_argument);
  EXPECT_EQ(subwalk(aba, 1, 2), ba);
  EXPECT_EQ(subwalk(aba, 0, aba.length()), aba);
  EXPECT_EQ(subwalk(aba, 1, 1).length(), 0u);
  EXPECT_THROW(Walk(g, {g->index("a"), g->index("a")}), std::invalid_argument);

  auto c = cycle(5);
  std::vector<VertexIndex> s3, s5;
  for (int i = 0; i <= 3; ++i) s3.push_back(i % 5);
  for (int i = 3; i <= 8; ++i) s5.push_back(i % 5);
  EXPECT_EQ(concat(Walk(c, s3), Walk(c, s5)).length(), 8u);
}

TEST(Walk, ConcatIsAssociativeAndSubwalksCompose) {
  auto c = cycle(3);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t at = rng() % 3;
    auto next = [&](std::size_t len) {
      std::vector<VertexIndex> s{static_cast<VertexIndex>(at)};
      for (std::size_t i = 0; i < len; ++i) s.push_back(static_cast<VertexIndex>(at = (at + 1) % 3));
      return Walk(c, s);
    };
    Walk w1 = next(rng() % 4), w2 = next(rng() % 4), w3 = next(rng() % 4);
    EXPECT_EQ(concat(concat(w1, w2), w3), concat(w1, concat(w2, w3)));
    Walk w = concat(concat(w1, w2), w3);
    std::size_t a = rng() % (w.length() + 1), b = a + rng() % (w.length() - a + 1);
    Walk sub = subwalk(w, a, b);
    std::size_t cc = rng() % (sub.length() + 1), d = cc + rng() % (sub.length() - cc + 1);
    EXPECT_EQ(subwalk(sub, cc, d), subwalk(w, a + cc, a + d));
  }
}

TEST(Walk, PathFlag) {
  auto c = cycle(4);
  EXPECT_TRUE(Walk(c, {0, 1, 2}).is_path());
  EXPECT_FALSE(Walk(c, {0, 1, 2, 3, 0}).is_path());
}

TEST(EdgeCoveringWalk, SmallCases) {
  auto g1 = std::make_shared<const DirectedGraph>(DirectedGraph::Singleton("a"));
  EXPECT_EQ(edge_covering_walk(g1, 0, 0), walk(g1, {"a", "a"}));
  auto two = make({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  EXPECT_EQ(edge_covering_walk(two, 0, 0), walk(two, {"a", "b", "a"}));

  auto full = make({"a", "b"}, {{"a", "a"}, {"a", "b"}, {"b", "b"}, {"b", "a"}});
  Walk w = edge_covering_walk(full, full->index("a"), full->index("b"));
  EXPECT_EQ(w.front(), full->index("a"));
  EXPECT_EQ(w.back(), full->index("b"));
  EXPECT_EQ(w.edge_set(), full->edges());
  // Deterministic output of the sorted-edge greedy rule.
  EXPECT_EQ(w, walk(full, {"a", "a", "b", "a", "b", "b"}));
  EXPECT_EQ(edge_covering_walk(full, 0, 1), w);
}

TEST(EdgeCoveringWalk, CoversEveryEdgeOfRandomIrreducibleGraphs) {
  std::mt19937 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 300; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rng() % 3 == 0) edges.emplace_back(names[i], names[j]);
    auto g = make(names, edges);
    if (!g->validate_surjective().ok() || !g->is_irreducible()) continue;
    ++checked;
    VertexIndex u = rng() % n, v = rng() % n;
    Walk w = edge_covering_walk(g, u, v);
    EXPECT_EQ(w.front(), u);
    EXPECT_EQ(w.back(), v);
    EXPECT_EQ(w.edge_set(), g->edges());
  }
  EXPECT_GE(checked, 100);
}
