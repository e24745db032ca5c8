//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "zdchaos/provider.hpp"

#include <algorithm>

namespace zdchaos {

namespace {

class FixedPointProvider final : public LevelProvider {
 public:
  std::string name() const override { return "fixed-point"; }
  std::optional<std::size_t> depth() const override { return std::nullopt; }
  bool bidirectional() const override { return true; }
  BigInt vertex_count(std::size_t) const override { return 1; }
  std::string vertex_name(std::size_t n, const BigInt &v) const override {
    if (v != 0) throw std::out_of_range("fixed point has one vertex per level");
    return n == 0 ? "v0" : "a";
  }
  std::optional<BigInt> vertex_by_name(std::size_t n,
                                       const std::string &s) const override {
    if (s == (n == 0 ? "v0" : "a")) return BigInt(0);
    return std::nullopt;
  }
  BigInt map_down(std::size_t, const BigInt &) const override { return 0; }
  std::vector<BigInt> successors(std::size_t, const BigInt &) const override {
    return {0};
  }
  std::vector<BigInt> predecessors(std::size_t, const BigInt &) const override {
    return {0};
  }
  BigInt forward_anchor(std::size_t, std::size_t) const override { return 0; }
  BigInt backward_anchor(std::size_t, std::size_t) const override { return 0; }
  BigInt cover_walk_length(std::size_t) const override { return 1; }
  BigInt cover_walk_at(std::size_t, const BigInt &j) const override {
    if (j < 0 || j > 1) throw std::out_of_range("cover walk position");
    return 0;
  }
};

class OdometerProvider final : public LevelProvider {
 public:
  std::string name() const override { return "odometer"; }
  std::optional<std::size_t> depth() const override { return std::nullopt; }
  bool bidirectional() const override { return true; }

  BigInt vertex_count(std::size_t n) const override { return modulus(n); }

  std::string vertex_name(std::size_t n, const BigInt &v) const override {
    check(n, v);
    if (n == 0) return "v0";
    std::string s(n, '0');
    BigInt x = v;
    for (std::size_t i = n; i-- > 0; x >>= 1)
      if (bit_test(x, 0)) s[i] = '1';
    return s;
  }

  std::optional<BigInt> vertex_by_name(std::size_t n,
                                       const std::string &s) const override {
    if (n == 0) return s == "v0" ? std::optional<BigInt>(0) : std::nullopt;
    if (s.size() != n) return std::nullopt;
    BigInt v = 0;
    for (char c : s) {
      if (c != '0' && c != '1') return std::nullopt;
      v = (v << 1) | (c - '0');
    }
    return v;
  }

  BigInt map_down(std::size_t n, const BigInt &v) const override {
    check(n, v);
    return n <= 1 ? BigInt(0) : BigInt(v % modulus(n - 1));
  }
  std::vector<BigInt> successors(std::size_t n, const BigInt &v) const override {
    check(n, v);
    return {floor_mod(v + 1, modulus(n))};
  }
  std::vector<BigInt> predecessors(std::size_t n,
                                   const BigInt &v) const override {
    check(n, v);
    return {floor_mod(v - 1, modulus(n))};
  }
  BigInt forward_anchor(std::size_t n, std::size_t i) const override {
    return floor_mod(BigInt(i), modulus(n));
  }
  BigInt backward_anchor(std::size_t n, std::size_t i) const override {
    return floor_mod(-BigInt(i), modulus(n));
  }
  // Walking once around the cycle from u and then on to v is exactly what
  // edge_covering_walk produces for a cycle.
  BigInt cover_walk_length(std::size_t n) const override {
    const BigInt N = modulus(n);
    return N + floor_mod(walk_end(n) - walk_start(n), N);
  }
  BigInt cover_walk_at(std::size_t n, const BigInt &j) const override {
    if (j < 0 || j > cover_walk_length(n))
      throw std::out_of_range("cover walk position");
    return floor_mod(walk_start(n) + j, modulus(n));
  }

 private:
  static BigInt modulus(std::size_t n) { return BigInt(1) << n; }
  BigInt walk_start(std::size_t n) const { return forward_anchor(n, n); }
  BigInt walk_end(std::size_t n) const { return backward_anchor(n, n); }
  static void check(std::size_t n, const BigInt &v) {
    if (v < 0 || v >= modulus(n))
      throw std::out_of_range("odometer vertex out of range");
  }
};

}  // namespace

ProviderPtr make_fixed_point_provider() {
  return std::make_shared<FixedPointProvider>();
}

ProviderPtr make_odometer_provider() {
  return std::make_shared<OdometerProvider>();
}

ProviderPtr make_generator(const std::string &name) {
  if (name == "fixed-point") return make_fixed_point_provider();
  if (name == "odometer") return make_odometer_provider();
  return nullptr;
}

ExplicitProvider::ExplicitProvider(CoveringSequence f, AnchorData anchors)
    : f_(std::move(f)), anchors_(std::move(anchors)) {
  if (auto bad = check_anchor_data(f_, anchors_); !bad.empty())
    throw std::invalid_argument("incoherent anchors: " + bad.front());
  bidirectional_ = true;
  for (std::size_t n = 1; n <= anchors_.depth(); ++n)
    bidirectional_ = bidirectional_ && f_.hom_into(n).flags().bidirectional;
  walks_.resize(anchors_.depth() + 1);
}

VertexIndex ExplicitProvider::vertex(std::size_t n, const BigInt &v) const {
  require_level(n);
  if (v < 0 || v >= f_.levels[n]->num_vertices())
    throw std::out_of_range("vertex index out of range at level " +
                            std::to_string(n));
  return static_cast<VertexIndex>(v);
}

BigInt ExplicitProvider::vertex_count(std::size_t n) const {
  require_level(n);
  return f_.levels[n]->num_vertices();
}

std::string ExplicitProvider::vertex_name(std::size_t n, const BigInt &v) const {
  return f_.levels[n]->name(vertex(n, v));
}

std::optional<BigInt> ExplicitProvider::vertex_by_name(
    std::size_t n, const std::string &name) const {
  require_level(n);
  if (auto v = f_.levels[n]->find(name)) return BigInt(*v);
  return std::nullopt;
}

BigInt ExplicitProvider::map_down(std::size_t n, const BigInt &v) const {
  return f_.hom_into(n)(vertex(n, v));
}

std::vector<BigInt> ExplicitProvider::successors(std::size_t n,
                                                 const BigInt &v) const {
  std::vector<BigInt> out;
  for (VertexIndex w : f_.levels[n]->out(vertex(n, v))) out.emplace_back(w);
  return out;
}

std::vector<BigInt> ExplicitProvider::predecessors(std::size_t n,
                                                   const BigInt &v) const {
  std::vector<BigInt> out;
  for (VertexIndex w : f_.levels[n]->in(vertex(n, v))) out.emplace_back(w);
  return out;
}

BigInt ExplicitProvider::forward_anchor(std::size_t n, std::size_t i) const {
  require_level(n);
  return anchors_.forward.at(n).at(i);
}

BigInt ExplicitProvider::backward_anchor(std::size_t n, std::size_t i) const {
  require_level(n);
  return anchors_.backward.at(n).at(i);
}

const Walk &ExplicitProvider::cover_walk(std::size_t n) const {
  require_level(n);
  std::lock_guard<std::mutex> lock(mu_);
  if (!walks_[n])
    walks_[n] = std::make_unique<Walk>(edge_covering_walk(
        f_.levels[n], anchors_.forward[n][n], anchors_.backward[n][n]));
  return *walks_[n];
}

BigInt ExplicitProvider::cover_walk_length(std::size_t n) const {
  return cover_walk(n).length();
}

BigInt ExplicitProvider::cover_walk_at(std::size_t n, const BigInt &j) const {
  const Walk &w = cover_walk(n);
  if (j < 0 || j > w.length()) throw std::out_of_range("cover walk position");
  return w.at(static_cast<std::size_t>(j));
}

CoveringSequence materialize(const LevelProvider &p, std::size_t depth) {
  p.require_level(depth);
  CoveringSequence c;
  c.name = p.name();
  for (std::size_t n = 0; n <= depth; ++n) {
    const auto count = static_cast<std::size_t>(to_int64(p.vertex_count(n)));
    std::vector<std::string> names;
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < count; ++v) {
      names.push_back(p.vertex_name(n, v));
      for (const auto &w : p.successors(n, v))
        edges.emplace_back(static_cast<VertexIndex>(v),
                           static_cast<VertexIndex>(w));
    }
    if (!std::is_sorted(names.begin(), names.end()))
      throw std::logic_error("provider vertex names are not in sorted order");
    c.levels.push_back(std::make_shared<const DirectedGraph>(
        DirectedGraph::FromSortedNames(std::move(names), std::move(edges))));
    if (n >= 1) {
      std::vector<VertexIndex> map(count);
      for (std::size_t v = 0; v < count; ++v)
        map[v] = static_cast<VertexIndex>(p.map_down(n, v));
      c.homs.emplace_back(c.levels[n], c.levels[n - 1], std::move(map));
    }
  }
  return c;
}

AnchorData anchors_of(const LevelProvider &p, std::size_t depth) {
  AnchorData a;
  a.forward.resize(depth + 1);
  a.backward.resize(depth + 1);
  a.forward[0].assign(2, 0);
  a.backward[0].assign(2, 0);
  for (std::size_t n = 1; n <= depth; ++n)
    for (std::size_t i = 0; i < n + 2; ++i) {
      a.forward[n].push_back(static_cast<VertexIndex>(p.forward_anchor(n, i)));
      a.backward[n].push_back(static_cast<VertexIndex>(p.backward_anchor(n, i)));
    }
  return a;
}

}  // namespace zdchaos
