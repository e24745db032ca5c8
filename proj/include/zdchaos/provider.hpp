//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zdchaos/anchors.hpp"
#include "zdchaos/bigint.hpp"
#include "zdchaos/covering.hpp"

namespace zdchaos {

// Raised when a question needs a level the base covering cannot describe.
class DepthExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Capability view of the base covering F, level by level. Vertices of F_n are
// numbered 0..vertex_count(n)-1 in name order, so an explicit graph built from
// a provider agrees with it index for index. Level 0 is the singleton.
//
// Implementations are immutable or internally synchronized.
class LevelProvider {
 public:
  virtual ~LevelProvider() = default;

  virtual std::string name() const = 0;
  // nullopt: every level exists.
  virtual std::optional<std::size_t> depth() const = 0;
  virtual bool bidirectional() const = 0;

  virtual BigInt vertex_count(std::size_t n) const = 0;
  virtual std::string vertex_name(std::size_t n, const BigInt &v) const = 0;
  virtual std::optional<BigInt> vertex_by_name(std::size_t n,
                                               const std::string &name) const = 0;
  // phi^F_n : F_n -> F_{n-1}, n >= 1.
  virtual BigInt map_down(std::size_t n, const BigInt &v) const = 0;
  virtual std::vector<BigInt> successors(std::size_t n, const BigInt &v) const = 0;
  virtual std::vector<BigInt> predecessors(std::size_t n, const BigInt &v) const = 0;

  // v_{n,1,i} for 0 <= i <= n+1 and v_{n,2,-i} for 0 <= i <= n+1.
  virtual BigInt forward_anchor(std::size_t n, std::size_t i) const = 0;
  virtual BigInt backward_anchor(std::size_t n, std::size_t i) const = 0;

  // The edge-covering walk w_n from v_{n,1,n} to v_{n,2,-n}.
  virtual BigInt cover_walk_length(std::size_t n) const = 0;
  virtual BigInt cover_walk_at(std::size_t n, const BigInt &j) const = 0;

  void require_level(std::size_t n) const {
    if (auto d = depth(); d && n > *d)
      throw DepthExceeded("provider depth exceeded: level " + std::to_string(n) +
                          " requested, base covering has " + std::to_string(*d));
  }
};

using ProviderPtr = std::shared_ptr<const LevelProvider>;

// F_n = ({a}, {(a,a)}) at every level.
ProviderPtr make_fixed_point_provider();

// F_n is the 2^n-cycle i -> i+1, covered by reduction mod 2^{n-1}. Vertices
// are named by n-bit binary strings so name order is numeric order.
ProviderPtr make_odometer_provider();

// Generator by name: "fixed-point" or "odometer"; nullptr otherwise.
ProviderPtr make_generator(const std::string &name);

// Backed by explicit graphs. Cover walks come from edge_covering_walk and are
// computed on first use.
class ExplicitProvider final : public LevelProvider {
 public:
  ExplicitProvider(CoveringSequence f, AnchorData anchors);

  const CoveringSequence &covering() const { return f_; }
  const AnchorData &anchors() const { return anchors_; }

  std::string name() const override { return f_.name; }
  std::optional<std::size_t> depth() const override { return anchors_.depth(); }
  bool bidirectional() const override { return bidirectional_; }
  BigInt vertex_count(std::size_t n) const override;
  std::string vertex_name(std::size_t n, const BigInt &v) const override;
  std::optional<BigInt> vertex_by_name(std::size_t n,
                                       const std::string &name) const override;
  BigInt map_down(std::size_t n, const BigInt &v) const override;
  std::vector<BigInt> successors(std::size_t n, const BigInt &v) const override;
  std::vector<BigInt> predecessors(std::size_t n, const BigInt &v) const override;
  BigInt forward_anchor(std::size_t n, std::size_t i) const override;
  BigInt backward_anchor(std::size_t n, std::size_t i) const override;
  BigInt cover_walk_length(std::size_t n) const override;
  BigInt cover_walk_at(std::size_t n, const BigInt &j) const override;

  const Walk &cover_walk(std::size_t n) const;

 private:
  VertexIndex vertex(std::size_t n, const BigInt &v) const;

  CoveringSequence f_;
  AnchorData anchors_;
  bool bidirectional_ = false;
  mutable std::mutex mu_;
  mutable std::vector<std::unique_ptr<Walk>> walks_;
};

// Explicit copy of levels 0..depth of a provider.
CoveringSequence materialize(const LevelProvider &p, std::size_t depth);
// Anchor rows of a provider for levels 0..depth, as vertex indices.
AnchorData anchors_of(const LevelProvider &p, std::size_t depth);

}  // namespace zdchaos
