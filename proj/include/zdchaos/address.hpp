//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <compare>
#include <cstdint>
#include <mutex>
#include <optional>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "zdchaos/bigint.hpp"
#include "zdchaos/provider.hpp"

namespace zdchaos {

enum class AddressKind : std::uint8_t { kInF, kHub, kOnPath };

// A vertex of G_n described symbolically: a vertex of F_n, the hub v_{n,0},
// or position `index` on connector path 1 (hub -> F) or path 2 (F -> hub).
// Path endpoints are always rewritten to the hub or to the F vertex they
// coincide with, so two normalized addresses are equal exactly when they
// denote the same vertex. At level 0 every address is InF(0).
struct Address {
  std::size_t level = 0;
  AddressKind kind = AddressKind::kInF;
  int path = 0;  // 1 or 2 for kOnPath
  BigInt index;  // F vertex for kInF, path position for kOnPath

  static Address Hub(std::size_t level) { return {level, AddressKind::kHub, 0, 0}; }
  static Address InF(std::size_t level, BigInt v) {
    return {level, AddressKind::kInF, 0, std::move(v)};
  }
  static Address OnPath(std::size_t level, int path, BigInt j) {
    return {level, AddressKind::kOnPath, path, std::move(j)};
  }

  bool is_hub() const { return kind == AddressKind::kHub; }
  bool in_f() const { return kind == AddressKind::kInF; }

  friend bool operator==(const Address &, const Address &) = default;
  friend bool operator<(const Address &a, const Address &b) {
    return std::tie(a.level, a.kind, a.path, a.index) <
           std::tie(b.level, b.kind, b.path, b.index);
  }
};

struct PathLengths {
  BigInt l1, l2;
  friend bool operator==(const PathLengths &, const PathLengths &) = default;
};

// Deliberate corruptions used to prove that the checkers can fail.
enum class Sabotage {
  kNone,
  kSegmentOffByOne,      // the e_n segment of each p_1 image word grows by one
  kHubMisrouted,         // the hub maps to the last interior vertex of p_2
  kCoverWalkCollapsed,   // w_n positions all map to v_{n,1,n}
  kConstantDecode,       // every vertex maps to the hub
  kStepSkips,            // forward steps along a path advance by two
};

// The augmented tower G_1, G_2, ... over a base covering, described without
// materializing any graph. The covering maps are evaluated by locating a path
// position inside the concatenated image word
//
//   phi(p_{1,n+1}) = e_n (p_{1,n} w_n p_{2,n})^2 p_{1,n} (v_{n,1,n}, v_{n,1,n+1})
//   phi(p_{2,n+1}) = (v_{n,2,-(n+1)}, v_{n,2,-n}) p_{2,n} (p_{1,n} w_n p_{2,n})^2 e_n
//
// using the memoized segment lengths. Thread safe.
class ImplicitTower {
 public:
  explicit ImplicitTower(ProviderPtr base, BigInt l11 = 1, BigInt l21 = 1,
                         Sabotage sabotage = Sabotage::kNone);

  const LevelProvider &base() const { return *base_; }
  const ProviderPtr &base_ptr() const { return base_; }
  const BigInt &l11() const { return l11_; }
  const BigInt &l21() const { return l21_; }
  Sabotage sabotage() const { return sabotage_; }
  ImplicitTower with_sabotage(Sabotage s) const {
    return ImplicitTower(base_, l11_, l21_, s);
  }

  // (l_{1,n}, l_{2,n}) for n >= 1.
  PathLengths path_lengths(std::size_t n) const;
  BigInt l1(std::size_t n) const { return path_lengths(n).l1; }
  BigInt l2(std::size_t n) const { return path_lengths(n).l2; }
  BigInt cover_walk_length(std::size_t n) const;
  // l_{1,n} + l(w_n) + l_{2,n}: the length of one p_1 w p_2 group.
  BigInt group_length(std::size_t n) const;

  Address normalize(const Address &a) const;
  // phi_{n+1}(a) for a at level n+1 >= 1.
  Address decode_step(const Address &a) const;
  // phi_{level(a), target}(a).
  Address decode(const Address &a, std::size_t target) const;
  // Out-neighbours (dir = +1) or in-neighbours (dir = -1) in G_n, sorted.
  std::vector<Address> step(const Address &a, int dir) const;

  // |V(G_n)| and, for small levels, every vertex.
  BigInt vertex_count(std::size_t n) const;
  std::vector<Address> all_vertices(std::size_t n) const;

  // Vertex labels: "H", "p1:<j>", "p2:<j>", "F:<name>".
  std::string label(const Address &a) const;
  std::optional<Address> parse_label(std::size_t level,
                                     const std::string &label) const;

  // Index interval [lo, hi] of the mid segment q_m of p_{1,m} that maps onto
  // p_{1,n} position by position. hi - lo = l_{1,n}.
  std::pair<BigInt, BigInt> q_interval(std::size_t m, std::size_t n) const;

  // Offsets in p_{1,n+1} of the three p_{1,n} occurrences of its image word.
  std::vector<BigInt> p1_occurrences(std::size_t n) const;

  // Deepest level whose lengths may be computed; deeper requests throw
  // DepthExceeded.
  static constexpr std::size_t kMaxLevel = 1u << 20;

 private:
  struct Lengths {
    BigInt l1, l2, lw;
  };
  const Lengths &lengths(std::size_t n) const;
  Address decode_group(std::size_t n, const BigInt &s, const Lengths &L) const;

  ProviderPtr base_;
  BigInt l11_, l21_;
  Sabotage sabotage_;
  // Shared memo; entries are immutable once appended.
  std::shared_ptr<std::mutex> mu_;
  std::shared_ptr<std::vector<std::unique_ptr<Lengths>>> memo_;
};

// Levels 0..depth of a point of the inverse limit: entries[k] is its
// coordinate in G_k and entries[k] = phi_{k+1}(entries[k+1]).
struct ThreadPrefix {
  std::vector<Address> entries;
  std::size_t depth() const { return entries.size() - 1; }
  friend bool operator==(const ThreadPrefix &, const ThreadPrefix &) = default;
};

// Prefix of depth level(top) obtained by decoding `top` all the way down.
ThreadPrefix thread_through(const ImplicitTower &t, const Address &top);
// True when consecutive entries are compatible.
bool is_compatible(const ImplicitTower &t, const ThreadPrefix &p);

// Depth-(n-k) prefix of f^k(x) for every x extending `p`. Each step maps
// coordinate j+1 forward and pushes it down one level, which is well defined
// because the covering maps are +directional.
ThreadPrefix push_forward(const ImplicitTower &t, const ThreadPrefix &p,
                          std::size_t steps);

enum class ScheduleMode { kStrict, kRelaxed };

struct ScheduleEntry {
  BigInt n, m;
  BigInt l1_n;  // l_{1,n_k}
};

// Strict: m_k is the smallest m > n_k + l_{1,n_k}, n_{k+1} = m_k + 1.
// Relaxed: the first stage as in strict mode, then m_{k+1} = m_k + 2 with
// n_{k+1} = m_k + 1, which keeps every level small enough to materialize.
std::vector<ScheduleEntry> schedule(const ImplicitTower &t, std::size_t n0,
                                    std::size_t kmax, ScheduleMode mode);

std::string to_string(ScheduleMode m);

}  // namespace zdchaos
