//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zdchaos/address.hpp"
#include "zdchaos/embed.hpp"
#include "zdchaos/witness.hpp"

namespace zdchaos {

// Points of the Cantor sets are represented by positions on p_{1,M}: the
// address OnPath(M, 1, pos). Shifting a point by t steps moves it to
// pos + t, which is exact while the shifted position stays on the path.
// A position on p_{1,m} is carried into p_{1,M}, M > m, through the chain of
// middle copies; embed_offset(t, m, M) is the offset of that copy.
BigInt embed_offset(const ImplicitTower &t, std::size_t m, std::size_t M);

// Level-n vertex of position `pos` on p_{1,M}.
Address decode_p1(const ImplicitTower &t, std::size_t M, const BigInt &pos,
                  std::size_t n);

using Interval = std::pair<BigInt, BigInt>;  // closed

// Stage-k approximation of C_N: intervals on p_{1,m(k)} (k and N are
// 1-based schedule stages).
struct CantorApprox {
  std::size_t N = 1, k = 1;
  std::size_t level = 0;  // m(k)
  std::vector<Interval> cylinders;
};

CantorApprox cantor_approx(const ImplicitTower &t,
                           const std::vector<ScheduleEntry> &sched,
                           std::size_t N, std::size_t k);

// True when every stage-(k+1) cylinder decodes position by position into a
// stage-k cylinder (endpoints and midpoints are checked).
bool refines(const ImplicitTower &t, const CantorApprox &fine,
             const CantorApprox &coarse);

WitnessReport verify_fixed_point_pattern(const ImplicitTower &t, std::size_t m,
                                         std::size_t n);

WitnessReport verify_property1(const ImplicitTower &t, std::size_t m,
                               std::size_t n, ScheduleMode mode);

WitnessReport verify_property2(const ImplicitTower &t, std::size_t m,
                               std::size_t n, ScheduleMode mode);

WitnessReport verify_triple_cover(const ImplicitTower &t,
                                  const std::vector<ScheduleEntry> &sched,
                                  std::size_t k, ScheduleMode mode);

WitnessReport verify_density(const ImplicitTower &t,
                             const std::vector<ScheduleEntry> &sched,
                             std::size_t k, ScheduleMode mode);

struct SampleOptions {
  std::size_t samples = 16;
  std::uint64_t seed = 0;  // extra random offsets only when samples exceed
                           // the deterministic endpoint/midpoint set
};

// Deterministic sample positions of a CantorApprox.
std::vector<BigInt> sample_points(const CantorApprox &c,
                                  const SampleOptions &options);

WitnessReport proximality_witness(const ImplicitTower &t,
                                  const std::vector<ScheduleEntry> &sched,
                                  std::size_t N, std::size_t k, std::size_t n,
                                  const SampleOptions &options, ScheduleMode mode);

WitnessReport recurrence_witness(const ImplicitTower &t,
                                 const std::vector<ScheduleEntry> &sched,
                                 std::size_t N, std::size_t k, std::size_t n,
                                 const SampleOptions &options, ScheduleMode mode);

// a and b are positions on p_{1,M}. horizon 0 selects 4 * l_{1,M}.
WitnessReport scrambled_pair_witness(const ImplicitTower &t, std::size_t M,
                                     const BigInt &a, const BigInt &b,
                                     std::size_t n, BigInt horizon,
                                     ScheduleMode mode);

WitnessReport verify_invariance(const ImplicitTower &t,
                                const std::vector<ScheduleEntry> &sched,
                                std::size_t N, std::size_t k, ScheduleMode mode);

WitnessReport verify_outside_bidirectional(const Embedding &e, std::size_t n);

// `a` is a position on the q window of p_{1,m(k)}; it is carried to
// p_{1,m(k+1)} before scanning.
WitnessReport transitivity_witness(const ImplicitTower &t,
                                   const std::vector<ScheduleEntry> &sched,
                                   std::size_t k, const BigInt &a,
                                   std::size_t n, ScheduleMode mode);

// Re-validates a pass report from its witnesses alone. Covers every claim
// produced from an ImplicitTower. Returns the reason on failure.
std::optional<std::string> replay(const ImplicitTower &t,
                                  const WitnessReport &r);

}  // namespace zdchaos
