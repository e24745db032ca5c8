//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "zdchaos/address.hpp"

using namespace zdchaos;

namespace {

ImplicitTower fixed_point() { return ImplicitTower(make_fixed_point_provider()); }
ImplicitTower odometer() { return ImplicitTower(make_odometer_provider()); }

std::set<Address> as_set(const std::vector<Address> &v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Lengths, FixedPointFrozenAndClosedForm) {
  auto t = fixed_point();
  const std::vector<int> expected{1, 9, 49, 249, 1249, 6249};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    EXPECT_EQ(t.l1(n), expected[n - 1]);
    EXPECT_EQ(t.l2(n), expected[n - 1]);
  }
  // Closed form 2*5^(n-1) - 1, checked far beyond the frozen table.
  for (std::size_t n = 1; n <= 60; ++n) {
    BigInt p = 1;
    for (std::size_t i = 1; i < n; ++i) p *= 5;
    EXPECT_EQ(t.l1(n), 2 * p - 1) << n;
  }
}

TEST(Lengths, OdometerFrozen) {
  auto t = odometer();
  const std::vector<int> expected{1, 11, 65, 347, 1785, 9035, 45409};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    EXPECT_EQ(t.l1(n), expected[n - 1]);
    EXPECT_EQ(t.l2(n), expected[n - 1]);
  }
}

TEST(Lengths, RecurrenceHoldsForUnequalStarts) {
  ImplicitTower t(make_odometer_provider(), 3, 5);
  for (std::size_t n = 1; n < 12; ++n) {
    auto a = t.path_lengths(n), b = t.path_lengths(n + 1);
    const BigInt lw = t.cover_walk_length(n);
    EXPECT_EQ(b.l1, 2 + 3 * a.l1 + 2 * (lw + a.l2));
    EXPECT_EQ(b.l2, 2 + 3 * a.l2 + 2 * (a.l1 + lw));
  }
}

TEST(Lengths, VertexCountsFrozen) {
  auto f = fixed_point();
  auto o = odometer();
  const std::vector<int> fp{2, 18, 98, 498, 2498, 12498};
  const std::vector<int> od{3, 25, 137, 709, 3601, 18133};
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(f.vertex_count(n), fp[n - 1]);
    EXPECT_EQ(o.vertex_count(n), od[n - 1]);
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    auto all = f.all_vertices(n);
    EXPECT_EQ(BigInt(as_set(all).size()), f.vertex_count(n));
  }
}

TEST(Decode, LevelTwoWord) {
  auto t = fixed_point();
  std::string word;
  for (int j = 0; j <= 9; ++j)
    word += t.label(t.decode(Address::OnPath(2, 1, j), 1)) + " ";
  EXPECT_EQ(word, "H H F:a F:a H F:a F:a H F:a F:a ");
}

TEST(Decode, LevelThreeHubPositions) {
  auto t = fixed_point();
  const std::set<int> hubs{0, 1, 2, 5, 8, 13, 16, 19, 20, 21,
                           24, 27, 32, 35, 38, 39, 40, 43, 46};
  for (int j = 0; j <= 49; ++j) {
    Address a = t.decode(Address::OnPath(3, 1, j), 1);
    EXPECT_EQ(a.is_hub(), hubs.count(j) == 1) << j;
    if (!a.is_hub()) EXPECT_TRUE(a.in_f()) << j;
  }
}

TEST(Decode, QIntervalsFrozen) {
  auto t = fixed_point();
  EXPECT_EQ(t.q_interval(2, 1), std::make_pair(BigInt(4), BigInt(5)));
  EXPECT_EQ(t.q_interval(3, 1), std::make_pair(BigInt(24), BigInt(25)));
  EXPECT_EQ(t.p1_occurrences(1), (std::vector<BigInt>{1, 4, 7}));
}

// q_m maps onto p_{1,n} position by position, for both generators.
TEST(Decode, QIntervalMapsOntoP1) {
  for (auto *gen : {"fixed-point", "odometer"}) {
    ImplicitTower t(make_generator(gen));
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t m = n + 1; m <= n + 4; ++m) {
        auto [lo, hi] = t.q_interval(m, n);
        ASSERT_EQ(hi - lo, t.l1(n));
        for (BigInt j = 0; j <= t.l1(n); ++j)
          ASSERT_EQ(t.decode(Address::OnPath(m, 1, lo + j), n),
                    t.normalize(Address::OnPath(n, 1, j)))
              << gen << " m=" << m << " n=" << n << " j=" << j;
      }
  }
}

TEST(Decode, OccurrencesAreCopiesOfP1) {
  auto t = odometer();
  for (std::size_t n = 1; n <= 5; ++n)
    for (const BigInt &off : t.p1_occurrences(n))
      for (BigInt j = 0; j <= t.l1(n); j += 1 + t.l1(n) / 64)
        ASSERT_EQ(t.decode_step(Address::OnPath(n + 1, 1, off + j)),
                  t.normalize(Address::OnPath(n, 1, j)));
}

TEST(Decode, DeepDecodeIsFast) {
  auto t = fixed_point();
  auto start = std::chrono::steady_clock::now();
  auto [lo, hi] = t.q_interval(254, 4);
  for (BigInt j = 0; j <= t.l1(4); j += 7) {
    Address a = t.decode(Address::OnPath(254, 1, lo + j), 4);
    ASSERT_EQ(a, t.normalize(Address::OnPath(4, 1, j)));
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
  EXPECT_LT(secs.count(), 1.0);
}

TEST(Decode, BeyondMaxLevelThrows) {
  auto t = fixed_point();
  EXPECT_THROW(t.l1(ImplicitTower::kMaxLevel + 1), DepthExceeded);
}

// decode_step is a +directional homomorphism G_{n+1} -> G_n (all
// out-neighbours share one image, which is an out-neighbour of the image),
// also bidirectional off F, and the neighbour lists are dual to each other.
TEST(Step, CoveringMapProperties) {
  for (auto *gen : {"fixed-point", "odometer"}) {
    ImplicitTower t(make_generator(gen));
    for (std::size_t n = 1; n <= 4; ++n) {
      for (const Address &a : t.all_vertices(n + 1)) {
        const Address da = t.decode_step(a);
        for (int dir : {+1, -1}) {
          auto nb = t.step(a, dir);
          ASSERT_FALSE(nb.empty());
          auto below = as_set(t.step(da, dir));
          std::set<Address> images;
          for (const Address &b : nb) {
            auto back = t.step(b, -dir);
            ASSERT_TRUE(std::count(back.begin(), back.end(), a)) << gen;
            images.insert(t.decode_step(b));
          }
          for (const Address &img : images) ASSERT_TRUE(below.count(img));
          if (dir == +1 || !a.in_f())
            ASSERT_EQ(images.size(), 1u)
                << gen << " level " << n + 1 << " " << t.label(a) << " dir " << dir;
        }
      }
    }
  }
}

TEST(Step, EveryEdgeIsCovered) {
  auto t = odometer();
  for (std::size_t n = 1; n <= 3; ++n) {
    std::set<std::pair<Address, Address>> hit;
    for (const Address &a : t.all_vertices(n + 1))
      for (const Address &b : t.step(a, +1)) hit.insert({t.decode_step(a), t.decode_step(b)});
    std::size_t edges = 0;
    for (const Address &a : t.all_vertices(n)) edges += t.step(a, +1).size();
    EXPECT_EQ(hit.size(), edges);
  }
}

TEST(Labels, RoundTrip) {
  for (auto *gen : {"fixed-point", "odometer"}) {
    ImplicitTower t(make_generator(gen));
    for (std::size_t n = 0; n <= 4; ++n)
      for (const Address &a : t.all_vertices(n)) {
        auto back = t.parse_label(n, t.label(a));
        ASSERT_TRUE(back.has_value()) << t.label(a);
        EXPECT_EQ(*back, a);
      }
    EXPECT_FALSE(t.parse_label(2, "p1:999999").has_value());
    EXPECT_FALSE(t.parse_label(2, "bogus").has_value());
  }
}

TEST(Schedule, FrozenStages) {
  auto t = fixed_point();
  auto strict = schedule(t, 1, 2, ScheduleMode::kStrict);
  ASSERT_EQ(strict.size(), 2u);
  EXPECT_EQ(strict[0].n, 1);
  EXPECT_EQ(strict[0].m, 3);
  EXPECT_EQ(strict[1].n, 4);
  EXPECT_EQ(strict[1].m, 254);
  auto relaxed = schedule(t, 1, 4, ScheduleMode::kRelaxed);
  const std::vector<std::pair<int, int>> want{{1, 3}, {4, 5}, {6, 7}, {8, 9}};
  ASSERT_EQ(relaxed.size(), want.size());
  for (std::size_t k = 0; k < want.size(); ++k) {
    EXPECT_EQ(relaxed[k].n, want[k].first);
    EXPECT_EQ(relaxed[k].m, want[k].second);
  }
}

TEST(Schedule, StrictInvariant) {
  auto t = odometer();
  auto s = schedule(t, 2, 2, ScheduleMode::kStrict);
  for (std::size_t k = 0; k < s.size(); ++k) {
    EXPECT_GT(s[k].m, s[k].n + s[k].l1_n);
    EXPECT_EQ(s[k].m - 1, s[k].n + s[k].l1_n);
    if (k + 1 < s.size()) EXPECT_EQ(s[k + 1].n, s[k].m + 1);
  }
}

TEST(Threads, CompatibleAndSemigroup) {
  std::mt19937_64 rng(2026);
  for (auto *gen : {"fixed-point", "odometer"}) {
    ImplicitTower t(make_generator(gen));
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t depth = 4 + rng() % 5;
      std::uniform_int_distribution<long> pos(0, static_cast<long>(t.l1(depth)));
      ThreadPrefix p = thread_through(t, Address::OnPath(depth, 1, pos(rng)));
      ASSERT_TRUE(is_compatible(t, p));
      const std::size_t a = rng() % 2, b = rng() % 2;
      ThreadPrefix ab = push_forward(t, push_forward(t, p, a), b);
      ThreadPrefix direct = push_forward(t, p, a + b);
      ASSERT_EQ(ab, direct) << gen << " trial " << trial;
      ASSERT_TRUE(is_compatible(t, direct));
    }
  }
}

TEST(Threads, BrokenPrefixIsIncompatible) {
  auto t = fixed_point();
  ThreadPrefix p = thread_through(t, Address::OnPath(3, 1, 10));
  p.entries[2] = Address::Hub(2);
  EXPECT_FALSE(is_compatible(t, p));
}
