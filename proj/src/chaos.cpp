//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "zdchaos/chaos.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

namespace zdchaos {

namespace {

using Clock = std::chrono::steady_clock;

// Positions decoded by a single checker before it gives up.
constexpr std::size_t kScanLimit = 5'000'000;

struct Run {
  WitnessReport r;
  Clock::time_point t0 = Clock::now();

  Run(std::string claim, std::size_t level, ScheduleMode mode) {
    r.claim = std::move(claim);
    r.level = level;
    r.mode = mode;
  }
  WitnessReport finish(bool pass) {
    r.pass = pass;
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return std::move(r);
  }
};

std::size_t as_level(const BigInt &x) {
  if (x < 0 || x > BigInt(ImplicitTower::kMaxLevel))
    throw DepthExceeded("level " + to_decimal(x) + " is beyond the arithmetic limit");
  return static_cast<std::size_t>(x);
}

std::size_t as_count(const BigInt &x, const char *what) {
  if (x < 0 || x > BigInt(kScanLimit))
    throw DepthExceeded(std::string(what) + " spans " + to_decimal(x) +
                        " positions, more than the scan limit");
  return static_cast<std::size_t>(x);
}

struct Stage {
  std::size_t n, m;
};

Stage stage(const std::vector<ScheduleEntry> &sched, std::size_t k) {
  if (k < 1 || k > sched.size())
    throw std::invalid_argument("schedule has no stage " + std::to_string(k));
  return {as_level(sched[k - 1].n), as_level(sched[k - 1].m)};
}

BigInt abs_big(const BigInt &x) { return x < 0 ? BigInt(-x) : x; }

bool is_hub(const Address &a) { return a.is_hub(); }

// One-sided hub windows for the q_m interval. The left window is the prefix
// e^{M-n} of p_{1,M}; the right one straddles the junction in front of the
// third p_{1,M-1} copy. M is the least level >= m where the block fits.
struct HubSide {
  std::size_t context = 0;
  BigInt t, block;
};

std::pair<HubSide, HubSide> hub_sides(const ImplicitTower &t, std::size_t m,
                                      std::size_t n) {
  const BigInt W = t.l1(n);
  HubSide L, R;
  L.context = std::max(m, as_level(n + W));
  L.t = -t.q_interval(L.context, n).first;
  L.block = L.context - n;
  R.context = std::max(m, as_level(n + 1 + (W + 1) / 2));
  const std::size_t h = R.context - 1 - n;
  const BigInt start = 1 + 2 * t.group_length(R.context - 1) - h;
  R.t = start - t.q_interval(R.context, n).first;
  R.block = 2 * h;
  return {L, R};
}

// Every position of the q_m window carried to p_{1,M} and shifted by `shift`
// decodes to the hub at level n.
bool window_is_hub(const ImplicitTower &t, std::size_t M, std::size_t n,
                   const BigInt &shift, std::uint64_t &visited) {
  const auto [lo, hi] = t.q_interval(M, n);
  for (BigInt p = lo + shift; p <= hi + shift; ++p) {
    ++visited;
    if (p < 0 || p > t.l1(M) || !is_hub(decode_p1(t, M, p, n))) return false;
  }
  return true;
}

// Translations of the q_m window onto the prefix copy of p_{1,n} and onto the
// copy opening the third p_{1,m-1} block.
std::pair<BigInt, BigInt> copy_translations(const ImplicitTower &t,
                                            std::size_t m, std::size_t n) {
  const BigInt lo = t.q_interval(m, n).first;
  const BigInt left = BigInt(m - n) - lo;
  const BigInt right =
      1 + 2 * t.group_length(m - 1) + BigInt(m - 1 - n) - lo;
  return {left, right};
}

// The window [lo+shift, hi+shift] on p_{1,m} reads p_{1,n} position by
// position at level n.
bool window_is_p1(const ImplicitTower &t, std::size_t m, std::size_t n,
                  const BigInt &shift, std::uint64_t &visited) {
  const auto [lo, hi] = t.q_interval(m, n);
  std::set<Address> seen;
  for (BigInt i = 0; lo + i <= hi; ++i) {
    ++visited;
    const BigInt p = lo + shift + i;
    if (p < 0 || p > t.l1(m)) return false;
    const Address got = decode_p1(t, m, p, n);
    if (got != t.normalize(Address::OnPath(n, 1, i))) return false;
    if (!seen.insert(got).second) return false;
  }
  return true;
}

std::vector<Address> decode_range(const ImplicitTower &t, std::size_t M,
                                  const BigInt &lo, const BigInt &hi,
                                  std::size_t n) {
  const std::size_t count = as_count(hi - lo + 1, "window");
  std::vector<Address> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(decode_p1(t, M, lo + i, n));
  return out;
}

std::optional<std::string> expect(bool ok, std::string why) {
  if (ok) return std::nullopt;
  return why;
}

}  // namespace

BigInt embed_offset(const ImplicitTower &t, std::size_t m, std::size_t M) {
  if (M < m) throw std::invalid_argument("embed_offset needs M >= m");
  BigInt s = 0;
  for (std::size_t j = m; j < M; ++j) s += 1 + t.group_length(j);
  return s;
}

Address decode_p1(const ImplicitTower &t, std::size_t M, const BigInt &pos,
                  std::size_t n) {
  return t.decode(Address::OnPath(M, 1, pos), n);
}

CantorApprox cantor_approx(const ImplicitTower &t,
                           const std::vector<ScheduleEntry> &sched,
                           std::size_t N, std::size_t k) {
  if (N < 1 || k < N)
    throw std::invalid_argument("CantorApprox needs 1 <= N <= k");
  CantorApprox c;
  c.N = N;
  c.k = N;
  Stage s = stage(sched, N);
  c.level = s.m;
  c.cylinders = {t.q_interval(s.m, s.n)};
  while (c.k < k) {
    const Stage next = stage(sched, c.k + 1);
    const BigInt base = t.q_interval(next.m, next.n).first;
    std::vector<Interval> refined;
    for (const BigInt &o : t.p1_occurrences(c.level))
      for (const auto &[a, b] : c.cylinders)
        refined.emplace_back(base + o + a, base + o + b);
    std::sort(refined.begin(), refined.end());
    c.cylinders = std::move(refined);
    c.level = next.m;
    ++c.k;
  }
  return c;
}

bool refines(const ImplicitTower &t, const CantorApprox &fine,
             const CantorApprox &coarse) {
  if (fine.level <= coarse.level) return false;
  for (const auto &[a, b] : fine.cylinders) {
    const BigInt mid = (a + b) / 2;
    bool inside = false;
    for (const auto &[c, d] : coarse.cylinders) {
      if (d - c != b - a) continue;
      bool ok = true;
      for (const BigInt &off : {BigInt(0), BigInt(mid - a), BigInt(b - a)})
        ok = ok && decode_p1(t, fine.level, a + off, coarse.level) ==
                       t.normalize(Address::OnPath(coarse.level, 1, c + off));
      if (ok) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

WitnessReport verify_fixed_point_pattern(const ImplicitTower &t, std::size_t m,
                                         std::size_t n) {
  if (n < 1 || m <= n)
    throw std::invalid_argument("fixed-point pattern needs 1 <= n < m");
  Run run("fixed-point-pattern", n, ScheduleMode::kStrict);
  auto &r = run.r;
  r.add("m", m);
  r.add("n", n);
  const std::size_t d = m - n;
  const BigInt W = t.l1(n);
  bool ok = true;
  std::optional<BigInt> first_bad;
  for (BigInt j = 0; j <= d + W; ++j) {
    ++r.nodes_visited;
    const Address got = decode_p1(t, m, j, n);
    const Address want = j <= d ? Address::Hub(n)
                                : t.normalize(Address::OnPath(n, 1, j - d));
    if (got != want) {
      ok = false;
      first_bad = j;
      break;
    }
  }
  r.add("hub_prefix", d);
  r.add("p1_length", W);
  if (first_bad) r.add("mismatch_at", *first_bad);

  // Hub block across the p_{2,m} p_{1,m} junction.
  const BigInt l2m = t.l2(m);
  BigInt before = 0, after = 0;
  while (before < l2m &&
         is_hub(t.decode(Address::OnPath(m, 2, l2m - before - 1), n))) {
    ++before;
    ++r.nodes_visited;
  }
  while (after < t.l1(m) && is_hub(decode_p1(t, m, after + 1, n))) {
    ++after;
    ++r.nodes_visited;
  }
  r.add("junction_block", before + after);
  ok = ok && before + after >= 2 * d;
  return run.finish(ok);
}

WitnessReport verify_property1(const ImplicitTower &t, std::size_t m,
                               std::size_t n, ScheduleMode mode) {
  if (n < 1 || m <= n) throw std::invalid_argument("property 1 needs 1 <= n < m");
  Run run("property1", n, mode);
  auto &r = run.r;
  const BigInt W = t.l1(n);
  const bool pre = BigInt(m) > n + W;
  r.add("m", m);
  r.add("n", n);
  r.add("window_length", W);
  r.add("precondition", pre ? 1 : 0);
  if (mode == ScheduleMode::kStrict && !pre) {
    r.notes.push_back("strict mode requires m > n + l_{1,n}");
    return run.finish(false);
  }
  const auto [L, R] = hub_sides(t, m, n);
  bool ok = true;
  for (const auto &[tag, side] : {std::pair{"left", L}, std::pair{"right", R}}) {
    r.add(std::string(tag) + ".context", side.context);
    r.add(std::string(tag) + ".t", side.t);
    r.add(std::string(tag) + ".block", side.block);
    bool hit = window_is_hub(t, side.context, n, side.t, r.nodes_visited);
    r.add(std::string(tag) + ".hub", hit ? 1 : 0);
    ok = ok && hit;
    if (mode == ScheduleMode::kStrict)
      ok = ok && side.context == m && side.block >= BigInt(m - n);
  }
  ok = ok && L.t < 0 && R.t > 0;
  if (L.context != m || R.context != m)
    r.notes.push_back("hub windows found in an enclosing p_1 word");
  return run.finish(ok);
}

WitnessReport verify_property2(const ImplicitTower &t, std::size_t m,
                               std::size_t n, ScheduleMode mode) {
  if (n < 1 || m <= n) throw std::invalid_argument("property 2 needs 1 <= n < m");
  Run run("property2", n, mode);
  auto &r = run.r;
  const BigInt W = t.l1(n);
  const bool pre = BigInt(m) > n + W;
  r.add("m", m);
  r.add("n", n);
  r.add("window_length", W);
  r.add("precondition", pre ? 1 : 0);
  if (mode == ScheduleMode::kStrict && !pre) {
    r.notes.push_back("strict mode requires m > n + l_{1,n}");
    return run.finish(false);
  }
  const auto [tl, tr] = copy_translations(t, m, n);
  r.add("left.t", tl);
  r.add("right.t", tr);
  const bool left = window_is_p1(t, m, n, tl, r.nodes_visited);
  const bool right = window_is_p1(t, m, n, tr, r.nodes_visited);
  r.add("left.onto", left ? 1 : 0);
  r.add("right.onto", right ? 1 : 0);
  const BigInt mag = std::max(abs_big(tl), abs_big(tr));
  r.add("magnitude", mag);
  bool grows = true;
  if (m - 1 > n) {
    const auto [pl, pr] = copy_translations(t, m - 1, n);
    const BigInt prev = std::max(abs_big(pl), abs_big(pr));
    r.add("previous_magnitude", prev);
    grows = mag > prev;
  }
  return run.finish(left && right && tl < 0 && tr > 0 && grows);
}

WitnessReport verify_triple_cover(const ImplicitTower &t,
                                  const std::vector<ScheduleEntry> &sched,
                                  std::size_t k, ScheduleMode mode) {
  const Stage s = stage(sched, k);
  const Stage s1 = stage(sched, k + 1);
  Run run("triple-cover", s.m, mode);
  auto &r = run.r;
  r.add("k", k);
  r.add("m", s.m);
  r.add("m_next", s1.m);
  const auto [a, b] = t.q_interval(s.m, s.n);
  const auto [A, B] = t.q_interval(s1.m, s1.n);
  std::vector<Address> word = decode_range(t, s1.m, A, B, s.m);
  std::vector<Address> pattern;
  for (BigInt p = a; p <= b; ++p)
    pattern.push_back(t.normalize(Address::OnPath(s.m, 1, p)));
  r.nodes_visited += word.size();
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i + pattern.size() <= word.size(); ++i)
    if (std::equal(pattern.begin(), pattern.end(), word.begin() + i))
      starts.push_back(i);
  bool disjoint = true;
  for (std::size_t c = 0; c < starts.size(); ++c) {
    r.add("interval." + std::to_string(c) + ".lo", A + starts[c]);
    r.add("interval." + std::to_string(c) + ".hi",
          A + starts[c] + pattern.size() - 1);
    if (c > 0 && starts[c] < starts[c - 1] + pattern.size()) disjoint = false;
  }
  r.add("count", starts.size());
  // The intervals predicted from the p_{1,m} occurrence offsets.
  bool structural = starts.size() == 3;
  const auto occ = t.p1_occurrences(s.m);
  for (std::size_t c = 0; structural && c < 3; ++c)
    structural = A + starts[c] == A + occ[c] + a;
  r.add("structural", structural ? 1 : 0);
  return run.finish(starts.size() == 3 && disjoint);
}

WitnessReport verify_density(const ImplicitTower &t,
                             const std::vector<ScheduleEntry> &sched,
                             std::size_t k, ScheduleMode mode) {
  const Stage s = stage(sched, k);
  const Stage s1 = stage(sched, k + 1);
  Run run("density", s.m, mode);
  auto &r = run.r;
  r.add("k", k);
  r.add("m", s.m);
  r.add("m_next", s1.m);
  const auto [A, B] = t.q_interval(s1.m, s1.n);
  std::map<std::string, std::size_t> first;
  const std::size_t count = as_count(B - A + 1, "q window");
  for (std::size_t i = 0; i < count; ++i) {
    ++r.nodes_visited;
    first.emplace(t.label(decode_p1(t, s1.m, A + i, s.m)), i);
  }
  bool ok = true;
  std::size_t hit = 0;
  for (const Address &v : t.all_vertices(s.m)) {
    const std::string name = t.label(v);
    auto it = first.find(name);
    if (it == first.end()) {
      ok = false;
      r.add("missed." + name, 1);
      r.notes.push_back("vertex " + name + " is not hit");
    } else {
      ++hit;
      r.add("hit." + name, it->second);
    }
  }
  r.add("vertices", t.vertex_count(s.m));
  r.add("hit", hit);
  return run.finish(ok);
}

std::vector<BigInt> sample_points(const CantorApprox &c,
                                  const SampleOptions &options) {
  std::vector<BigInt> out;
  for (const auto &[a, b] : c.cylinders) {
    out.push_back(a);
    out.push_back((a + b) / 2);
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::mt19937_64 rng(options.seed);
  while (out.size() < options.samples && !c.cylinders.empty()) {
    const auto &[a, b] = c.cylinders[rng() % c.cylinders.size()];
    out.push_back(a + BigInt(rng()) % (b - a + 1));
  }
  return out;
}

WitnessReport proximality_witness(const ImplicitTower &t,
                                  const std::vector<ScheduleEntry> &sched,
                                  std::size_t N, std::size_t k, std::size_t n,
                                  const SampleOptions &options,
                                  ScheduleMode mode) {
  const Stage s = stage(sched, k);
  if (n < 1 || n > s.n)
    throw std::invalid_argument("resolution must lie in [1, n_k]");
  Run run("proximal", n, mode);
  auto &r = run.r;
  const CantorApprox c = cantor_approx(t, sched, N, k);
  const auto pts = sample_points(c, options);
  r.add("N", N);
  r.add("k", k);
  r.add("m", s.m);
  r.add("n_k", s.n);
  for (std::size_t i = 0; i < pts.size(); ++i)
    r.add("sample." + std::to_string(i), pts[i]);
  const auto [L, R] = hub_sides(t, s.m, s.n);
  bool ok = true;
  for (const auto &[tag, side] : {std::pair{"plus", R}, std::pair{"minus", L}}) {
    const BigInt lift = embed_offset(t, s.m, side.context);
    bool all = true;
    for (const BigInt &p : pts) {
      ++r.nodes_visited;
      all = all && is_hub(decode_p1(t, side.context, p + lift + side.t, n));
    }
    r.add(std::string("context_") + tag, side.context);
    r.add(std::string("t_") + tag, side.t);
    ok = ok && all;
  }
  return run.finish(ok && R.t > 0 && L.t < 0);
}

WitnessReport recurrence_witness(const ImplicitTower &t,
                                 const std::vector<ScheduleEntry> &sched,
                                 std::size_t N, std::size_t k, std::size_t n,
                                 const SampleOptions &options,
                                 ScheduleMode mode) {
  const Stage s = stage(sched, k);
  const Stage s1 = stage(sched, k + 1);
  if (n < 1 || n > s.n)
    throw std::invalid_argument("resolution must lie in [1, n_k]");
  Run run("recurrent", n, mode);
  auto &r = run.r;
  const CantorApprox c = cantor_approx(t, sched, N, k);
  const auto pts = sample_points(c, options);
  r.add("N", N);
  r.add("k", k);
  r.add("m", s.m);
  r.add("m_next", s1.m);
  for (std::size_t i = 0; i < pts.size(); ++i)
    r.add("sample." + std::to_string(i), pts[i]);

  auto returns = [&](std::size_t M, const BigInt &lift, const BigInt &shift) {
    for (const BigInt &p : pts) {
      ++r.nodes_visited;
      const BigInt q = p + lift + shift;
      if (q < 0 || q > t.l1(M)) return false;
      if (decode_p1(t, M, q, n) != decode_p1(t, M, p + lift, n)) return false;
    }
    return true;
  };
  const auto [tm, tp] = copy_translations(t, s.m, s.n);
  const auto [Tm, Tp] = copy_translations(t, s1.m, s1.n);
  const BigInt lift = t.q_interval(s1.m, s1.n).first + 1 + t.group_length(s.m);
  r.add("t_plus", tp);
  r.add("t_minus", tm);
  r.add("t_plus_large", Tp);
  r.add("t_minus_large", Tm);
  bool ok = tp > 0 && tm < 0 && Tp > tp && Tm < tm;
  ok = ok && returns(s.m, 0, tp) && returns(s.m, 0, tm);
  ok = ok && returns(s1.m, lift, Tp) && returns(s1.m, lift, Tm);
  return run.finish(ok);
}

WitnessReport scrambled_pair_witness(const ImplicitTower &t, std::size_t M,
                                     const BigInt &a, const BigInt &b,
                                     std::size_t n, BigInt horizon,
                                     ScheduleMode mode) {
  if (a == b) throw std::invalid_argument("a scrambled pair needs a != b");
  const BigInt len = t.l1(M);
  if (a < 0 || b < 0 || a > len || b > len)
    throw std::invalid_argument("points must lie on p_{1,M}");
  if (n < 1 || n > M) throw std::invalid_argument("resolution must lie in [1, M]");
  Run run("scrambled", n, mode);
  auto &r = run.r;
  if (horizon <= 0) horizon = 4 * len;
  r.add("M", M);
  r.add("a", a);
  r.add("b", b);
  r.add("horizon", horizon);
  const BigInt reach = std::min<BigInt>(horizon, len - std::max(a, b));
  std::optional<BigInt> same, diff;
  for (BigInt s = 1; s <= reach && (!same || !diff); ++s) {
    if (++r.nodes_visited > kScanLimit) {
      r.notes.push_back("scan limit reached");
      break;
    }
    const bool eq = decode_p1(t, M, a + s, n) == decode_p1(t, M, b + s, n);
    if (eq && !same) same = s;
    if (!eq && !diff) diff = s;
  }
  if (same) r.add("t_same", *same);
  if (diff) r.add("t_diff", *diff);
  return run.finish(same && diff);
}

WitnessReport verify_invariance(const ImplicitTower &t,
                                const std::vector<ScheduleEntry> &sched,
                                std::size_t N, std::size_t k,
                                ScheduleMode mode) {
  const Stage s = stage(sched, k);
  Run run("invariant", s.m, mode);
  auto &r = run.r;
  const CantorApprox c = cantor_approx(t, sched, N, k);
  const auto [qa, qb] = t.q_interval(s.m, s.n);
  const BigInt len = t.l1(s.m);
  r.add("N", N);
  r.add("k", k);
  r.add("m", s.m);
  r.add("q.lo", qa);
  r.add("q.hi", qb);
  r.add("l1", len);
  bool ok = true;
  for (std::size_t i = 0; i < c.cylinders.size(); ++i) {
    const auto &[a, b] = c.cylinders[i];
    r.add("cyl." + std::to_string(i) + ".lo", a);
    r.add("cyl." + std::to_string(i) + ".hi", b);
    ok = ok && a >= qa && b <= qb;
  }
  // On q, and on the next stage's q when the schedule has one, interior
  // points have a unique successor and predecessor, both on q. Each q lies
  // strictly inside its p_1, so it avoids the hub and F.
  std::uint64_t checked = 0;
  bool exhaustive = true;
  auto check_window = [&](std::size_t m, const BigInt &lo, const BigInt &hi) {
    ok = ok && lo >= 1 && hi <= t.l1(m) - 1;
    auto check_at = [&](const BigInt &j) {
      ++checked;
      const Address here = Address::OnPath(m, 1, j);
      ok = ok && t.normalize(here).kind == AddressKind::kOnPath;
      ok = ok && t.step(here, +1) ==
                     std::vector<Address>{t.normalize(Address::OnPath(m, 1, j + 1))};
      ok = ok && t.step(here, -1) ==
                     std::vector<Address>{t.normalize(Address::OnPath(m, 1, j - 1))};
    };
    if (hi - lo - 1 <= BigInt(200'000)) {
      for (BigInt j = lo + 1; j < hi; ++j) check_at(j);
    } else {
      exhaustive = false;
      for (const BigInt &j : {BigInt(lo + 1), BigInt((lo + hi) / 2), BigInt(hi - 1)})
        check_at(j);
    }
  };
  check_window(s.m, qa, qb);
  if (k < sched.size()) {
    const Stage s1 = stage(sched, k + 1);
    const auto [na, nb] = t.q_interval(s1.m, s1.n);
    r.add("m_next", s1.m);
    r.add("q_next.lo", na);
    r.add("q_next.hi", nb);
    check_window(s1.m, na, nb);
  }
  r.add("interior_checked", checked);
  r.add("exhaustive", exhaustive ? 1 : 0);
  ok = ok && checked > 0;
  r.nodes_visited = checked;
  return run.finish(ok);
}

WitnessReport verify_outside_bidirectional(const Embedding &e, std::size_t n) {
  if (n < 1 || n > e.max_level())
    throw std::invalid_argument("outside-bidirectional needs an explicit level");
  Run run("outside-homeo", n, ScheduleMode::kRelaxed);
  auto &r = run.r;
  const auto &lv = e.levels[n];
  const GraphHom &h = e.hom_into(n);
  const DirectedGraph &g = *lv.graph;
  auto uniform = [&](std::span<const VertexIndex> nb) {
    return std::all_of(nb.begin(), nb.end(),
                       [&](VertexIndex w) { return h(w) == h(nb[0]); });
  };
  bool ok = true;
  std::size_t checked = 0;
  for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
    if (lv.address[v].in_f()) continue;
    ++checked;
    r.nodes_visited += g.out(v).size() + g.in(v).size();
    if (!uniform(g.out(v)) || !uniform(g.in(v))) {
      ok = false;
      r.add("failing." + g.name(v), 1);
      r.notes.push_back("vertex " + g.name(v) + " is not bidirectional");
    }
  }
  // Loop, first p_1 edge and last p_2 edge all map onto the loop below.
  const VertexIndex hub_below = e.levels[n - 1].hub;
  int hub_edges = 0;
  for (const auto &[u, v] : {Edge{lv.hub, lv.hub}, Edge{lv.hub, lv.p1->at(1)},
                             Edge{lv.p2->at(lv.l2 - 1), lv.hub}})
    hub_edges += h(u) == hub_below && h(v) == hub_below;
  r.add("checked", checked);
  r.add("hub_edges", hub_edges);
  return run.finish(ok && hub_edges == 3);
}

WitnessReport transitivity_witness(const ImplicitTower &t,
                                   const std::vector<ScheduleEntry> &sched,
                                   std::size_t k, const BigInt &a,
                                   std::size_t n, ScheduleMode mode) {
  const Stage s = stage(sched, k);
  const Stage s1 = stage(sched, k + 1);
  const auto [qa, qb] = t.q_interval(s.m, s.n);
  if (a < qa || a > qb) throw std::invalid_argument("point is not on the q window");
  if (n < 1 || n > s.m) throw std::invalid_argument("resolution must lie in [1, m(k)]");
  Run run("transitive", n, mode);
  auto &r = run.r;
  const std::size_t M = s1.m;
  const BigInt start =
      t.q_interval(M, s1.n).first + 1 + t.group_length(s.m) + a;
  r.add("k", k);
  r.add("m", s.m);
  r.add("M", M);
  r.add("a", a);
  r.add("start", start);
  const auto targets = t.all_vertices(n);
  std::map<std::string, BigInt> fwd, bwd;
  const BigInt len = t.l1(M);
  for (BigInt s2 = 1; start + s2 <= len && fwd.size() < targets.size(); ++s2) {
    if (++r.nodes_visited > kScanLimit) break;
    fwd.emplace(t.label(decode_p1(t, M, start + s2, n)), s2);
  }
  for (BigInt s2 = 1; start - s2 >= 0 && bwd.size() < targets.size(); ++s2) {
    if (++r.nodes_visited > kScanLimit) break;
    bwd.emplace(t.label(decode_p1(t, M, start - s2, n)), -s2);
  }
  bool ok = true;
  for (const Address &v : targets) {
    const std::string name = t.label(v);
    for (auto [tbl, tag] : {std::pair{&fwd, "forward."}, std::pair{&bwd, "backward."}}) {
      auto it = tbl->find(name);
      if (it == tbl->end()) {
        ok = false;
        r.add(std::string("missed.") + tag + name, 1);
      } else {
        r.add(tag + name, it->second);
      }
    }
  }
  return run.finish(ok);
}

std::optional<std::string> replay(const ImplicitTower &t, const WitnessReport &r) {
  auto lvl = [&](std::string_view key) { return as_level(r.get(key)); };
  auto prefixed = [&](std::string_view prefix) {
    std::vector<std::pair<std::string, BigInt>> out;
    for (const auto &w : r.witnesses)
      if (w.key.rfind(prefix, 0) == 0) out.emplace_back(w.key.substr(prefix.size()), w.value);
    return out;
  };
  auto samples = [&] {
    std::vector<BigInt> pts;
    for (auto &[_, v] : prefixed("sample.")) pts.push_back(v);
    return pts;
  };
  if (!r.pass) return "only pass reports are replayed";
  const std::string &c = r.claim;
  std::uint64_t visited = 0;

  if (c == "fixed-point-pattern") {
    const std::size_t m = lvl("m"), n = lvl("n");
    const BigInt d = r.get("hub_prefix"), W = r.get("p1_length");
    if (d != BigInt(m - n) || W != t.l1(n)) return "pattern lengths disagree";
    for (BigInt j = 0; j <= d + W; ++j) {
      const Address want = j <= d ? Address::Hub(n)
                                  : t.normalize(Address::OnPath(n, 1, j - d));
      if (decode_p1(t, m, j, n) != want) return "prefix mismatch at " + to_decimal(j);
    }
    const BigInt l2m = t.l2(m);
    for (BigInt i = 0; i < d; ++i)
      if (!is_hub(t.decode(Address::OnPath(m, 2, l2m - 1 - i), n)))
        return "junction block is broken";
    return std::nullopt;
  }
  if (c == "property1") {
    const std::size_t n = lvl("n");
    for (const char *side : {"left", "right"}) {
      const std::string s(side);
      const std::size_t M = lvl(s + ".context");
      const BigInt shift = r.get(s + ".t");
      if ((s == "left") != (shift < 0)) return s + " translation has the wrong sign";
      if (!window_is_hub(t, M, n, shift, visited)) return s + " window is not all hub";
    }
    return std::nullopt;
  }
  if (c == "property2") {
    const std::size_t m = lvl("m"), n = lvl("n");
    if (!window_is_p1(t, m, n, r.get("left.t"), visited)) return "left window";
    if (!window_is_p1(t, m, n, r.get("right.t"), visited)) return "right window";
    return expect(r.get("left.t") < 0 && r.get("right.t") > 0, "translation signs");
  }
  if (c == "triple-cover") {
    const std::size_t m = lvl("m"), M = lvl("m_next");
    const auto [a, b] = [&] {
      // q_m is the only interval on p_{1,m} of this length ending a schedule
      // stage; recover it from the report's first interval.
      return std::pair{r.get("interval.0.lo"), r.get("interval.0.hi")};
    }();
    if (r.get("count") != 3) return "count is not 3";
    std::vector<Address> first;
    for (BigInt p = a; p <= b; ++p) first.push_back(decode_p1(t, M, p, m));
    for (int i = 0; i < 3; ++i) {
      const BigInt lo = r.get("interval." + std::to_string(i) + ".lo");
      const BigInt hi = r.get("interval." + std::to_string(i) + ".hi");
      if (hi - lo != b - a) return "interval lengths differ";
      if (i > 0 && lo <= r.get("interval." + std::to_string(i - 1) + ".hi"))
        return "intervals overlap";
      for (BigInt p = lo; p <= hi; ++p) {
        const Address got = decode_p1(t, M, p, m);
        if (got.kind != AddressKind::kOnPath || got.path != 1 ||
            got != first[static_cast<std::size_t>(p - lo)])
          return "interval " + std::to_string(i) + " does not read q";
      }
    }
    return std::nullopt;
  }
  if (c == "density") {
    const std::size_t m = lvl("m"), M = lvl("m_next");
    const std::size_t n_next = m + 1;
    const BigInt A = t.q_interval(M, n_next).first;
    std::set<std::string> hit;
    for (auto &[name, i] : prefixed("hit.")) {
      if (t.label(decode_p1(t, M, A + i, m)) != name) return "hit " + name + " not replayed";
      hit.insert(name);
    }
    for (const Address &v : t.all_vertices(m))
      if (!hit.count(t.label(v))) return "vertex " + t.label(v) + " has no hit";
    return std::nullopt;
  }
  if (c == "proximal") {
    const std::size_t n = r.level, m = lvl("m");
    const auto pts = samples();
    for (const char *tag : {"plus", "minus"}) {
      const std::size_t M = lvl(std::string("context_") + tag);
      const BigInt shift = r.get(std::string("t_") + tag);
      const BigInt lift = embed_offset(t, m, M);
      for (const BigInt &p : pts)
        if (!is_hub(decode_p1(t, M, p + lift + shift, n)))
          return std::string("sample misses the hub at t_") + tag;
    }
    return expect(r.get("t_plus") > 0 && r.get("t_minus") < 0, "time signs");
  }
  if (c == "recurrent") {
    const std::size_t n = r.level, m = lvl("m"), M = lvl("m_next");
    const auto pts = samples();
    const BigInt lift = t.q_interval(M, m + 1).first + 1 + t.group_length(m);
    auto back = [&](std::size_t L, const BigInt &off, const BigInt &shift) {
      for (const BigInt &p : pts)
        if (decode_p1(t, L, p + off + shift, n) != decode_p1(t, L, p + off, n))
          return false;
      return true;
    };
    if (!back(m, 0, r.get("t_plus")) || !back(m, 0, r.get("t_minus")))
      return "sample does not return";
    if (!back(M, lift, r.get("t_plus_large")) || !back(M, lift, r.get("t_minus_large")))
      return "sample does not return at the larger time";
    return expect(r.get("t_plus_large") > r.get("t_plus") &&
                      r.get("t_minus_large") < r.get("t_minus"),
                  "larger witnesses are not larger");
  }
  if (c == "scrambled") {
    const std::size_t M = lvl("M"), n = r.level;
    const BigInt a = r.get("a"), b = r.get("b");
    const BigInt ts = r.get("t_same"), td = r.get("t_diff");
    if (ts > r.get("horizon") || td > r.get("horizon")) return "time beyond horizon";
    if (decode_p1(t, M, a + ts, n) != decode_p1(t, M, b + ts, n)) return "t_same";
    if (decode_p1(t, M, a + td, n) == decode_p1(t, M, b + td, n)) return "t_diff";
    return std::nullopt;
  }
  if (c == "invariant") {
    const std::size_t m = lvl("m");
    const BigInt qa = r.get("q.lo"), qb = r.get("q.hi");
    for (auto &[key, lo] : prefixed("cyl.")) {
      if (key.size() < 3 || key.substr(key.size() - 3) != ".lo") continue;
      const BigInt hi = r.get("cyl." + key.substr(0, key.size() - 3) + ".hi");
      if (lo < qa || hi > qb) return "cylinder leaves q";
    }
    std::vector<std::tuple<std::size_t, BigInt, BigInt>> windows{{m, qa, qb}};
    if (r.find("m_next"))
      windows.emplace_back(lvl("m_next"), r.get("q_next.lo"), r.get("q_next.hi"));
    for (const auto &[L, lo, hi] : windows) {
      if (lo < 1 || hi > t.l1(L) - 1) return "q touches the hub or F";
      for (const BigInt &j : {BigInt(lo + 1), BigInt((lo + hi) / 2), BigInt(hi - 1)}) {
        if (j <= lo || j >= hi) continue;
        const Address here = Address::OnPath(L, 1, j);
        if (t.step(here, +1) !=
                std::vector<Address>{t.normalize(Address::OnPath(L, 1, j + 1))} ||
            t.step(here, -1) !=
                std::vector<Address>{t.normalize(Address::OnPath(L, 1, j - 1))})
          return "step leaves q";
      }
    }
    return std::nullopt;
  }
  if (c == "transitive") {
    const std::size_t M = lvl("M"), n = r.level;
    const BigInt start = r.get("start");
    std::set<std::string> f, b;
    for (auto &[name, s] : prefixed("forward.")) {
      if (s <= 0 || t.label(decode_p1(t, M, start + s, n)) != name) return "forward " + name;
      f.insert(name);
    }
    for (auto &[name, s] : prefixed("backward.")) {
      if (s >= 0 || t.label(decode_p1(t, M, start + s, n)) != name) return "backward " + name;
      b.insert(name);
    }
    for (const Address &v : t.all_vertices(n))
      if (!f.count(t.label(v)) || !b.count(t.label(v))) return "vertex " + t.label(v);
    return std::nullopt;
  }
  return "claim " + c + " cannot be replayed from an implicit tower";
}

}  // namespace zdchaos
