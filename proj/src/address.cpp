//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "zdchaos/address.hpp"

#include <algorithm>
#include <stdexcept>

namespace zdchaos {

ImplicitTower::ImplicitTower(ProviderPtr base, BigInt l11, BigInt l21,
                             Sabotage sabotage)
    : base_(std::move(base)), l11_(std::move(l11)), l21_(std::move(l21)),
      sabotage_(sabotage), mu_(std::make_shared<std::mutex>()),
      memo_(std::make_shared<std::vector<std::unique_ptr<Lengths>>>()) {
  if (!base_) throw std::invalid_argument("tower without a base covering");
  if (l11_ < 1 || l21_ < 1)
    throw std::invalid_argument("initial path lengths must be at least 1");
}

const ImplicitTower::Lengths &ImplicitTower::lengths(std::size_t n) const {
  if (n < 1) throw std::invalid_argument("path lengths start at level 1");
  if (n > kMaxLevel)
    throw DepthExceeded("level " + std::to_string(n) +
                        " is beyond the arithmetic limit");
  base_->require_level(n);
  std::lock_guard<std::mutex> lock(*mu_);
  auto &memo = *memo_;
  if (memo.empty()) memo.emplace_back();  // level 0 has no paths
  while (memo.size() <= n) {
    const std::size_t k = memo.size();
    auto next = std::make_unique<Lengths>();
    if (k == 1) {
      next->l1 = l11_;
      next->l2 = l21_;
    } else {
      const Lengths &p = *memo[k - 1];
      next->l1 = 2 + 3 * p.l1 + 2 * (p.lw + p.l2);
      next->l2 = 2 + 3 * p.l2 + 2 * (p.l1 + p.lw);
    }
    next->lw = base_->cover_walk_length(k);
    memo.push_back(std::move(next));
  }
  return *memo[n];
}

PathLengths ImplicitTower::path_lengths(std::size_t n) const {
  const Lengths &L = lengths(n);
  return {L.l1, L.l2};
}

BigInt ImplicitTower::cover_walk_length(std::size_t n) const {
  return lengths(n).lw;
}

BigInt ImplicitTower::group_length(std::size_t n) const {
  const Lengths &L = lengths(n);
  return L.l1 + L.lw + L.l2;
}

Address ImplicitTower::normalize(const Address &a) const {
  const std::size_t n = a.level;
  if (n == 0) return Address::InF(0, 0);
  switch (a.kind) {
    case AddressKind::kHub:
      return Address::Hub(n);
    case AddressKind::kInF:
      if (a.index < 0 || a.index >= base_->vertex_count(n))
        throw std::out_of_range("F vertex out of range at level " +
                                std::to_string(n));
      return a;
    case AddressKind::kOnPath: {
      const Lengths &L = lengths(n);
      if (a.path == 1) {
        if (a.index < 0 || a.index > L.l1)
          throw std::out_of_range("index out of range on p1 at level " +
                                  std::to_string(n));
        if (a.index == 0) return Address::Hub(n);
        if (a.index == L.l1) return Address::InF(n, base_->forward_anchor(n, n));
        return a;
      }
      if (a.path == 2) {
        if (a.index < 0 || a.index > L.l2)
          throw std::out_of_range("index out of range on p2 at level " +
                                  std::to_string(n));
        if (a.index == 0) return Address::InF(n, base_->backward_anchor(n, n));
        if (a.index == L.l2) return Address::Hub(n);
        return a;
      }
      throw std::invalid_argument("path id must be 1 or 2");
    }
  }
  throw std::logic_error("unreachable");
}

Address ImplicitTower::decode_group(std::size_t n, const BigInt &s,
                                    const Lengths &L) const {
  if (s <= L.l1) return normalize(Address::OnPath(n, 1, s));
  if (s <= L.l1 + L.lw) {
    if (sabotage_ == Sabotage::kCoverWalkCollapsed)
      return Address::InF(n, base_->forward_anchor(n, n));
    return Address::InF(n, base_->cover_walk_at(n, s - L.l1));
  }
  return normalize(Address::OnPath(n, 2, s - L.l1 - L.lw));
}

Address ImplicitTower::decode_step(const Address &in) const {
  if (in.level == 0) throw std::invalid_argument("level 0 has no map below it");
  const Address a = normalize(in);
  const std::size_t n = a.level - 1;
  if (n == 0) return Address::InF(0, 0);
  if (sabotage_ == Sabotage::kConstantDecode) return Address::Hub(n);
  switch (a.kind) {
    case AddressKind::kHub:
      if (sabotage_ == Sabotage::kHubMisrouted)
        return normalize(Address::OnPath(n, 2, l2(n) - 1));
      return Address::Hub(n);
    case AddressKind::kInF:
      return Address::InF(n, base_->map_down(n + 1, a.index));
    case AddressKind::kOnPath:
      break;
  }
  const Lengths &L = lengths(n);
  const BigInt P = L.l1 + L.lw + L.l2;
  if (a.path == 1) {
    // e_n, then (p1 w p2)^2, then p1, then the exit edge.
    BigInt r = a.index - (sabotage_ == Sabotage::kSegmentOffByOne ? 2 : 1);
    if (r < 0) return Address::Hub(n);
    if (r < 2 * P) {
      BigInt b = r / P;
      return decode_group(n, r - b * P, L);
    }
    BigInt s = r - 2 * P;
    if (s <= L.l1) return normalize(Address::OnPath(n, 1, s));
    return Address::InF(n, base_->forward_anchor(n, n + 1));
  }
  // The entry edge, then p2, then (p1 w p2)^2, then e_n.
  BigInt r = a.index - 1;
  if (r < 0) return Address::InF(n, base_->backward_anchor(n, n + 1));
  if (r <= L.l2) return normalize(Address::OnPath(n, 2, r));
  BigInt r2 = r - L.l2;
  if (r2 < 2 * P) {
    BigInt b = r2 / P;
    return decode_group(n, r2 - b * P, L);
  }
  return Address::Hub(n);
}

Address ImplicitTower::decode(const Address &a, std::size_t target) const {
  if (target > a.level)
    throw std::invalid_argument("decode target is deeper than the address");
  Address cur = normalize(a);
  while (cur.level > target) cur = decode_step(cur);
  return cur;
}

std::vector<Address> ImplicitTower::step(const Address &in, int dir) const {
  if (dir != 1 && dir != -1) throw std::invalid_argument("direction must be +-1");
  const Address a = normalize(in);
  const std::size_t n = a.level;
  if (n == 0) return {a};
  std::vector<Address> out;
  switch (a.kind) {
    case AddressKind::kHub:
      out.push_back(Address::Hub(n));
      out.push_back(dir > 0 ? normalize(Address::OnPath(n, 1, 1))
                            : normalize(Address::OnPath(n, 2, l2(n) - 1)));
      break;
    case AddressKind::kOnPath: {
      BigInt j = a.index + dir;
      if (dir > 0 && sabotage_ == Sabotage::kStepSkips) {
        const BigInt len = a.path == 1 ? l1(n) : l2(n);
        j = std::min<BigInt>(a.index + 2, len);
      }
      out.push_back(normalize(Address::OnPath(n, a.path, j)));
      break;
    }
    case AddressKind::kInF: {
      auto nbrs = dir > 0 ? base_->successors(n, a.index)
                          : base_->predecessors(n, a.index);
      for (auto &v : nbrs) out.push_back(Address::InF(n, std::move(v)));
      if (dir > 0 && a.index == base_->backward_anchor(n, n))
        out.push_back(normalize(Address::OnPath(n, 2, 1)));
      if (dir < 0 && a.index == base_->forward_anchor(n, n))
        out.push_back(normalize(Address::OnPath(n, 1, l1(n) - 1)));
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BigInt ImplicitTower::vertex_count(std::size_t n) const {
  if (n == 0) return 1;
  const Lengths &L = lengths(n);
  return L.l1 + L.l2 - 1 + base_->vertex_count(n);
}

std::vector<Address> ImplicitTower::all_vertices(std::size_t n) const {
  if (vertex_count(n) > 20'000'000)
    throw DepthExceeded("level " + std::to_string(n) +
                        " is too large to enumerate");
  if (n == 0) return {Address::InF(0, 0)};
  std::vector<Address> out{Address::Hub(n)};
  const Lengths &L = lengths(n);
  for (BigInt j = 1; j < L.l1; ++j) out.push_back(Address::OnPath(n, 1, j));
  for (BigInt j = 1; j < L.l2; ++j) out.push_back(Address::OnPath(n, 2, j));
  for (BigInt v = 0; v < base_->vertex_count(n); ++v)
    out.push_back(Address::InF(n, v));
  return out;
}

std::string ImplicitTower::label(const Address &in) const {
  const Address a = normalize(in);
  switch (a.kind) {
    case AddressKind::kHub:
      return "H";
    case AddressKind::kOnPath:
      return "p" + std::to_string(a.path) + ":" + to_decimal(a.index);
    case AddressKind::kInF:
      return "F:" + base_->vertex_name(a.level, a.index);
  }
  throw std::logic_error("unreachable");
}

std::optional<Address> ImplicitTower::parse_label(std::size_t level,
                                                  const std::string &s) const {
  try {
    if (s == "H") return normalize(Address::Hub(level));
    if (s.rfind("F:", 0) == 0) {
      auto v = base_->vertex_by_name(level, s.substr(2));
      if (!v) return std::nullopt;
      return normalize(Address::InF(level, *v));
    }
    if (s.size() > 3 && (s.rfind("p1:", 0) == 0 || s.rfind("p2:", 0) == 0))
      return normalize(
          Address::OnPath(level, s[1] - '0', from_decimal(s.substr(3))));
  } catch (const std::out_of_range &) {
  } catch (const std::invalid_argument &) {
  }
  return std::nullopt;
}

std::vector<BigInt> ImplicitTower::p1_occurrences(std::size_t n) const {
  const BigInt P = group_length(n);
  return {BigInt(1), 1 + P, 1 + 2 * P};
}

std::pair<BigInt, BigInt> ImplicitTower::q_interval(std::size_t m,
                                                    std::size_t n) const {
  if (n < 1 || m <= n)
    throw std::invalid_argument("q_interval needs m > n >= 1");
  // The mid p_{1,k} of each image word, composed from level m-1 down to n.
  BigInt lo = 0;
  for (std::size_t k = n; k < m; ++k) lo += 1 + group_length(k);
  return {lo, lo + l1(n)};
}

ThreadPrefix thread_through(const ImplicitTower &t, const Address &top) {
  ThreadPrefix p;
  p.entries.resize(top.level + 1);
  Address cur = t.normalize(top);
  for (std::size_t k = top.level + 1; k-- > 0;) {
    p.entries[k] = cur;
    if (k > 0) cur = t.decode_step(cur);
  }
  return p;
}

bool is_compatible(const ImplicitTower &t, const ThreadPrefix &p) {
  for (std::size_t k = 0; k < p.entries.size(); ++k)
    if (p.entries[k].level != k) return false;
  for (std::size_t k = 0; k + 1 < p.entries.size(); ++k)
    if (t.decode_step(p.entries[k + 1]) != t.normalize(p.entries[k])) return false;
  return true;
}

ThreadPrefix push_forward(const ImplicitTower &t, const ThreadPrefix &p,
                          std::size_t steps) {
  if (p.entries.empty() || steps > p.depth())
    throw std::invalid_argument("push_forward: prefix depth " +
                                std::to_string(p.entries.size() - 1) +
                                " cannot absorb " + std::to_string(steps) +
                                " steps");
  ThreadPrefix cur = p;
  for (std::size_t s = 0; s < steps; ++s) {
    ThreadPrefix next;
    next.entries.reserve(cur.entries.size() - 1);
    for (std::size_t j = 0; j + 1 < cur.entries.size(); ++j) {
      auto succ = t.step(cur.entries[j + 1], +1);
      Address image = t.decode_step(succ.front());
      for (std::size_t i = 1; i < succ.size(); ++i)
        if (t.decode_step(succ[i]) != image)
          throw std::logic_error("covering map is not +directional at " +
                                 t.label(cur.entries[j + 1]));
      next.entries.push_back(std::move(image));
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<ScheduleEntry> schedule(const ImplicitTower &t, std::size_t n0,
                                    std::size_t kmax, ScheduleMode mode) {
  if (n0 < 1 || kmax < 1)
    throw std::invalid_argument("schedule needs n0 >= 1 and kmax >= 1");
  std::vector<ScheduleEntry> out;
  BigInt n = n0;
  for (std::size_t k = 0; k < kmax; ++k) {
    if (n > ImplicitTower::kMaxLevel)
      throw DepthExceeded("schedule stage " + std::to_string(k + 1) +
                          " starts at level " + to_decimal(n) +
                          ", beyond the arithmetic limit");
    ScheduleEntry e;
    e.n = n;
    e.l1_n = t.l1(static_cast<std::size_t>(n));
    if (mode == ScheduleMode::kStrict || k == 0)
      e.m = n + e.l1_n + 1;
    else
      e.m = out.back().m + 2;
    out.push_back(e);
    n = e.m + 1;
  }
  return out;
}

std::string to_string(ScheduleMode m) {
  return m == ScheduleMode::kStrict ? "strict" : "relaxed";
}

}  // namespace zdchaos
