//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdchaos/address.hpp"
#include "zdchaos/bigint.hpp"

namespace zdchaos {

struct Witness {
  std::string key;  // no whitespace, no '='
  BigInt value;
  friend bool operator==(const Witness &, const Witness &) = default;
};

// Evidence for one claim at a finite resolution. The wire format is
//
//   CLAIM <id> LEVEL <n> VERDICT <pass|fail> MODE <strict|relaxed>
//   WITNESS <key>=<decimal>
//   ...
//
// Notes and cost figures are diagnostics and never part of the wire format.
struct WitnessReport {
  std::string claim;
  std::size_t level = 0;
  bool pass = false;
  ScheduleMode mode = ScheduleMode::kRelaxed;
  std::vector<Witness> witnesses;

  std::vector<std::string> notes;
  double elapsed_ms = 0;
  std::uint64_t nodes_visited = 0;

  void add(std::string key, BigInt value) {
    witnesses.push_back({std::move(key), std::move(value)});
  }
  std::optional<BigInt> find(std::string_view key) const;
  // Throws std::out_of_range when absent.
  const BigInt &get(std::string_view key) const;

  std::string to_text() const;
  // Parses exactly one report; throws std::invalid_argument on bad input.
  static WitnessReport parse(std::string_view text);
  // Splits a stream of concatenated reports.
  static std::vector<WitnessReport> parse_all(std::string_view text);
};

}  // namespace zdchaos
