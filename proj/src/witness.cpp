//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "zdchaos/witness.hpp"

#include <sstream>
#include <stdexcept>

namespace zdchaos {

std::optional<BigInt> WitnessReport::find(std::string_view key) const {
  for (const auto &w : witnesses)
    if (w.key == key) return w.value;
  return std::nullopt;
}

const BigInt &WitnessReport::get(std::string_view key) const {
  for (const auto &w : witnesses)
    if (w.key == key) return w.value;
  throw std::out_of_range("report " + claim + " has no witness '" +
                          std::string(key) + "'");
}

std::string WitnessReport::to_text() const {
  std::string s = "CLAIM " + claim + " LEVEL " + std::to_string(level) +
                  " VERDICT " + (pass ? "pass" : "fail") + " MODE " +
                  to_string(mode) + "\n";
  for (const auto &w : witnesses)
    s += "WITNESS " + w.key + "=" + to_decimal(w.value) + "\n";
  return s;
}

std::vector<WitnessReport> WitnessReport::parse_all(std::string_view text) {
  std::vector<WitnessReport> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string &why) {
    throw std::invalid_argument("report line " + std::to_string(lineno) + ": " +
                                why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "CLAIM") {
      WitnessReport r;
      std::string kw_level, kw_verdict, verdict, kw_mode, mode, extra;
      if (!(ls >> r.claim >> kw_level >> r.level >> kw_verdict >> verdict >>
            kw_mode >> mode) ||
          kw_level != "LEVEL" || kw_verdict != "VERDICT" || kw_mode != "MODE" ||
          (ls >> extra))
        fail("malformed CLAIM header");
      if (verdict != "pass" && verdict != "fail") fail("bad verdict " + verdict);
      if (mode != "strict" && mode != "relaxed") fail("bad mode " + mode);
      r.pass = verdict == "pass";
      r.mode = mode == "strict" ? ScheduleMode::kStrict : ScheduleMode::kRelaxed;
      out.push_back(std::move(r));
    } else if (tag == "WITNESS") {
      if (out.empty()) fail("WITNESS before CLAIM");
      std::string body, extra;
      ls >> body;
      if (ls >> extra) fail("trailing text after witness");
      auto eq = body.find('=');
      if (eq == std::string::npos || eq == 0) fail("witness needs key=value");
      try {
        out.back().add(body.substr(0, eq), from_decimal(body.substr(eq + 1)));
      } catch (const std::invalid_argument &e) {
        fail(e.what());
      }
    } else {
      fail("unknown record '" + tag + "'");
    }
  }
  return out;
}

WitnessReport WitnessReport::parse(std::string_view text) {
  auto all = parse_all(text);
  if (all.size() != 1)
    throw std::invalid_argument("expected exactly one report, found " +
                                std::to_string(all.size()));
  return std::move(all.front());
}

}  // namespace zdchaos
