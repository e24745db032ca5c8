//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zdchaos/anchors.hpp"
#include "zdchaos/covering.hpp"

namespace zdchaos {

// Line-oriented covering description:
//
//   covering <name>
//   level 1
//   vertices <id> <id> ...
//   edges
//   <u> <v>
//   map
//   <v> -> <u>
//   anchors <v1> <v2>      (optional)
//   end
//   level 2
//   ...
//
// Level 0 is the implicit singleton "v0"; the map block of level 1 may be
// omitted. Blank lines and text after '#' are ignored.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct CoveringFile {
  CoveringSequence covering;
  std::vector<AnchorHint> hints;  // indexed by level; hints[0] unused
};

CoveringFile parse_covering(std::string_view text);
CoveringFile load_covering(const std::string &path);

// Inverse of parse_covering. Throws std::invalid_argument when a vertex name
// cannot be written (whitespace, '#', a keyword) or level 0 is not "v0".
std::string write_covering(const CoveringSequence &c,
                           const std::vector<AnchorHint> &hints = {});

}  // namespace zdchaos
