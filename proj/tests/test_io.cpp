//
// zdchaos - Copyright 2026 The zdchaos Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include "zdchaos/covering_file.hpp"
#include "zdchaos/witness.hpp"

using namespace zdchaos;

namespace {

const char *kTwoCycle = R"(# two-cycle over a loop
covering tiny
level 1
vertices a
edges
a a
end
level 2
vertices x y
edges
x y
y x
map
x -> a
y -> a
anchors x y
end
)";

std::size_t error_line(const std::string &text) {
  try {
    parse_covering(text);
  } catch (const ParseError &e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(CoveringFile, ParsesLevelsMapsAndHints) {
  CoveringFile f = parse_covering(kTwoCycle);
  const CoveringSequence &c = f.covering;
  EXPECT_EQ(c.name, "tiny");
  ASSERT_EQ(c.depth(), 2u);
  EXPECT_EQ(c.levels[0]->name(0), "v0");
  EXPECT_EQ(c.levels[2]->num_edges(), 2u);
  EXPECT_TRUE(c.hom_into(2).flags().is_cover());
  EXPECT_TRUE(c.hom_into(1).flags().is_cover());
  ASSERT_EQ(f.hints.size(), 3u);
  EXPECT_EQ(f.hints[2].v1, c.levels[2]->index("x"));
  EXPECT_EQ(f.hints[2].v2, c.levels[2]->index("y"));
  EXPECT_FALSE(f.hints[1].v1.has_value());
}

TEST(CoveringFile, RoundTrip) {
  CoveringFile f = parse_covering(kTwoCycle);
  std::string text = write_covering(f.covering, f.hints);
  CoveringFile g = parse_covering(text);
  ASSERT_EQ(g.covering.depth(), 2u);
  for (std::size_t n = 0; n <= 2; ++n) EXPECT_EQ(*g.covering.levels[n], *f.covering.levels[n]);
  EXPECT_EQ(g.covering.hom_into(2).map(), f.covering.hom_into(2).map());
  EXPECT_EQ(g.hints[2].v1, f.hints[2].v1);
  EXPECT_EQ(write_covering(g.covering, g.hints), text);
}

TEST(CoveringFile, ErrorsCarryLineNumbers) {
  std::string t = kTwoCycle;
  EXPECT_EQ(error_line(""), 1u);
  EXPECT_THROW(parse_covering(""), ParseError);
  // Unknown vertex on an edge line.
  std::string bad = t;
  bad.replace(bad.find("y x"), 3, "y z");
  EXPECT_EQ(error_line(bad), 12u);
  // Map target missing from the level below.
  bad = t;
  bad.replace(bad.find("y -> a"), 6, "y -> b");
  EXPECT_EQ(error_line(bad), 15u);
  // A vertex left unmapped is reported at its level header.
  bad = t;
  bad.replace(bad.find("y -> a\n"), 7, "");
  EXPECT_EQ(error_line(bad), 8u);
  // Missing end.
  bad = t;
  bad.replace(bad.rfind("end"), 3, "");
  EXPECT_GT(error_line(bad), 0u);
  // Level out of order.
  bad = t;
  bad.replace(bad.find("level 2"), 7, "level 3");
  EXPECT_EQ(error_line(bad), 8u);
  try {
    parse_covering(bad);
  } catch (const ParseError &e) {
    EXPECT_EQ(std::string(e.what()).rfind("line 8: ", 0), 0u);
  }
}

TEST(CoveringFile, UnwritableNamesAreRejected) {
  CoveringFile f = parse_covering(kTwoCycle);
  auto names = f.covering.levels[2]->names();
  names[0] = "has space";
  auto g = std::make_shared<const DirectedGraph>(
      DirectedGraph::FromSortedNames(names, f.covering.levels[2]->edges()));
  CoveringSequence c = f.covering;
  c.levels[2] = g;
  c.homs[1] = GraphHom(g, c.levels[1], c.homs[1].map());
  EXPECT_THROW(write_covering(c), std::invalid_argument);
}

TEST(Witness, TextRoundTrip) {
  WitnessReport r;
  r.claim = "property2";
  r.level = 3;
  r.pass = true;
  r.mode = ScheduleMode::kStrict;
  r.add("left.t", -22);
  r.add("huge", BigInt("123456789012345678901234567890123456789"));
  r.notes.push_back("diagnostic only");
  const std::string text = r.to_text();
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "CLAIM property2 LEVEL 3 VERDICT pass MODE strict");
  WitnessReport back = WitnessReport::parse(text);
  EXPECT_EQ(back.claim, r.claim);
  EXPECT_EQ(back.level, r.level);
  EXPECT_EQ(back.pass, r.pass);
  EXPECT_EQ(back.mode, r.mode);
  EXPECT_EQ(back.witnesses, r.witnesses);
  EXPECT_TRUE(back.notes.empty());
  EXPECT_EQ(back.get("left.t"), -22);
  EXPECT_THROW(back.get("absent"), std::out_of_range);
  EXPECT_FALSE(back.find("absent").has_value());
}

TEST(Witness, StreamsAndBadInput) {
  WitnessReport a, b;
  a.claim = "density";
  b.claim = "invariant";
  b.pass = true;
  b.add("checked", 4);
  auto all = WitnessReport::parse_all(a.to_text() + b.to_text());
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[1].claim, "invariant");
  EXPECT_THROW(WitnessReport::parse(a.to_text() + b.to_text()), std::invalid_argument);
  EXPECT_THROW(WitnessReport::parse("CLAIM x LEVEL y VERDICT pass MODE strict\n"),
               std::invalid_argument);
  EXPECT_THROW(WitnessReport::parse("CLAIM x LEVEL 1 VERDICT maybe MODE strict\n"),
               std::invalid_argument);
  EXPECT_THROW(WitnessReport::parse("CLAIM x LEVEL 1 VERDICT pass MODE strict\nWITNESS k=1x\n"),
               std::invalid_argument);
  EXPECT_THROW(WitnessReport::parse("WITNESS k=1\n"), std::invalid_argument);
}
