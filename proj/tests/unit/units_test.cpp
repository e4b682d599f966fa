/*
 * Copyright 2026 The fraccite Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "fraccite/error.hpp"
#include "fraccite/synthetic.hpp"
#include "fraccite/units.hpp"
#include "test_support.hpp"

namespace fraccite {
namespace {

using testing::record;

std::vector<UnitDefinition> parse_defs(const std::string& s) {
  std::istringstream in(s);
  return parse_unit_definitions(in);
}

TEST(UnitConfig, ParsesStepsContinuationAndDefaults) {
  auto d = parse_defs(
      "# header\nmin_pubs = 3\n\n[Dep Chem]\n1 = ad=(tsinghua univ same dep chem)\n"
      "query = #1\n   and py=2005\n\n[Dep Phys]\nmin_pubs = 7\nquery = ad=(dep phys)\n");
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].name, "Dep Chem");
  EXPECT_EQ(d[0].min_pubs, 3u);
  ASSERT_EQ(d[0].steps.size(), 1u);
  EXPECT_EQ(d[0].query.kind, QueryExpr::Kind::And);
  EXPECT_EQ(d[1].min_pubs, 7u);
}

TEST(UnitConfig, DefaultThresholdIsFive) {
  auto d = parse_defs("[U]\nquery = py=2005\n");
  EXPECT_EQ(d[0].min_pubs, 5u);
}

TEST(UnitConfig, Errors) {
  EXPECT_THROW(parse_defs("[U]\nquery = py=2005\n[U]\nquery = py=2006\n"), ConfigError);
  EXPECT_THROW(parse_defs("[U]\n1 = py=2005\n"), ConfigError);
  EXPECT_THROW(parse_defs("[U]\nquery = ad=(\n"), ConfigError);
  EXPECT_THROW(parse_defs("query = py=2005\n"), ConfigError);
  EXPECT_THROW(parse_defs("[U]\nthis line has no equals sign\n"), ConfigError);
  EXPECT_THROW(read_unit_definitions("/nonexistent/units.cfg"), IoError);
}

TEST(AssignUnits, BelowThresholdExcludedAndReported) {
  Corpus c;
  for (int i = 0; i < 4; ++i) c.push_back(record("r" + std::to_string(i), 2005, {"Tsinghua Univ, Dep Econ"}));
  auto a = assign_units(parse_defs("[Dep Econ]\nquery = ad=(dep econ)\n"), c);
  EXPECT_TRUE(a.units.empty());
  ASSERT_EQ(a.excluded.size(), 1u);
  EXPECT_EQ(a.excluded[0].publications, 4u);
  std::ostringstream rep;
  write_assignment_report(rep, a);
  EXPECT_NE(rep.str().find("Dep Econ\texcluded\t4"), std::string::npos);
}

TEST(AssignUnits, NoUnits) {
  auto a = assign_units({}, Corpus{record("a", 2005, {"x"})});
  EXPECT_TRUE(a.units.empty());
  EXPECT_TRUE(a.excluded.empty());
}

TEST(AssignUnits, OverlapCountsFullyInEachUnit) {
  Corpus c{record("a", 2005, {"Tsinghua Univ, Dep Chem", "Tsinghua Univ, Dep Phys"}),
           record("b", 2005, {"Tsinghua Univ, Dep Chem"})};
  auto a = assign_units(parse_defs("min_pubs = 1\n[C]\nquery = ad=(dep chem)\n[P]\nquery = ad=(dep phys)\n"), c);
  ASSERT_EQ(a.units.size(), 2u);
  EXPECT_EQ(a.units[0].members, (IdSet{"a", "b"}));
  EXPECT_EQ(a.units[1].members, IdSet{"a"});
  EXPECT_EQ(a.overlap_count, 1u);
}

TEST(AssignUnits, UnresolvedReferenceRecordedPerUnit) {
  auto a = assign_units(parse_defs("min_pubs = 1\n[Bad]\nquery = #9\n[Good]\nquery = py=2005\n"),
                        Corpus{record("a", 2005, {"x"})});
  ASSERT_EQ(a.failures.size(), 1u);
  EXPECT_EQ(a.failures[0].name, "Bad");
  ASSERT_EQ(a.units.size(), 1u);
}

TEST(AssignUnits, TwentySevenSyntheticUnitsMatchLabels) {
  SyntheticSpec spec;
  FieldProfile f;
  f.name = "all";
  f.rate = 0.0;
  for (int u = 1; u <= 27; ++u) f.unit_names.push_back("Unit " + std::to_string(u));
  spec.fields = {f};
  spec.papers_per_unit = 6;
  auto corpus = generate(spec);
  std::istringstream cfg(unit_definitions_for(spec));
  auto a = assign_units(parse_unit_definitions(cfg), corpus.cited);
  ASSERT_EQ(a.units.size(), 27u);
  std::map<std::string, IdSet> truth;
  for (const auto& l : corpus.labels) truth[l.unit].insert(l.paper_id);
  for (const auto& u : a.units) EXPECT_EQ(u.members, truth.at(u.name)) << u.name;
  EXPECT_EQ(a.overlap_count, 0u);
}

}  // namespace
}  // namespace fraccite
