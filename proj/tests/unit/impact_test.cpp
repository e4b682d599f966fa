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

#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "fraccite/citation.hpp"
#include "fraccite/error.hpp"
#include "fraccite/impact.hpp"
#include "fraccite/text.hpp"
#include "fraccite/units.hpp"
#include "test_support.hpp"

namespace fraccite {
namespace {

using testing::data_path;
using testing::record;

const CitationWindow kFive(2005, 2009);

TEST(FractionalCount, ExactAndOrderFree) {
  FractionalCount a, b;
  a.add({4});
  a.add({5});
  EXPECT_DOUBLE_EQ(a.value(), 0.45);
  EXPECT_EQ(a.exact(), boost::multiprecision::cpp_rational(9, 20));
  b.add({5});
  b.add({4});
  EXPECT_EQ(a, b);
  FractionalCount c;
  c.add({3}, 3);
  EXPECT_EQ(c.exact(), 1);
  EXPECT_EQ(c.terms(), 3u);
}

TEST(PerPaper, Examples) {
  Corpus cited{record("twice", 2005, {}), record("never", 2005, {}), record("once", 2005, {})};
  std::vector<CitationLink> links{{"c4", "twice", 2006, {4}, false},
                                  {"c5", "twice", 2007, {5}, false},
                                  {"c1", "once", 2006, {1}, false}};
  auto s = per_paper_scores(links, cited, kFive);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].ic, 2u);
  EXPECT_DOUBLE_EQ(s[0].fc_value(), 0.45);
  EXPECT_EQ(s[1].ic, 0u);
  EXPECT_EQ(s[1].fc_value(), 0.0);
  EXPECT_EQ(s[2].ic, 1u);
  EXPECT_EQ(s[2].fc_value(), 1.0);
}

TEST(UnitImpact, TableRowsFromPrintedTotals) {
  auto chem = make_unit_impact("Dep Chem", kFive, 404, 4950, 166.36);
  EXPECT_EQ(text::format_fixed(chem.ic_per_p, 2), "12.25");
  EXPECT_EQ(text::format_fixed(chem.fc_per_p, 2), "0.41");
  auto automot = make_unit_impact("Dep Automot", kFive, 5, 8, 0.3);
  EXPECT_DOUBLE_EQ(automot.ic_per_p, 1.6);
  EXPECT_DOUBLE_EQ(automot.fc_per_p, 0.06);
  EXPECT_THROW(make_unit_impact("x", kFive, 0, 0, 0), InvalidArgument);
}

TEST(ImpactTable, FixtureRatiosMatchPrinted) {
  std::ifstream in(data_path("departments.tsv"));
  auto t = read_impact_tsv(in);
  ASSERT_EQ(t.unit_count(), 27u);
  ASSERT_EQ(t.windows.size(), 2u);
  // Independent re-read of the printed columns.
  std::ifstream raw(data_path("departments.tsv"));
  std::string line;
  int checked = 0;
  while (std::getline(raw, line)) {
    if (line.empty() || line[0] == '#' || line.starts_with("unit\t")) continue;
    std::istringstream f(line);
    std::string unit, window, p, ic, fc, icp, fcp;
    std::getline(f, unit, '\t');
    std::getline(f, window, '\t');
    std::getline(f, p, '\t');
    std::getline(f, ic, '\t');
    std::getline(f, fc, '\t');
    std::getline(f, icp, '\t');
    std::getline(f, fcp, '\t');
    std::size_t u = 0;
    while (t.unit(u) != unit) ++u;
    const auto& row = t.rows[u][t.window_index(CitationWindow::parse(window))];
    EXPECT_NEAR(row.ic_per_p, std::stod(icp), 0.005) << unit << " " << window;
    EXPECT_NEAR(row.fc_per_p, std::stod(fcp), 0.005) << unit << " " << window;
    ++checked;
  }
  EXPECT_EQ(checked, 54);
}

TEST(ImpactTable, SingleUnitSingleWindow) {
  Corpus cited{record("p", 2005, {"Tsinghua Univ, Dep Chem"})};
  std::istringstream cfg("min_pubs = 1\n[Dep Chem]\nquery = ad=(dep chem)\n");
  auto a = assign_units(parse_unit_definitions(cfg), cited);
  auto t = impact_table(a, cited, {{"c", "p", 2006, {2}, false}}, {kFive});
  ASSERT_EQ(t.unit_count(), 1u);
  ASSERT_EQ(t.rows[0].size(), 1u);
  EXPECT_EQ(t.rows[0][0].integer_citations, 1u);
  EXPECT_DOUBLE_EQ(t.rows[0][0].fractional_citations, 0.5);
}

// Naive aggregation straight from the link list.
TEST(ImpactTable, EqualsBruteForceAndMeanOfPerPaper) {
  std::mt19937_64 rng(8);
  Corpus cited;
  std::string cfg = "min_pubs = 1\n";
  for (int u = 0; u < 4; ++u) cfg += "[U" + std::to_string(u) + "]\nquery = ad=(unit" + std::to_string(u) + ")\n";
  for (int i = 0; i < 60; ++i) {
    std::vector<std::string> addr{"unit" + std::to_string(i % 4)};
    if (i % 10 == 0) addr.push_back("unit" + std::to_string((i + 1) % 4));
    cited.push_back(record("P" + std::to_string(i), 2005, addr));
  }
  Corpus citing;
  for (int j = 0; j < 400; ++j) {
    std::vector<std::string> refs;
    for (int r = 0; r < 1 + static_cast<int>(rng() % 4); ++r) refs.push_back("P" + std::to_string(rng() % 60));
    citing.push_back(record("C" + std::to_string(j), 2005 + static_cast<int>(rng() % 6), {}, 4 + rng() % 40, refs));
  }
  std::istringstream cfg_in(cfg);
  auto a = assign_units(parse_unit_definitions(cfg_in), cited);
  auto links = resolve_citations(cited, citing);
  std::vector<CitationWindow> ws{CitationWindow(2005, 2007), kFive};
  auto t = impact_table(a, cited, links, ws);
  ASSERT_EQ(t.unit_count(), 4u);
  for (std::size_t u = 0; u < 4; ++u) {
    const auto& members = a.units[u].members;
    for (std::size_t w = 0; w < ws.size(); ++w) {
      std::uint64_t ic = 0;
      double fc = 0;
      for (const auto& l : links) {
        if (!ws[w].contains(l.citing_year) || !members.contains(l.cited_id)) continue;
        ++ic;
        fc += 1.0 / l.weight.denominator;
      }
      const auto& row = t.rows[u][w];
      EXPECT_EQ(row.publications, members.size());
      EXPECT_EQ(row.integer_citations, ic);
      EXPECT_NEAR(row.fractional_citations, fc, 1e-12);
      EXPECT_DOUBLE_EQ(row.ic_per_p, static_cast<double>(ic) / members.size());

      auto scores = per_paper_scores(links, cited, ws[w]);
      double sum = 0;
      for (const auto& s : scores)
        if (members.contains(s.paper_id)) sum += s.fc_value();
      EXPECT_NEAR(sum / members.size(), row.fc_per_p, 1e-12);
    }
    const auto& narrow = t.rows[u][0];
    const auto& wide = t.rows[u][1];
    EXPECT_LE(narrow.integer_citations, wide.integer_citations);
    EXPECT_LE(narrow.fractional_citations, wide.fractional_citations);
  }
  // Overlapping members double count across rows.
  std::uint64_t row_sum = 0;
  for (std::size_t u = 0; u < 4; ++u) row_sum += t.rows[u][1].integer_citations;
  std::uint64_t union_ic = 0;
  for (const auto& l : links) union_ic += kFive.contains(l.citing_year) ? 1 : 0;
  EXPECT_GE(row_sum, union_ic);
}

TEST(ImpactTable, ScalingByReferenceLength) {
  Corpus cited{record("A1", 2005, {"field a"}), record("B1", 2005, {"field b"})};
  Corpus citing;
  for (int j = 0; j < 6; ++j) {
    citing.push_back(record("CA" + std::to_string(j), 2006, {}, 10, {"A1"}));
    citing.push_back(record("CB" + std::to_string(j), 2006, {}, 50, {"B1"}));
  }
  std::istringstream cfg("min_pubs = 1\n[A]\nquery = ad=(field a)\n[B]\nquery = ad=(field b)\n");
  auto a = assign_units(parse_unit_definitions(cfg), cited);
  auto t = impact_table(a, cited, resolve_citations(cited, citing), {kFive});
  EXPECT_EQ(t.rows[0][0].integer_citations, t.rows[1][0].integer_citations);
  EXPECT_NEAR(t.rows[0][0].fc_per_p / t.rows[1][0].fc_per_p, 5.0, 1e-12);
}

TEST(ImpactTsv, RoundTripAndErrors) {
  std::ifstream in(data_path("departments.tsv"));
  auto t = read_impact_tsv(in);
  std::ostringstream out;
  write_impact_tsv(out, t);
  std::istringstream back(out.str());
  auto t2 = read_impact_tsv(back);
  ASSERT_EQ(t2.unit_count(), t.unit_count());
  for (std::size_t u = 0; u < t.unit_count(); ++u)
    for (std::size_t w = 0; w < 2; ++w) EXPECT_EQ(t2.rows[u][w].fc_per_p, t.rows[u][w].fc_per_p);

  auto bad = [](const std::string& s) {
    std::istringstream i(s);
    return read_impact_tsv(i);
  };
  EXPECT_THROW(bad("unit\twindow\tP\tIC\n"), ParseError);
  EXPECT_THROW(bad("unit\twindow\tP\tIC\tFC\nA\t2005-2007\t0\t1\t1\n"), ParseError);
  EXPECT_THROW(bad("unit\twindow\tP\tIC\tFC\nA\t2005-2007\tx\t1\t1\n"), ParseError);
  EXPECT_THROW(bad("unit\twindow\tP\tIC\tFC\nA\t2005-2007\t1\t1\t1\nB\t2005-2009\t1\t1\t1\n"), ParseError);
  EXPECT_THROW(bad(""), ParseError);
}

}  // namespace
}  // namespace fraccite
