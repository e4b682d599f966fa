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
#include <set>
#include <sstream>

#include "fraccite/error.hpp"
#include "fraccite/reporting.hpp"
#include "test_support.hpp"

namespace fraccite {
namespace {

using testing::data_path;
using testing::slurp;

const CitationWindow kFive(2005, 2009);

ImpactTable departments() {
  std::ifstream in(data_path("departments.tsv"));
  return read_impact_tsv(in);
}

// Published rankings spell some names differently from the count table.
std::string canonical_name(std::string s) {
  if (s == "Dep Chinese Language & Literature") return "Dep Chinese Languages";
  for (auto p = s.find("Engr"); p != std::string::npos; p = s.find("Engr")) s.replace(p, 4, "Engn");
  return s;
}

struct PrintedRow {
  std::string left, right, change;
};

void expect_matches(const RankingTable& a, const RankingTable& b, const std::vector<PrintedRow>& printed,
                    const std::set<std::string>& misprinted) {
  ASSERT_EQ(a.rows.size(), printed.size());
  auto changes = rank_change(a, b);
  for (std::size_t i = 0; i < printed.size(); ++i) {
    EXPECT_EQ(a.rows[i].unit, canonical_name(printed[i].left)) << "row " << i + 1;
    EXPECT_EQ(b.rows[i].unit, canonical_name(printed[i].right)) << "row " << i + 1;
    if (misprinted.contains(b.rows[i].unit)) continue;
    EXPECT_EQ(render_delta(changes[i].delta), printed[i].change) << b.rows[i].unit;
  }
}

TEST(RankUnits, TotalsFiveYearWindow) {
  auto t = departments();
  std::vector<PrintedRow> printed{
      {"Dep Chem", "Dep Chem", ""},
      {"Dep Mat Sci & Engr", "Dep Mat Sci & Engr", ""},
      {"Dep Phys", "Dep Phys", ""},
      {"Dep Chem Engr", "Dep Elect Engr", "+3"},
      {"Dep Automat", "Dep Automat", ""},
      {"Dep Engr Mech", "Dep Chem Engr", "-2"},
      {"Dep Elect Engr", "Dep Engr Mech", "-1"},
      {"Dep Environm Sci & Engr", "Dep Precis & Mechanol", "+3"},
      {"Dep Mech Engr", "Dep Comp Sci & Tech", "+1"},
      {"Dep Comp Sci & Tech", "Dep Mech Engr", "-1"},
      {"Dep Precis & Mechanol", "Dep Environm Sci & Engr", "-3"},
      {"Dep Biomed Engr", "Dep Engr Phys", "+3"},
      {"Inst Nucl & New Energy Tech", "Dep Biomed Engr", "-1"},
      {"Dep Thermal Engr", "Inst Nucl & New Energy Tech", "-1"},
      {"Dep Engr Phys", "Dep Thermal Engr", "-1"},
      {"Inst Microelect", "Dep Civil Engr", "+2"},
      {"Sch Life Sci", "Inst Microelect", "+2"},
      {"Dep Civil Engr", "Dep Bldg Sci", "+1"},
      {"Dep Bldg Sci", "Sch Life Sci", "-2"},
      {"Dep Econ", "Dep Econ", ""},
      {"Sch Software", "Sch Software", ""},
      {"Dep Pharmaceut Sci", "Dep Pharmaceut Sci", ""},
      {"Dep Ind Engn", "Sch Publ Policy & Management", "+1"},
      {"Sch Publ Policy & Management", "Dep Ind Engn", "-1"},
      {"Dep Mat Sci", "Dep Mat Sci", ""},
      {"Dep Chinese Language & Literature", "Dep Chinese Language & Literature", ""},
      {"Dep Automot", "Dep Automot", ""},
  };
  auto ic = rank_units(t, Parameter::IC, kFive);
  auto fc = rank_units(t, Parameter::FC, kFive);
  // The printed +2 for Inst Microelect contradicts its own two columns; its FC
  // equals that of Dep Civil Engn, so both share rank 16.
  expect_matches(ic, fc, printed, {"Inst Microelect"});
  auto changes = rank_change(ic, fc);
  EXPECT_EQ(changes[16].unit, "Inst Microelect");
  EXPECT_EQ(fc.rows[15].rank, 16u);
  EXPECT_EQ(fc.rows[16].rank, 16u);
  EXPECT_EQ(changes[16].delta, 0);
  std::size_t unchanged = 0;
  for (const auto& c : changes) unchanged += c.delta == 0;
  EXPECT_EQ(unchanged, 11u);
}

TEST(RankUnits, RatiosFiveYearWindow) {
  auto t = departments();
  std::vector<PrintedRow> printed{
      {"Dep Chem", "Dep Chem", ""},
      {"Dep Environm Sci & Engn", "Dep Chinese Language & Literature", "+17"},
      {"Dep Phys", "Dep Phys", ""},
      {"Dep Chem Engn", "Dep Environm Sci & Engn", "-2"},
      {"Dep Pharmaceut Sci", "Dep Pharmaceut Sci", ""},
      {"Dep Engn Mech", "Dep Chem Engn", "-2"},
      {"Sch Life Sci", "Dep Engn Mech", "-1"},
      {"Dep Mat Sci & Engn", "Dep Civil Engn", "+1"},
      {"Dep Civil Engn", "Dep Mat Sci & Engn", "-1"},
      {"Dep Mat Sci", "Dep Mat Sci", ""},
      {"Dep Mech Engn", "Dep Automat", "+1"},
      {"Dep Automat", "Dep Mech Engn", "-1"},
      {"Sch Publ Policy & Management", "Sch Life Sci", "-6"},
      {"Dep Biomed Engn", "Sch Publ Policy & Management", "-1"},
      {"Dep Bldg Sci", "Dep Precis & Mechanol", "+2"},
      {"Dep Econ", "Dep Engn Phys", "+5"},
      {"Dep Precis & Mechanol", "Dep Bldg Sci", "-2"},
      {"Inst Nucl & New Energy Tech", "Inst Nucl & New Energy Tech", ""},
      {"Dep Chinese Language & Literature", "Dep Elect Engn", "+6"},
      {"Dep Thermal Engn", "Dep Biomed Engn", "-6"},
      {"Dep Engn Phys", "Dep Econ", "-5"},
      {"Dep Ind Engn", "Dep Thermal Engn", "-2"},
      {"Inst Microelect", "Inst Microelect", ""},
      {"Dep Automot", "Dep Comp Sci & Tech", "+2"},
      {"Dep Elect Engn", "Dep Ind Engn", "-3"},
      {"Dep Comp Sci & Tech", "Dep Automot", "-2"},
      {"Sch Software", "Sch Software", ""},
  };
  expect_matches(rank_units(t, Parameter::IcPerP, kFive), rank_units(t, Parameter::FcPerP, kFive), printed, {});
}

ImpactTable tiny(std::vector<std::pair<std::string, double>> fc) {
  ImpactTable t;
  t.windows = {kFive};
  for (const auto& [u, v] : fc) t.rows.push_back({make_unit_impact(u, kFive, 10, 10, v)});
  return t;
}

TEST(RankUnits, CompetitionTiesAndRoundingFlag) {
  auto r = rank_units(tiny({{"C", 2.0}, {"A", 3.0}, {"B", 3.0}, {"D", 1.004}, {"E", 0.996}}), Parameter::FC, kFive);
  std::vector<std::size_t> ranks;
  std::vector<std::string> names;
  for (const auto& row : r.rows) ranks.push_back(row.rank), names.push_back(row.unit);
  EXPECT_EQ(ranks, (std::vector<std::size_t>{1, 1, 3, 4, 5}));
  EXPECT_EQ(names, (std::vector<std::string>{"A", "B", "C", "D", "E"}));
  EXPECT_FALSE(r.rows[0].rounding_tie);
  EXPECT_TRUE(r.rows[3].rounding_tie);
  EXPECT_TRUE(r.rows[4].rounding_tie);
}

TEST(RankUnits, EmptyAndUnknownWindow) {
  ImpactTable empty;
  EXPECT_TRUE(rank_units(empty, Parameter::FC, kFive).rows.empty());
  EXPECT_THROW(rank_units(tiny({{"A", 1}}), Parameter::FC, CitationWindow(2001, 2002)), InvalidArgument);
}

TEST(RankChange, SignConventionAndErrors) {
  auto t = tiny({{"A", 3}, {"B", 2}, {"C", 1}});
  auto a = rank_units(t, Parameter::FC, kFive);
  auto b = a;
  std::swap(b.rows[0].unit, b.rows[2].unit);
  auto c = rank_change(a, b);
  EXPECT_EQ(c[0].unit, "C");
  EXPECT_EQ(c[0].delta, 2);
  EXPECT_EQ(render_delta(c[0].delta), "+2");
  EXPECT_EQ(render_delta(c[2].delta), "-2");
  EXPECT_EQ(render_delta(0), "");
  b.rows.pop_back();
  EXPECT_THROW(rank_change(a, b), InvalidArgument);
}

TEST(Parameters, ParseAndPrint) {
  for (auto p : {Parameter::P, Parameter::IC, Parameter::FC, Parameter::IcPerP, Parameter::FcPerP})
    EXPECT_EQ(parse_parameter(to_string(p)), p);
  EXPECT_EQ(parse_parameter("fc_per_p"), Parameter::FcPerP);
  EXPECT_THROW(parse_parameter("h-index"), InvalidArgument);
}

TEST(Coefficient, LeadingPeriodAndStars) {
  EXPECT_EQ(format_coefficient(0.9544), ".954");
  EXPECT_EQ(format_coefficient(-0.0404), "-.040");
  EXPECT_EQ(format_coefficient(1.0), "1.000");
  EXPECT_EQ(significance_stars(0.005), "**");
  EXPECT_EQ(significance_stars(0.03), "*");
  EXPECT_EQ(significance_stars(0.05), "");
}

CorrelationMatrix two_by_two(double r, double p) {
  CorrelationMatrix m;
  m.labels = {"x", "y"};
  m.n = 27;
  m.pearson = {{{1, 0}, {r, p}}, {{r, p}, {1, 0}}};
  m.spearman = m.pearson;
  return m;
}

TEST(Correlation, RenderCells) {
  auto s = render_correlation(two_by_two(0.954, 0.0001));
  EXPECT_NE(s.find(".954(**)"), std::string::npos);
  EXPECT_NE(s.find("N = 27"), std::string::npos);
  EXPECT_NE(render_correlation(two_by_two(0.4, 0.03)).find(".400(*)"), std::string::npos);
  auto none = render_correlation(two_by_two(0.1, 0.6));
  EXPECT_NE(none.find(".100\n"), std::string::npos);
  EXPECT_NE(render_correlation(two_by_two(std::nan(""), std::nan(""))).find("n/a"), std::string::npos);
}

TEST(Correlation, DepartmentStars) {
  auto m = correlation_matrix(correlation_parameters(departments()));
  auto t = correlation_text_table(m);
  ASSERT_EQ(t.rows.size(), 9u);
  EXPECT_EQ(t.rows[0][0], "P (2005)");
  EXPECT_EQ(t.rows[0][1], "1");
  EXPECT_EQ(t.rows[0][9], ".954(**)");
}

TEST(RenderTable, EmptyUnitSetGivesHeadersOnly) {
  ImpactTable empty;
  empty.windows = {kFive};
  std::ostringstream tsv, md;
  render_table(tsv, impact_text_table(empty, true), ReportFormat::Tsv);
  EXPECT_EQ(tsv.str(), "Unit\tP (05-09)\tIC (05-09)\tIC/P (05-09)\tFC (05-09)\tFC/P (05-09)\n");
  render_table(md, impact_text_table(empty, false), ReportFormat::Markdown);
  EXPECT_EQ(md.str(),
            "**Counting scores by unit**\n\n| Unit | P (05-09) | IC (05-09) | IC/P (05-09) | FC (05-09) | FC/P (05-09) |\n"
            "| --- | ---: | ---: | ---: | ---: | ---: |\n");
}

TEST(RenderTable, MarkdownEscapesPipes) {
  TextTable t;
  t.headers = {"a"};
  t.rows = {{"x|y"}};
  std::ostringstream o;
  render_table(o, t, ReportFormat::Markdown);
  EXPECT_EQ(o.str(), "| a |\n| --- |\n| x\\|y |\n");
}

TEST(ExportReport, GoldenMarkdown) {
  testing::TempDir dir("golden");
  auto files = export_report(build_report(departments(), true), ReportFormat::Markdown, dir.path());
  ASSERT_EQ(files.size(), 6u);
  for (const char* name : {"impact_table.md", "ic_vs_fc_2005-2009.md", "icp_vs_fcp_2005-2009.md", "correlations.md"})
    EXPECT_EQ(slurp(dir.path() / name), slurp(data_path(std::string("golden/") + name))) << name;
}

TEST(ExportReport, Deterministic) {
  testing::TempDir a("det_a"), b("det_b");
  auto report = build_report(departments(), true);
  for (auto f : {ReportFormat::Tsv, ReportFormat::Text, ReportFormat::Markdown}) {
    auto fa = export_report(report, f, a.path());
    auto fb = export_report(report, f, b.path());
    ASSERT_EQ(fa.size(), fb.size());
    for (std::size_t i = 0; i < fa.size(); ++i) EXPECT_EQ(slurp(fa[i]), slurp(fb[i]));
  }
}

TEST(ExportReport, UnwritableDirectory) {
  testing::TempDir d("blocked");
  std::ofstream(d.path() / "file") << "x";
  EXPECT_THROW(export_report(build_report(departments(), false), ReportFormat::Tsv, d.path() / "file" / "sub"),
               OutputError);
}

}  // namespace
}  // namespace fraccite
