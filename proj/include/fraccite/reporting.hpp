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

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fraccite/citation.hpp"
#include "fraccite/impact.hpp"
#include "fraccite/stat_tests.hpp"

namespace fraccite {

enum class Parameter { P, IC, FC, IcPerP, FcPerP };

/// "P", "IC", "FC", "IC/P", "FC/P".
std::string to_string(Parameter p);
/// Accepts the names above case-insensitively, plus "ic_per_p"/"fc_per_p".
Parameter parse_parameter(std::string_view name);
double parameter_value(const UnitImpact& u, Parameter p);

struct RankingRow {
  std::size_t rank = 0;
  std::string unit;
  double value = 0.0;
  /// Equal to a neighbour at two decimals although the exact values differ,
  /// so the printed order is decided by digits that are not shown.
  bool rounding_tie = false;
};

struct RankingTable {
  Parameter parameter = Parameter::P;
  CitationWindow window{0, 0};
  std::vector<RankingRow> rows;
};

/// Descending by exact value; exact ties share a rank (competition
/// ranking, 1,1,3) and are ordered by unit label.
RankingTable rank_units(const ImpactTable& table, Parameter parameter, const CitationWindow& window);

struct RankChange {
  std::string unit;
  std::size_t rank_a = 0;
  std::size_t rank_b = 0;
  long delta = 0;  ///< rank_a - rank_b; positive means the unit rose under b
};

/// One entry per unit, in b's row order. Throws InvalidArgument when the
/// two tables rank different unit sets.
std::vector<RankChange> rank_change(const RankingTable& a, const RankingTable& b);

/// "+17", "-1", and "" for 0.
std::string render_delta(long delta);

/// ".934", "-.120", "1.000" style.
std::string format_coefficient(double r, int decimals = 3);

/// Matrix layout: Spearman above the diagonal, Pearson below, "1" on the
/// diagonal, significance stars in parentheses.
std::string render_correlation(const CorrelationMatrix& m);

/// Plain string grid shared by every exporter.
struct TextTable {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
  std::vector<bool> right_align;  ///< per column; empty means all left
};

enum class ReportFormat { Tsv, Text, Markdown };

/// "tsv", "txt"/"text", "md"/"markdown". Throws InvalidArgument.
ReportFormat parse_report_format(std::string_view name);
std::string extension(ReportFormat f);

void render_table(std::ostream& out, const TextTable& t, ReportFormat format);

/// Side-by-side comparison of two rankings (Tables 3 and 4): position,
/// then a's unit and value, then b's unit and value and the rank change of
/// b's unit. `machine` keeps full precision and writes 0 deltas.
TextTable ranking_comparison_table(const RankingTable& a, const RankingTable& b, bool machine);

TextTable impact_text_table(const ImpactTable& t, bool machine);
TextTable correlation_text_table(const CorrelationMatrix& m);

struct RankingPair {
  std::string name;  ///< file stem, e.g. "ic_vs_fc_2005-2009"
  RankingTable a;
  RankingTable b;
};

struct Report {
  ImpactTable impact;
  std::vector<RankingPair> rankings;
  std::optional<CorrelationMatrix> correlations;
};

/// The two comparisons of Tables 3 and 4 for every window of `impact`.
Report build_report(const ImpactTable& impact, bool with_correlations);

/// The nine correlated parameters (P of the first window, then IC/P, FC/P, IC and
/// FC for each window) as labeled vectors in unit order.
std::vector<LabeledVector> correlation_parameters(const ImpactTable& impact);

/// Writes impact_table.<ext>, one file per ranking pair and
/// correlations.<ext> into `dir` (created if needed). Returns the written
/// paths in order. Throws OutputError when a file cannot be written.
std::vector<std::filesystem::path> export_report(const Report& report, ReportFormat format,
                                                 const std::filesystem::path& dir);

}  // namespace fraccite
