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
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fraccite/citation.hpp"
#include "fraccite/record.hpp"
#include "fraccite/units.hpp"

namespace fraccite {

/// Exact sum of unit fractions 1/k, kept as a histogram k -> count.
///
/// value() always adds terms in ascending k, so the floating-point result
/// depends only on the multiset of weights, never on the order in which
/// they were added or merged.
class FractionalCount {
 public:
  void add(Reciprocal w, std::uint64_t times = 1);
  void merge(const FractionalCount& other);

  double value() const;
  boost::multiprecision::cpp_rational exact() const;
  std::uint64_t terms() const;
  bool empty() const { return hist_.empty(); }

  const std::map<std::uint32_t, std::uint64_t>& histogram() const { return hist_; }
  bool operator==(const FractionalCount&) const = default;

 private:
  std::map<std::uint32_t, std::uint64_t> hist_;
};

/// Citation score of one cited paper in one window.
struct PerPaperScore {
  std::string paper_id;
  std::uint64_t ic = 0;  ///< distinct citing documents
  FractionalCount fc;    ///< sum of 1/k over those documents
  CitationWindow window{0, 0};

  double fc_value() const { return fc.value(); }
};

/// One cell row of the impact table: a unit in one window.
struct UnitImpact {
  std::string unit;
  CitationWindow window{0, 0};
  std::size_t publications = 0;
  std::uint64_t integer_citations = 0;
  double fractional_citations = 0.0;
  double ic_per_p = 0.0;
  double fc_per_p = 0.0;
};

/// Builds a UnitImpact from aggregate counts. Throws InvalidArgument for
/// publications == 0.
UnitImpact make_unit_impact(std::string unit, const CitationWindow& window, std::size_t publications,
                            std::uint64_t integer_citations, double fractional_citations);

/// Scores every cited paper exactly once (uncited papers get ic = fc = 0),
/// counting only links inside `window`. Output follows the order of `cited`.
std::vector<PerPaperScore> per_paper_scores(const std::vector<CitationLink>& links, const Corpus& cited,
                                            const CitationWindow& window);

using ScoreIndex = std::unordered_map<std::string, const PerPaperScore*>;
ScoreIndex index_scores(const std::vector<PerPaperScore>& scores);

/// Aggregates the member papers' scores. Throws InvalidArgument when
/// `members` is empty or names a paper missing from `scores`.
UnitImpact unit_impact(const std::string& unit, const IdSet& members, const ScoreIndex& scores,
                       const CitationWindow& window);

/// One row per unit (in input order), one column group per
/// window (in input order). rows[u][w].
struct ImpactTable {
  std::vector<CitationWindow> windows;
  std::vector<std::vector<UnitImpact>> rows;

  std::size_t unit_count() const { return rows.size(); }
  const std::string& unit(std::size_t u) const { return rows.at(u).at(0).unit; }
  std::size_t window_index(const CitationWindow& w) const;
};

/// Computes the full table from an assignment and resolved links.
ImpactTable impact_table(const UnitAssignment& assignment, const Corpus& cited, const std::vector<CitationLink>& links,
                         const std::vector<CitationWindow>& windows);

/// Long-format tab-delimited table:
///   unit  window  P  IC  FC  IC_per_P  FC_per_P
/// Ratios are written at full precision.
void write_impact_tsv(std::ostream& out, const ImpactTable& table);

/// Reads the long format written above (ratio columns, if present, are
/// ignored and recomputed). Rows may come in any order; units keep the
/// order of first appearance and windows are sorted. Every unit must have
/// every window. Throws ParseError with a line number on malformed input.
ImpactTable read_impact_tsv(std::istream& in);

/// Aligned text table with one column group per window (P, IC, IC/P, FC,
/// FC/P), two decimals for ratios and fractional counts.
void write_impact_text(std::ostream& out, const ImpactTable& table);

}  // namespace fraccite
