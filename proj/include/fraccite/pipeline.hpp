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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fraccite/citation.hpp"
#include "fraccite/homogeneity.hpp"
#include "fraccite/impact.hpp"
#include "fraccite/ingest.hpp"
#include "fraccite/stat_tests.hpp"
#include "fraccite/units.hpp"

namespace fraccite {

struct RunConfig {
  std::filesystem::path input;
  /// Corpus of citing documents; empty means `input` holds both sides.
  std::filesystem::path citing_input;
  CorpusFormat format = CorpusFormat::Wos;
  std::filesystem::path units;
  /// Precomputed long-format impact table; replaces the corpus stages for
  /// rank and report.
  std::filesystem::path impact_table;
  /// `unit<TAB>value` per-paper sample; replaces the corpus stages for
  /// stats and graph.
  std::filesystem::path sample;
  /// Synthetic spec (JSON) for simulate.
  std::filesystem::path spec;

  int cited_year = 2005;
  std::vector<CitationWindow> windows{CitationWindow(2005, 2007), CitationWindow(2005, 2009)};
  double alpha = 0.05;
  std::set<DocType> doc_types{DocType::Article, DocType::Review, DocType::ProceedingsPaper};
  bool exclude_self_citations = false;
  /// Unset: citing documents of every type count.
  std::optional<std::set<DocType>> citing_doc_types;
  /// Zero-cited papers enter the per-paper test samples.
  bool include_uncited = true;
  std::filesystem::path out = "out";
  std::optional<std::uint64_t> seed;
};

/// Throws InvalidArgument when windows are empty or alpha is outside (0,1).
void validate(const RunConfig& cfg);

/// Everything the corpus stages produce.
struct PipelineState {
  ParsedCorpus publications;
  ParsedCorpus citing;  ///< empty when `input` serves both sides
  bool separate_citing = false;
  Corpus cited;         ///< publications after the type and year filter
  UnitAssignment assignment;
  std::vector<CitationLink> links;
  ImpactTable impact;

  const Corpus& citing_records() const { return separate_citing ? citing.records : publications.records; }
};

/// Reads inputs (IoError names a missing path) and runs filter, assignment,
/// resolution and counting.
PipelineState run_corpus_stages(const RunConfig& cfg);

/// Per-paper fc values of each unit in the last window, in unit order.
/// Without `include_uncited`, papers with ic = 0 are left out.
GroupedSample per_paper_sample(const PipelineState& state, bool include_uncited);

struct StatsResult {
  std::vector<TestResult> tests;
  std::vector<PairwiseComparison> pairs;
  /// Groups left out because they had fewer than two observations.
  std::vector<std::string> dropped;
  std::vector<std::string> units;  ///< groups that entered the tests
};

/// Kruskal-Wallis, Levene, ANOVA and Dunnett's C. A test that is undefined
/// for the sample is reported with NaN statistic and p.
StatsResult run_stats(const GroupedSample& sample, double alpha);

/// Hex SHA-256 of a file's bytes. Throws IoError.
std::string sha256_file(const std::filesystem::path& path);

/// Subcommand drivers. Each writes its files plus manifest.json into
/// cfg.out and returns the written file names (relative to cfg.out).
std::vector<std::string> run_ingest(const RunConfig& cfg);
std::vector<std::string> run_assign(const RunConfig& cfg);
std::vector<std::string> run_count(const RunConfig& cfg);
std::vector<std::string> run_rank(const RunConfig& cfg);
std::vector<std::string> run_stats(const RunConfig& cfg);
std::vector<std::string> run_graph(const RunConfig& cfg);
std::vector<std::string> run_report(const RunConfig& cfg);
std::vector<std::string> run_simulate(const RunConfig& cfg);

}  // namespace fraccite
