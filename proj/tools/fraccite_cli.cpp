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

// fraccite command-line driver.

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fraccite/error.hpp"
#include "fraccite/log.hpp"
#include "fraccite/pipeline.hpp"
#include "fraccite/text.hpp"
#include "fraccite/version.hpp"

namespace {

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kInputMissing = 2,
  kParse = 3,
  kQuery = 4,
  kIntegrity = 5,
  kDegenerate = 6,
  kOutput = 7,
  kInternal = 8,
};

constexpr const char* kExitHelp =
    "Exit codes:\n"
    "  0  success\n"
    "  1  usage error (bad flag, bad window, alpha outside (0,1), missing required flag)\n"
    "  2  an input file is missing or unreadable\n"
    "  3  an input file cannot be parsed\n"
    "  4  unit definitions or affiliation queries are invalid\n"
    "  5  corpus data are inconsistent (e.g. references without a reference count)\n"
    "  6  a statistic is undefined for the data or a numerical routine failed\n"
    "  7  an output file cannot be written\n"
    "  8  internal error\n"
    "\n"
    "Environment:\n"
    "  FRACCITE_LOG_LEVEL  error | warn | info | debug (default warn); messages go to stderr\n";

std::set<fraccite::DocType> parse_types(const std::string& list, const char* flag) {
  std::set<fraccite::DocType> out;
  for (const auto& part : fraccite::text::split(list, ',')) {
    auto t = fraccite::text::trim(part);
    if (t.empty()) continue;
    auto dt = fraccite::doc_type_from_name(t);
    if (!dt) throw fraccite::InvalidArgument(std::string(flag) + ": unknown document type '" + std::string(t) + "'");
    out.insert(*dt);
  }
  if (out.empty()) throw fraccite::InvalidArgument(std::string(flag) + " needs at least one document type");
  return out;
}

struct Flags {
  std::string input, citing, format = "wos", units, impact, sample, spec, out = "out";
  int cited_year = 2005;
  std::vector<std::string> windows;
  double alpha = 0.05;
  bool exclude_self = false;
  std::string doc_types = "article,review,proceedings-paper";
  std::string citing_doc_types = "all";
  std::string include_uncited = "yes";
  std::optional<std::uint64_t> seed;
};

fraccite::RunConfig to_config(const Flags& f) {
  fraccite::RunConfig c;
  c.input = f.input;
  c.citing_input = f.citing;
  c.format = f.format == "canonical" ? fraccite::CorpusFormat::Canonical : fraccite::CorpusFormat::Wos;
  c.units = f.units;
  c.impact_table = f.impact;
  c.sample = f.sample;
  c.spec = f.spec;
  c.cited_year = f.cited_year;
  if (!f.windows.empty()) {
    c.windows.clear();
    for (const auto& w : f.windows) c.windows.push_back(fraccite::CitationWindow::parse(w));
  }
  c.alpha = f.alpha;
  c.doc_types = parse_types(f.doc_types, "--doc-types");
  c.exclude_self_citations = f.exclude_self;
  if (fraccite::text::to_lower(f.citing_doc_types) != "all")
    c.citing_doc_types = parse_types(f.citing_doc_types, "--citing-doc-types");
  c.include_uncited = f.include_uncited == "yes";
  c.out = f.out;
  c.seed = f.seed;
  return c;
}

enum Uses : unsigned {
  kCorpus = 1,
  kUnits = 2,
  kCounting = 4,
  kStats = 8,
  kImpact = 16,
  kSample = 32,
  kSpec = 64,
};

void add_flags(CLI::App* sub, Flags& f, unsigned uses) {
  if (uses & kCorpus) {
    sub->add_option("--input", f.input, "Publication corpus (cited side; also the citing side unless --citing)");
    sub->add_option("--citing", f.citing, "Separate corpus of citing documents");
    sub->add_option("--format", f.format, "Corpus format")->check(CLI::IsMember({"wos", "canonical"}))->capture_default_str();
  }
  if (uses & kUnits) {
    sub->add_option("--units", f.units, "Unit definitions file");
    sub->add_option("--cited-year", f.cited_year, "Publication year of the cited set")->capture_default_str();
    sub->add_option("--doc-types", f.doc_types, "Comma-separated document types of the cited set")
        ->capture_default_str();
  }
  if (uses & kCounting) {
    sub->add_option("--window", f.windows, "Citation window Y1:Y2, repeatable (default 2005:2007 and 2005:2009)");
    sub->add_flag("--exclude-self-citations", f.exclude_self, "Drop citations from documents inside the cited set");
    sub->add_option("--citing-doc-types", f.citing_doc_types, "Comma-separated citing document types, or 'all'")
        ->capture_default_str();
  }
  if (uses & kStats) {
    sub->add_option("--alpha", f.alpha, "Significance level for Dunnett's C")->capture_default_str();
    sub->add_option("--include-uncited", f.include_uncited, "Keep zero-cited papers in the per-paper samples")
        ->check(CLI::IsMember({"yes", "no"}))
        ->capture_default_str();
  }
  if (uses & kImpact) sub->add_option("--impact", f.impact, "Long-format impact table to rank instead of a corpus");
  if (uses & kSample) sub->add_option("--sample", f.sample, "unit<TAB>value per-paper sample instead of a corpus");
  if (uses & kSpec) {
    sub->add_option("--spec", f.spec, "Synthetic corpus spec (JSON)");
    sub->add_option("--seed", f.seed, "Override the spec's seed");
    sub->add_option("--window", f.windows, "Windows for expected.tsv, repeatable");
  }
  sub->add_option("--out", f.out, "Output directory")->capture_default_str();
}

int exit_for_current_exception(const std::string& command) {
  try {
    throw;
  } catch (const fraccite::OutputError& e) {
    fraccite::log::error(e.what());
    return kOutput;
  } catch (const fraccite::IoError& e) {
    fraccite::log::error(e.what());
    return kInputMissing;
  } catch (const fraccite::ParseError& e) {
    fraccite::log::error(e.what());
    return kParse;
  } catch (const fraccite::ConfigError& e) {
    fraccite::log::error(e.what());
    return kQuery;
  } catch (const fraccite::QuerySyntaxError& e) {
    fraccite::log::error(e.what());
    return kQuery;
  } catch (const fraccite::UnresolvedReferenceError& e) {
    fraccite::log::error(e.what());
    return kQuery;
  } catch (const fraccite::DataIntegrityError& e) {
    fraccite::log::error(e.what());
    return kIntegrity;
  } catch (const fraccite::DegenerateSampleError& e) {
    fraccite::log::error(e.what());
    return kDegenerate;
  } catch (const fraccite::ConvergenceError& e) {
    fraccite::log::error(e.what());
    return kDegenerate;
  } catch (const fraccite::InvalidArgument& e) {
    fraccite::log::error(e.what());
    return kUsage;
  } catch (const std::exception& e) {
    fraccite::log::error(command + ": internal error: " + e.what());
    return kInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fraccite: fractional citation counting for organizational units"};
  app.set_version_flag("--version", fraccite::kVersion);
  app.footer(kExitHelp);
  app.require_subcommand(1);

  Flags f;
  using Runner = std::function<std::vector<std::string>(const fraccite::RunConfig&)>;
  std::map<CLI::App*, std::pair<std::string, Runner>> runners;
  auto add = [&](const char* name, const char* help, unsigned uses, Runner run) {
    auto* sub = app.add_subcommand(name, help);
    sub->footer(kExitHelp);
    add_flags(sub, f, uses);
    runners[sub] = {name, std::move(run)};
  };
  using fraccite::RunConfig;
  add("ingest", "Parse and validate corpora, write them in canonical form", kCorpus,
      [](const RunConfig& c) { return fraccite::run_ingest(c); });
  add("assign", "Assign publications to units", kCorpus | kUnits,
      [](const RunConfig& c) { return fraccite::run_assign(c); });
  add("count", "Integer and fractional citation counts per unit and window", kCorpus | kUnits | kCounting,
      [](const RunConfig& c) { return fraccite::run_count(c); });
  add("rank", "Rankings, rank changes and correlations", kCorpus | kUnits | kCounting | kImpact,
      [](const RunConfig& c) { return fraccite::run_rank(c); });
  add("stats", "Kruskal-Wallis, Levene, ANOVA and Dunnett's C on per-paper scores",
      kCorpus | kUnits | kCounting | kStats | kSample, [](const RunConfig& c) { return fraccite::run_stats(c); });
  add("graph", "Homogeneity graph of units that are not significantly different",
      kCorpus | kUnits | kCounting | kStats | kSample, [](const RunConfig& c) { return fraccite::run_graph(c); });
  add("report", "Run every stage and write all outputs", kCorpus | kUnits | kCounting | kStats | kImpact,
      [](const RunConfig& c) { return fraccite::run_report(c); });
  add("simulate", "Generate a synthetic multi-field corpus", kSpec,
      [](const RunConfig& c) { return fraccite::run_simulate(c); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  for (auto& [sub, entry] : runners) {
    if (!sub->parsed()) continue;
    try {
      auto files = entry.second(to_config(f));
      for (const auto& file : files) std::cout << file << '\n';
      return kOk;
    } catch (...) {
      return exit_for_current_exception(entry.first);
    }
  }
  return kUsage;
}
