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

#include "fraccite/pipeline.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <memory>
#include <sstream>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "fraccite/error.hpp"
#include "fraccite/log.hpp"
#include "fraccite/reporting.hpp"
#include "fraccite/synthetic.hpp"
#include "fraccite/text.hpp"
#include "fraccite/version.hpp"

namespace fraccite {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

enum class Stage { Assign, Count };

class Outputs {
 public:
  explicit Outputs(fs::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw OutputError("cannot create output directory " + dir_.string() + ": " + ec.message());
  }

  void write(const std::string& name, const std::function<void(std::ostream&)>& body) {
    auto path = dir_ / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw OutputError("cannot write " + path.string());
    body(out);
    out.flush();
    if (!out) throw OutputError("error while writing " + path.string());
    add(name);
    log::info("wrote " + path.string());
  }

  void add(const std::string& name) {
    if (std::find(files_.begin(), files_.end(), name) == files_.end()) files_.push_back(name);
  }

  const fs::path& dir() const { return dir_; }
  const std::vector<std::string>& files() const { return files_; }

 private:
  fs::path dir_;
  std::vector<std::string> files_;
};

std::string format_name(CorpusFormat f) { return f == CorpusFormat::Wos ? "wos" : "canonical"; }

Json doc_type_list(const std::set<DocType>& types) {
  Json a = Json::array();
  for (auto t : types) a.push_back(std::string(to_string(t)));
  return a;
}

Json config_json(const RunConfig& cfg) {
  Json c;
  c["input"] = cfg.input.generic_string();
  c["citing_input"] = cfg.citing_input.generic_string();
  c["format"] = format_name(cfg.format);
  c["units"] = cfg.units.generic_string();
  c["impact_table"] = cfg.impact_table.generic_string();
  c["sample"] = cfg.sample.generic_string();
  c["spec"] = cfg.spec.generic_string();
  c["cited_year"] = cfg.cited_year;
  Json w = Json::array();
  for (const auto& win : cfg.windows) w.push_back(win.label());
  c["windows"] = w;
  c["alpha"] = cfg.alpha;
  c["doc_types"] = doc_type_list(cfg.doc_types);
  c["exclude_self_citations"] = cfg.exclude_self_citations;
  c["citing_doc_types"] = cfg.citing_doc_types ? doc_type_list(*cfg.citing_doc_types) : Json(nullptr);
  c["include_uncited"] = cfg.include_uncited;
  c["seed"] = cfg.seed ? Json(*cfg.seed) : Json(nullptr);
  return c;
}

void write_manifest(Outputs& out, const std::string& command, const RunConfig& cfg,
                    const std::vector<fs::path>& inputs) {
  Json m;
  m["tool"] = "fraccite";
  m["version"] = kVersion;
  m["command"] = command;
  m["config"] = config_json(cfg);
  Json in = Json::array();
  for (const auto& p : inputs) {
    Json e;
    e["path"] = p.generic_string();
    e["bytes"] = static_cast<std::uint64_t>(fs::file_size(p));
    e["sha256"] = sha256_file(p);
    in.push_back(e);
  }
  m["inputs"] = in;
  Json outs = Json::array();
  for (const auto& f : out.files()) {
    Json e;
    e["file"] = f;
    e["sha256"] = sha256_file(out.dir() / f);
    outs.push_back(e);
  }
  m["outputs"] = outs;
  out.write("manifest.json", [&](std::ostream& s) { s << m.dump(2) << '\n'; });
}

void require_readable(const fs::path& p, const char* what) {
  if (p.empty()) throw InvalidArgument(std::string(what) + " is required");
  std::ifstream f(p);
  if (!f) throw IoError("cannot open " + std::string(what) + ": " + p.string());
}

std::vector<fs::path> corpus_inputs(const RunConfig& cfg, bool with_units) {
  std::vector<fs::path> v{cfg.input};
  if (!cfg.citing_input.empty()) v.push_back(cfg.citing_input);
  if (with_units) v.push_back(cfg.units);
  return v;
}

PipelineState corpus_stages(const RunConfig& cfg, Stage upto) {
  validate(cfg);
  require_readable(cfg.input, "--input");
  require_readable(cfg.units, "--units");
  if (!cfg.citing_input.empty()) require_readable(cfg.citing_input, "--citing");

  PipelineState s;
  s.publications = read_corpus_file(cfg.input, cfg.format);
  log::info("read " + std::to_string(s.publications.records.size()) + " records from " + cfg.input.string());
  if (!s.publications.report.empty())
    log::warn(std::to_string(s.publications.report.size()) + " record(s) skipped in " + cfg.input.string());
  if (!cfg.citing_input.empty()) {
    s.separate_citing = true;
    s.citing = read_corpus_file(cfg.citing_input, cfg.format);
    log::info("read " + std::to_string(s.citing.records.size()) + " citing records from " + cfg.citing_input.string());
    if (!s.citing.report.empty())
      log::warn(std::to_string(s.citing.report.size()) + " record(s) skipped in " + cfg.citing_input.string());
  }

  s.cited = filter_corpus(s.publications.records, cfg.doc_types, cfg.cited_year);
  log::info(std::to_string(s.cited.size()) + " publications pass the type and year filter");
  auto units = read_unit_definitions(cfg.units);
  s.assignment = assign_units(units, s.cited);
  for (const auto& f : s.assignment.failures) log::warn("unit '" + f.name + "': " + f.message);
  for (const auto& e : s.assignment.excluded)
    log::info("unit '" + e.name + "' excluded with " + std::to_string(e.publications) + " publications");
  if (upto == Stage::Assign) return s;

  ResolveOptions opts;
  opts.exclude_self_citations = cfg.exclude_self_citations;
  opts.citing_doc_types = cfg.citing_doc_types;
  s.links = resolve_citations(s.cited, s.citing_records(), opts);
  log::info(std::to_string(s.links.size()) + " citation links resolved");
  s.impact = impact_table(s.assignment, s.cited, s.links, cfg.windows);
  return s;
}

void write_assign_files(Outputs& out, const PipelineState& s) {
  out.write("assignment.tsv", [&](std::ostream& o) { write_assignment_report(o, s.assignment); });
  out.write("members.tsv", [&](std::ostream& o) {
    o << "unit\tpaper_id\n";
    for (const auto& u : s.assignment.units)
      for (const auto& id : u.members) o << text::tsv_field(u.name) << '\t' << text::tsv_field(id) << '\n';
  });
}

void write_count_files(Outputs& out, const PipelineState& s) {
  out.write("impact.tsv", [&](std::ostream& o) { write_impact_tsv(o, s.impact); });
  out.write("impact.txt", [&](std::ostream& o) { write_impact_text(o, s.impact); });
  out.write("links.csv", [&](std::ostream& o) { write_link_dump(o, s.links); });
}

void write_rank_files(Outputs& out, const ImpactTable& impact) {
  auto report = build_report(impact, true);
  for (auto f : {ReportFormat::Tsv, ReportFormat::Text, ReportFormat::Markdown}) {
    for (const auto& p : export_report(report, f, out.dir())) out.add(p.filename().string());
  }
}

void write_stats_files(Outputs& out, const GroupedSample& sample, const StatsResult& r) {
  out.write("sample.tsv", [&](std::ostream& o) { write_grouped_sample(o, sample); });
  out.write("tests.tsv", [&](std::ostream& o) {
    write_test_results(o, r.tests);
    for (const auto& d : r.dropped) o << "# dropped (fewer than 2 observations): " << text::tsv_field(d) << '\n';
  });
  out.write("dunnett_c.tsv", [&](std::ostream& o) { write_pairwise(o, r.pairs); });
}

void write_graph_files(Outputs& out, const StatsResult& r, double alpha) {
  auto g = build_graph(r.units, r.pairs);
  g.alpha = alpha;
  out.write("homogeneity.dot", [&](std::ostream& o) { export_graph(o, g, GraphFormat::Dot); });
  out.write("homogeneity.graphml", [&](std::ostream& o) { export_graph(o, g, GraphFormat::GraphML); });
  out.write("homogeneity.net", [&](std::ostream& o) { export_graph(o, g, GraphFormat::Pajek); });
  auto comps = components(g);
  auto cliques = maximal_cliques(g);
  out.write("homogeneity_groups.tsv", [&](std::ostream& o) {
    o << "kind\tindex\tsize\tmembers\n";
    auto emit = [&](const char* kind, const NodeSets& sets) {
      for (std::size_t i = 0; i < sets.size(); ++i) {
        std::string members;
        for (const auto& m : sets[i]) members += (members.empty() ? "" : "; ") + m;
        o << kind << '\t' << (i + 1) << '\t' << sets[i].size() << '\t' << text::tsv_field(members) << '\n';
      }
    };
    emit("component", comps);
    emit("clique", cliques);
  });
  out.write("homogeneity_summary.tsv", [&](std::ostream& o) {
    o << "nodes\tedges\tdensity\talpha\tcomponents\tlargest_component\tlargest_clique\n";
    o << g.nodes.size() << '\t' << g.edges.size() << '\t'
      << (g.nodes.size() >= 2 ? text::format_double(density(g)) : std::string()) << '\t'
      << text::format_double(alpha) << '\t' << comps.size() << '\t' << (comps.empty() ? 0 : comps.front().size())
      << '\t' << (cliques.empty() ? 0 : cliques.front().size()) << '\n';
  });
}

GroupedSample load_sample(const RunConfig& cfg, std::vector<fs::path>& inputs) {
  if (!cfg.sample.empty()) {
    require_readable(cfg.sample, "--sample");
    std::ifstream in(cfg.sample);
    inputs.push_back(cfg.sample);
    return read_grouped_sample(in);
  }
  auto state = corpus_stages(cfg, Stage::Count);
  inputs = corpus_inputs(cfg, true);
  return per_paper_sample(state, cfg.include_uncited);
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.windows.empty()) throw InvalidArgument("at least one citation window is required");
  if (!(cfg.alpha > 0 && cfg.alpha < 1)) throw InvalidArgument("alpha must lie in (0,1)");
}

PipelineState run_corpus_stages(const RunConfig& cfg) { return corpus_stages(cfg, Stage::Count); }

GroupedSample per_paper_sample(const PipelineState& state, bool include_uncited) {
  GroupedSample out;
  if (state.impact.windows.empty()) return out;
  const auto& window = state.impact.windows.back();
  auto scores = per_paper_scores(state.links, state.cited, window);
  auto idx = index_scores(scores);
  for (const auto& u : state.assignment.units) {
    Group g{u.name, {}};
    for (const auto& id : u.members) {
      const auto* s = idx.at(id);
      if (!include_uncited && s->ic == 0) continue;
      g.values.push_back(s->fc_value());
    }
    out.push_back(std::move(g));
  }
  return out;
}

StatsResult run_stats(const GroupedSample& sample, double alpha) {
  StatsResult r;
  GroupedSample kept;
  for (const auto& g : sample) {
    if (g.values.size() < 2) {
      r.dropped.push_back(g.label);
      log::warn("group '" + g.label + "' has fewer than 2 observations and is left out of the tests");
      continue;
    }
    kept.push_back(g);
    r.units.push_back(g.label);
  }
  if (kept.size() < 2) throw DegenerateSampleError("fewer than 2 groups with at least 2 observations");
  auto attempt = [&](const char* name, auto&& fn) {
    try {
      r.tests.push_back(fn());
    } catch (const DegenerateSampleError& e) {
      log::warn(std::string(name) + " skipped: " + e.what());
      const double nan = std::numeric_limits<double>::quiet_NaN();
      r.tests.push_back({name, nan, nan, nan, nan});
    }
  };
  attempt("kruskal-wallis", [&] { return kruskal_wallis(kept); });
  attempt("levene", [&] { return levene(kept, LeveneCenter::Mean); });
  attempt("anova", [&] { return anova_oneway(kept); });
  r.pairs = dunnett_c(kept, alpha);
  return r;
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) throw Error("SHA-256 initialisation failed");
  std::array<char, 65536> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  if (in.bad()) throw IoError("error while reading " + path.string());
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md.data(), &len);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return hex.str();
}

std::vector<std::string> run_ingest(const RunConfig& cfg) {
  require_readable(cfg.input, "--input");
  if (!cfg.citing_input.empty()) require_readable(cfg.citing_input, "--citing");
  Outputs out(cfg.out);
  auto pubs = read_corpus_file(cfg.input, cfg.format);
  std::optional<ParsedCorpus> citing;
  if (!cfg.citing_input.empty()) citing = read_corpus_file(cfg.citing_input, cfg.format);

  out.write("corpus.jsonl", [&](std::ostream& o) { write_canonical(o, pubs.records); });
  if (citing) out.write("citing.jsonl", [&](std::ostream& o) { write_canonical(o, citing->records); });
  out.write("parse_report.tsv", [&](std::ostream& o) {
    o << "file\tline\trecord_id\tmessage\n";
    auto dump = [&](const fs::path& p, const ParsedCorpus& c) {
      auto issues = c.report.issues;
      auto extra = validate_corpus(c.records).issues;
      issues.insert(issues.end(), extra.begin(), extra.end());
      for (const auto& i : issues)
        o << text::tsv_field(p.generic_string()) << '\t' << i.line << '\t' << text::tsv_field(i.record_id) << '\t'
          << text::tsv_field(i.message) << '\n';
    };
    dump(cfg.input, pubs);
    if (citing) dump(cfg.citing_input, *citing);
  });
  if (!pubs.report.empty()) log::warn(std::to_string(pubs.report.size()) + " record(s) skipped in " + cfg.input.string());
  write_manifest(out, "ingest", cfg, corpus_inputs(cfg, false));
  return out.files();
}

std::vector<std::string> run_assign(const RunConfig& cfg) {
  auto state = corpus_stages(cfg, Stage::Assign);
  Outputs out(cfg.out);
  write_assign_files(out, state);
  write_manifest(out, "assign", cfg, corpus_inputs(cfg, true));
  return out.files();
}

std::vector<std::string> run_count(const RunConfig& cfg) {
  auto state = corpus_stages(cfg, Stage::Count);
  Outputs out(cfg.out);
  write_count_files(out, state);
  write_manifest(out, "count", cfg, corpus_inputs(cfg, true));
  return out.files();
}

namespace {

std::vector<std::string> rank_from(const RunConfig& cfg, const char* command) {
  ImpactTable impact;
  std::vector<fs::path> inputs;
  if (!cfg.impact_table.empty()) {
    validate(cfg);
    require_readable(cfg.impact_table, "--impact");
    std::ifstream in(cfg.impact_table);
    impact = read_impact_tsv(in);
    inputs.push_back(cfg.impact_table);
  } else {
    impact = corpus_stages(cfg, Stage::Count).impact;
    inputs = corpus_inputs(cfg, true);
  }
  Outputs out(cfg.out);
  write_rank_files(out, impact);
  write_manifest(out, command, cfg, inputs);
  return out.files();
}

}  // namespace

std::vector<std::string> run_rank(const RunConfig& cfg) { return rank_from(cfg, "rank"); }

std::vector<std::string> run_stats(const RunConfig& cfg) {
  validate(cfg);
  std::vector<fs::path> inputs;
  auto sample = load_sample(cfg, inputs);
  auto result = run_stats(sample, cfg.alpha);
  Outputs out(cfg.out);
  write_stats_files(out, sample, result);
  write_manifest(out, "stats", cfg, inputs);
  return out.files();
}

std::vector<std::string> run_graph(const RunConfig& cfg) {
  validate(cfg);
  std::vector<fs::path> inputs;
  auto sample = load_sample(cfg, inputs);
  auto result = run_stats(sample, cfg.alpha);
  Outputs out(cfg.out);
  write_graph_files(out, result, cfg.alpha);
  write_manifest(out, "graph", cfg, inputs);
  return out.files();
}

std::vector<std::string> run_report(const RunConfig& cfg) {
  // An aggregate table has no per-paper data: rankings and correlations only.
  if (!cfg.impact_table.empty()) return rank_from(cfg, "report");
  auto state = corpus_stages(cfg, Stage::Count);
  auto sample = per_paper_sample(state, cfg.include_uncited);
  auto result = run_stats(sample, cfg.alpha);
  Outputs out(cfg.out);
  write_assign_files(out, state);
  write_count_files(out, state);
  write_rank_files(out, state.impact);
  write_stats_files(out, sample, result);
  write_graph_files(out, result, cfg.alpha);
  write_manifest(out, "report", cfg, corpus_inputs(cfg, true));
  return out.files();
}

std::vector<std::string> run_simulate(const RunConfig& cfg) {
  validate(cfg);
  require_readable(cfg.spec, "--spec");
  std::ifstream in(cfg.spec);
  auto spec = parse_synthetic_spec(in);
  if (cfg.seed) spec.seed = *cfg.seed;
  auto corpus = generate(spec);
  log::info("generated " + std::to_string(corpus.cited.size()) + " cited and " + std::to_string(corpus.citing.size()) +
            " citing records");
  Outputs out(cfg.out);
  out.write("cited.jsonl", [&](std::ostream& o) { write_canonical(o, corpus.cited); });
  out.write("citing.jsonl", [&](std::ostream& o) { write_canonical(o, corpus.citing); });
  out.write("labels.tsv", [&](std::ostream& o) { write_labels(o, corpus.labels); });
  out.write("units.cfg", [&](std::ostream& o) { o << unit_definitions_for(spec); });
  out.write("expected.tsv", [&](std::ostream& o) {
    o << "field\twindow\tIC_per_P\tFC_per_P\n";
    for (const auto& w : cfg.windows) {
      for (const auto& e : expected_metrics(spec, w))
        o << text::tsv_field(e.field) << '\t' << w.label() << '\t' << text::format_double(e.ic_per_p) << '\t'
          << text::format_double(e.fc_per_p) << '\n';
    }
  });
  RunConfig recorded = cfg;
  recorded.seed = spec.seed;
  write_manifest(out, "simulate", recorded, {cfg.spec});
  return out.files();
}

}  // namespace fraccite
