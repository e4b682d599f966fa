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

// Python bindings. Values cross the boundary as plain lists, dicts and
// strings; corpora travel in the canonical JSON-lines format.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "fraccite/citation.hpp"
#include "fraccite/error.hpp"
#include "fraccite/homogeneity.hpp"
#include "fraccite/impact.hpp"
#include "fraccite/ingest.hpp"
#include "fraccite/pipeline.hpp"
#include "fraccite/reporting.hpp"
#include "fraccite/stat_tests.hpp"
#include "fraccite/studentized_range.hpp"
#include "fraccite/synthetic.hpp"
#include "fraccite/units.hpp"
#include "fraccite/version.hpp"

namespace py = pybind11;
using namespace fraccite;

namespace {

GroupedSample to_sample(const std::vector<std::pair<std::string, std::vector<double>>>& groups) {
  GroupedSample s;
  for (const auto& [label, values] : groups) s.push_back({label, values});
  return s;
}

py::dict test_dict(const TestResult& t) {
  py::dict d;
  d["name"] = t.name;
  d["statistic"] = t.statistic;
  d["df1"] = t.df1;
  d["df2"] = t.df2;
  d["p_value"] = t.p_value;
  return d;
}

Corpus corpus_from_text(const std::string& text, CorpusFormat format) {
  std::istringstream in(text);
  auto parsed = format == CorpusFormat::Wos ? parse_wos_export(in) : parse_canonical(in);
  return parsed.records;
}

CorpusFormat format_from(const std::string& name) {
  if (name == "wos") return CorpusFormat::Wos;
  if (name == "canonical") return CorpusFormat::Canonical;
  throw InvalidArgument("format must be 'wos' or 'canonical'");
}

py::list impact_rows(const ImpactTable& t) {
  py::list out;
  for (const auto& row : t.rows) {
    for (const auto& u : row) {
      py::dict d;
      d["unit"] = u.unit;
      d["window"] = u.window.label();
      d["P"] = u.publications;
      d["IC"] = u.integer_citations;
      d["FC"] = u.fractional_citations;
      d["IC_per_P"] = u.ic_per_p;
      d["FC_per_P"] = u.fc_per_p;
      out.append(d);
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_fraccite, m) {
  m.doc() = "Fractional citation counting for organizational units";
  m.attr("__version__") = kVersion;

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<DegenerateSampleError>(m, "DegenerateSampleError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  m.def(
      "count_citations",
      [](const std::string& corpus_text, const std::string& units_text, const std::string& format, int cited_year,
         const std::vector<std::string>& windows) {
        auto corpus = corpus_from_text(corpus_text, format_from(format));
        std::istringstream uin(units_text);
        auto defs = parse_unit_definitions(uin);
        auto cited = filter_corpus(corpus, {DocType::Article, DocType::Review, DocType::ProceedingsPaper}, cited_year);
        auto assignment = assign_units(defs, cited);
        auto links = resolve_citations(cited, corpus);
        std::vector<CitationWindow> ws;
        for (const auto& w : windows) ws.push_back(CitationWindow::parse(w));
        return impact_rows(impact_table(assignment, cited, links, ws));
      },
      py::arg("corpus"), py::arg("units"), py::arg("format") = "wos", py::arg("cited_year") = 2005,
      py::arg("windows") = std::vector<std::string>{"2005:2007", "2005:2009"},
      "Impact rows (unit, window, P, IC, FC, IC_per_P, FC_per_P) for one corpus text.");

  m.def(
      "read_impact_table",
      [](const std::string& text) {
        std::istringstream in(text);
        return impact_rows(read_impact_tsv(in));
      },
      py::arg("text"));

  m.def(
      "rank",
      [](const std::string& impact_text, const std::string& parameter, const std::string& window) {
        std::istringstream in(impact_text);
        auto table = read_impact_tsv(in);
        auto r = rank_units(table, parse_parameter(parameter), CitationWindow::parse(window));
        py::list out;
        for (const auto& row : r.rows) out.append(py::make_tuple(row.rank, row.unit, row.value, row.rounding_tie));
        return out;
      },
      py::arg("impact_table"), py::arg("parameter"), py::arg("window"),
      "List of (rank, unit, value, rounding_tie) tuples.");

  m.def(
      "correlation",
      [](const std::vector<double>& x, const std::vector<double>& y, const std::string& method) {
        auto c = method == "spearman" ? spearman(x, y) : pearson(x, y);
        return py::make_tuple(c.r, c.p);
      },
      py::arg("x"), py::arg("y"), py::arg("method") = "pearson");

  m.def(
      "kruskal_wallis", [](const std::vector<std::pair<std::string, std::vector<double>>>& g) {
        return test_dict(kruskal_wallis(to_sample(g)));
      },
      py::arg("groups"));
  m.def(
      "levene",
      [](const std::vector<std::pair<std::string, std::vector<double>>>& g, const std::string& center) {
        return test_dict(levene(to_sample(g), center == "median" ? LeveneCenter::Median : LeveneCenter::Mean));
      },
      py::arg("groups"), py::arg("center") = "mean");
  m.def(
      "anova_oneway", [](const std::vector<std::pair<std::string, std::vector<double>>>& g) {
        return test_dict(anova_oneway(to_sample(g)));
      },
      py::arg("groups"));
  m.def(
      "dunnett_c",
      [](const std::vector<std::pair<std::string, std::vector<double>>>& g, double alpha) {
        py::list out;
        for (const auto& p : dunnett_c(to_sample(g), alpha)) {
          py::dict d;
          d["unit_a"] = p.unit_a;
          d["unit_b"] = p.unit_b;
          d["mean_diff"] = p.mean_diff;
          d["critical_range"] = p.critical_range;
          d["significant"] = p.significant;
          out.append(d);
        }
        return out;
      },
      py::arg("groups"), py::arg("alpha") = 0.05);

  m.def("studentized_range_cdf", &studentized_range_cdf, py::arg("q"), py::arg("k"), py::arg("nu"));
  m.def("studentized_range_quantile", &studentized_range_quantile, py::arg("alpha"), py::arg("k"), py::arg("nu"));
  m.attr("INFINITE_DF") = kInfiniteDf;

  m.def(
      "homogeneity_graph",
      [](const std::vector<std::pair<std::string, std::vector<double>>>& g, double alpha) {
        auto graph = build_graph(dunnett_c(to_sample(g), alpha));
        py::dict d;
        d["nodes"] = graph.nodes;
        d["edges"] = graph.edges;
        d["density"] = graph.nodes.size() >= 2 ? py::cast(density(graph)) : py::none();
        d["components"] = components(graph);
        d["cliques"] = maximal_cliques(graph);
        d["dot"] = export_graph(graph, GraphFormat::Dot);
        d["graphml"] = export_graph(graph, GraphFormat::GraphML);
        return d;
      },
      py::arg("groups"), py::arg("alpha") = 0.05);

  m.def(
      "simulate",
      [](const std::string& spec_json, std::optional<std::uint64_t> seed) {
        std::istringstream in(spec_json);
        auto spec = parse_synthetic_spec(in);
        if (seed) spec.seed = *seed;
        auto c = generate(spec);
        std::ostringstream labels;
        write_labels(labels, c.labels);
        py::dict d;
        d["cited"] = write_canonical(c.cited);
        d["citing"] = write_canonical(c.citing);
        d["labels"] = labels.str();
        d["units"] = unit_definitions_for(spec);
        return d;
      },
      py::arg("spec"), py::arg("seed") = py::none());

  m.def(
      "expected_metrics",
      [](const std::string& spec_json, const std::string& window) {
        std::istringstream in(spec_json);
        auto spec = parse_synthetic_spec(in);
        py::dict out;
        for (const auto& e : expected_metrics(spec, CitationWindow::parse(window)))
          out[py::str(e.field)] = py::make_tuple(e.ic_per_p, e.fc_per_p);
        return out;
      },
      py::arg("spec"), py::arg("window"));

  m.def(
      "run",
      [](const std::string& command, const py::kwargs& kw) {
        RunConfig c;
        auto str = [&](const char* k) { return kw.contains(k) ? kw[k].cast<std::string>() : std::string(); };
        c.input = str("input");
        c.citing_input = str("citing");
        if (kw.contains("format")) c.format = format_from(str("format"));
        c.units = str("units");
        c.impact_table = str("impact");
        c.sample = str("sample");
        c.spec = str("spec");
        if (kw.contains("out")) c.out = str("out");
        if (kw.contains("cited_year")) c.cited_year = kw["cited_year"].cast<int>();
        if (kw.contains("windows")) {
          c.windows.clear();
          for (const auto& w : kw["windows"].cast<std::vector<std::string>>())
            c.windows.push_back(CitationWindow::parse(w));
        }
        if (kw.contains("alpha")) c.alpha = kw["alpha"].cast<double>();
        if (kw.contains("exclude_self_citations")) c.exclude_self_citations = kw["exclude_self_citations"].cast<bool>();
        if (kw.contains("include_uncited")) c.include_uncited = kw["include_uncited"].cast<bool>();
        if (kw.contains("seed")) c.seed = kw["seed"].cast<std::uint64_t>();
        if (command == "ingest") return run_ingest(c);
        if (command == "assign") return run_assign(c);
        if (command == "count") return run_count(c);
        if (command == "rank") return run_rank(c);
        if (command == "stats") return run_stats(c);
        if (command == "graph") return run_graph(c);
        if (command == "report") return run_report(c);
        if (command == "simulate") return run_simulate(c);
        throw InvalidArgument("unknown command '" + command + "'");
      },
      py::arg("command"), "Runs a CLI subcommand; keyword arguments mirror the flags. Returns written file names.");
}
