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

#include "fraccite/homogeneity.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/bron_kerbosch_all_cliques.hpp>
#include <boost/graph/connected_components.hpp>

#include "fraccite/error.hpp"
#include "fraccite/text.hpp"

namespace fraccite {

namespace {

using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

Graph to_bgl(const HomogeneityGraph& g) {
  Graph bg(g.nodes.size());
  for (auto [a, b] : g.edges) boost::add_edge(a, b, bg);
  return bg;
}

void order_sets(NodeSets& sets) {
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
}

struct CliqueCollector {
  const HomogeneityGraph* g;
  NodeSets* out;
  template <typename Clique, typename G>
  void clique(const Clique& c, const G&) {
    std::vector<std::string> labels;
    for (auto v : c) labels.push_back(g->nodes[v]);
    out->push_back(std::move(labels));
  }
};

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

std::string pajek_escape(std::string_view s) {
  std::string out(s);
  std::replace(out.begin(), out.end(), '"', '\'');
  std::replace(out.begin(), out.end(), '\n', ' ');
  return out;
}

}  // namespace

std::size_t HomogeneityGraph::index_of(std::string_view label) const {
  auto it = std::find(nodes.begin(), nodes.end(), label);
  if (it == nodes.end()) throw InvalidArgument("unknown node '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - nodes.begin());
}

bool HomogeneityGraph::has_edge(std::string_view a, std::string_view b) const {
  auto i = index_of(a), j = index_of(b);
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

HomogeneityGraph build_graph(const std::vector<std::string>& nodes,
                             const std::vector<PairwiseComparison>& comparisons) {
  HomogeneityGraph g;
  g.nodes = nodes;
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!idx.emplace(nodes[i], i).second) throw InvalidArgument("duplicate node '" + nodes[i] + "'");
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& c : comparisons) {
    auto ia = idx.find(c.unit_a), ib = idx.find(c.unit_b);
    if (ia == idx.end() || ib == idx.end())
      throw InvalidArgument("comparison " + c.unit_a + " / " + c.unit_b + " names an unknown node");
    if (ia->second == ib->second) throw InvalidArgument("comparison of '" + c.unit_a + "' with itself");
    std::pair<std::size_t, std::size_t> key = std::minmax(ia->second, ib->second);
    if (!seen.insert(key).second)
      throw InvalidArgument("duplicate comparison " + c.unit_a + " / " + c.unit_b);
    if (!c.significant) g.edges.push_back(key);
    if (c.alpha > 0) g.alpha = c.alpha;
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (!seen.contains({i, j})) throw InvalidArgument("missing comparison " + nodes[i] + " / " + nodes[j]);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

HomogeneityGraph build_graph(const std::vector<PairwiseComparison>& comparisons) {
  std::vector<std::string> nodes;
  std::set<std::string> known;
  for (const auto& c : comparisons) {
    for (const auto* l : {&c.unit_a, &c.unit_b}) {
      if (known.insert(*l).second) nodes.push_back(*l);
    }
  }
  return build_graph(nodes, comparisons);
}

NodeSets components(const HomogeneityGraph& g) {
  auto bg = to_bgl(g);
  std::vector<int> comp(g.nodes.size());
  int count = g.nodes.empty() ? 0 : boost::connected_components(bg, comp.data());
  NodeSets out(static_cast<std::size_t>(count));
  for (std::size_t v = 0; v < comp.size(); ++v) out[static_cast<std::size_t>(comp[v])].push_back(g.nodes[v]);
  order_sets(out);
  return out;
}

NodeSets maximal_cliques(const HomogeneityGraph& g) {
  NodeSets out;
  if (g.nodes.empty()) return out;
  auto bg = to_bgl(g);
  boost::bron_kerbosch_all_cliques(bg, CliqueCollector{&g, &out}, 1);
  order_sets(out);
  return out;
}

double density(const HomogeneityGraph& g) {
  auto n = static_cast<double>(g.nodes.size());
  if (g.nodes.size() < 2) throw InvalidArgument("density needs at least 2 nodes");
  return 2.0 * static_cast<double>(g.edges.size()) / (n * (n - 1.0));
}

GraphFormat parse_graph_format(std::string_view name) {
  auto n = text::to_lower(text::trim(name));
  if (n == "dot") return GraphFormat::Dot;
  if (n == "graphml") return GraphFormat::GraphML;
  if (n == "pajek" || n == "net") return GraphFormat::Pajek;
  throw InvalidArgument("unknown graph format '" + std::string(name) + "' (expected dot, graphml or pajek)");
}

void export_graph(std::ostream& out, const HomogeneityGraph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Dot:
      out << "graph homogeneity {\n";
      for (std::size_t i = 0; i < g.nodes.size(); ++i) out << "  n" << i << " [label=\"" << dot_escape(g.nodes[i]) << "\"];\n";
      for (auto [a, b] : g.edges) out << "  n" << a << " -- n" << b << ";\n";
      out << "}\n";
      break;
    case GraphFormat::GraphML:
      out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
          << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
          << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
          << "  <key id=\"alpha\" for=\"graph\" attr.name=\"alpha\" attr.type=\"double\"/>\n"
          << "  <graph id=\"homogeneity\" edgedefault=\"undirected\">\n"
          << "    <data key=\"alpha\">" << text::format_double(g.alpha) << "</data>\n";
      for (std::size_t i = 0; i < g.nodes.size(); ++i)
        out << "    <node id=\"n" << i << "\"><data key=\"label\">" << xml_escape(g.nodes[i]) << "</data></node>\n";
      for (std::size_t e = 0; e < g.edges.size(); ++e)
        out << "    <edge id=\"e" << e << "\" source=\"n" << g.edges[e].first << "\" target=\"n" << g.edges[e].second
            << "\"/>\n";
      out << "  </graph>\n</graphml>\n";
      break;
    case GraphFormat::Pajek:
      out << "*Vertices " << g.nodes.size() << "\n";
      for (std::size_t i = 0; i < g.nodes.size(); ++i) out << (i + 1) << " \"" << pajek_escape(g.nodes[i]) << "\"\n";
      out << "*Edges\n";
      for (auto [a, b] : g.edges) out << (a + 1) << ' ' << (b + 1) << "\n";
      break;
  }
}

std::string export_graph(const HomogeneityGraph& g, GraphFormat format) {
  std::ostringstream s;
  export_graph(s, g, format);
  return s.str();
}

}  // namespace fraccite
