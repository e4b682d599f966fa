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

#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "fraccite/error.hpp"
#include "fraccite/homogeneity.hpp"

namespace fraccite {
namespace {

std::vector<std::string> labels(int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back("U" + std::to_string(i));
  return v;
}

/// Every pair of nodes compared; `same(i, j)` decides non-significance.
template <typename F>
std::vector<PairwiseComparison> all_pairs(const std::vector<std::string>& nodes, F same) {
  std::vector<PairwiseComparison> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      PairwiseComparison c;
      c.unit_a = nodes[i];
      c.unit_b = nodes[j];
      c.significant = !same(i, j);
      out.push_back(c);
    }
  return out;
}

TEST(Homogeneity, NoSignificantPairIsComplete) {
  auto n = labels(27);
  auto g = build_graph(n, all_pairs(n, [](auto, auto) { return true; }));
  EXPECT_EQ(g.edges.size(), 351u);
  EXPECT_DOUBLE_EQ(density(g), 1.0);
  auto c = components(g);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].size(), 27u);
  auto q = maximal_cliques(g);
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0].size(), 27u);
}

TEST(Homogeneity, AllSignificantIsEdgeless) {
  auto n = labels(5);
  auto g = build_graph(n, all_pairs(n, [](auto, auto) { return false; }));
  EXPECT_TRUE(g.edges.empty());
  EXPECT_EQ(density(g), 0.0);
  EXPECT_EQ(components(g).size(), 5u);
  EXPECT_EQ(maximal_cliques(g).size(), 5u);
}

TEST(Homogeneity, DensityOfHundredEdges) {
  auto n = labels(27);
  std::size_t count = 0;
  std::vector<PairwiseComparison> pairs = all_pairs(n, [&](auto, auto) { return count++ < 100; });
  auto g = build_graph(n, pairs);
  EXPECT_EQ(g.edges.size(), 100u);
  EXPECT_NEAR(density(g), 100.0 / 351.0, 1e-15);
  EXPECT_NEAR(density(g), 0.285, 0.001);
}

TEST(Homogeneity, FiveGroupFixture) {
  std::vector<std::string> n{"A", "B", "C", "D", "E"};
  std::set<std::pair<std::string, std::string>> same{{"A", "B"}, {"A", "C"}, {"B", "C"}};
  auto g = build_graph(n, all_pairs(n, [&](auto i, auto j) { return same.contains({n[i], n[j]}); }));
  auto c = components(g);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], (std::vector<std::string>{"A", "B", "C"}));
  EXPECT_EQ(c[1], std::vector<std::string>{"D"});
  EXPECT_EQ(c[2], std::vector<std::string>{"E"});
  EXPECT_TRUE(g.has_edge("C", "A"));
  EXPECT_FALSE(g.has_edge("A", "D"));
}

TEST(Homogeneity, CliquesOfPath) {
  std::vector<std::string> n{"A", "B", "C"};
  auto g = build_graph(n, all_pairs(n, [](auto i, auto j) { return j == i + 1; }));
  auto q = maximal_cliques(g);
  ASSERT_EQ(q.size(), 2u);
  EXPECT_EQ(q[0], (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(q[1], (std::vector<std::string>{"B", "C"}));
  EXPECT_EQ(components(g).size(), 1u);
}

// Edges present exactly where the comparison is not significant.
TEST(Homogeneity, EdgesComplementSignificance) {
  auto n = labels(12);
  auto pairs = all_pairs(n, [](auto i, auto j) { return (i * 7 + j * 3) % 5 < 2; });
  auto g = build_graph(n, pairs);
  std::size_t non_sig = 0;
  for (const auto& p : pairs) {
    EXPECT_EQ(g.has_edge(p.unit_a, p.unit_b), !p.significant);
    non_sig += p.significant ? 0 : 1;
  }
  EXPECT_EQ(g.edges.size(), non_sig);
  EXPECT_EQ(build_graph(pairs).nodes, n);
}

TEST(Homogeneity, Errors) {
  std::vector<std::string> n{"A", "B", "C"};
  auto pairs = all_pairs(n, [](auto, auto) { return true; });
  auto missing = pairs;
  missing.pop_back();
  EXPECT_THROW(build_graph(n, missing), InvalidArgument);
  auto dup = pairs;
  dup.push_back(pairs[0]);
  EXPECT_THROW(build_graph(n, dup), InvalidArgument);
  auto unknown = pairs;
  unknown[0].unit_b = "Z";
  EXPECT_THROW(build_graph(n, unknown), InvalidArgument);
  EXPECT_THROW(build_graph({"A", "A"}, {}), InvalidArgument);
  EXPECT_THROW(density(build_graph({"A"}, {})), InvalidArgument);
  EXPECT_THROW(parse_graph_format("svg"), InvalidArgument);
}

TEST(Homogeneity, EmptyGraph) {
  auto g = build_graph(std::vector<std::string>{}, {});
  EXPECT_TRUE(components(g).empty());
  EXPECT_TRUE(maximal_cliques(g).empty());
  EXPECT_EQ(export_graph(g, GraphFormat::Pajek), "*Vertices 0\n*Edges\n");
}

HomogeneityGraph tricky() {
  std::vector<std::string> n{"Sch \"Life\" Sci", "Dep A & B", "Dep <C>"};
  return build_graph(n, all_pairs(n, [](auto i, auto) { return i == 0; }));
}

TEST(GraphExport, Dot) {
  EXPECT_EQ(export_graph(tricky(), GraphFormat::Dot),
            "graph homogeneity {\n"
            "  n0 [label=\"Sch \\\"Life\\\" Sci\"];\n"
            "  n1 [label=\"Dep A & B\"];\n"
            "  n2 [label=\"Dep <C>\"];\n"
            "  n0 -- n1;\n"
            "  n0 -- n2;\n"
            "}\n");
}

TEST(GraphExport, Pajek) {
  EXPECT_EQ(export_graph(tricky(), GraphFormat::Pajek),
            "*Vertices 3\n1 \"Sch 'Life' Sci\"\n2 \"Dep A & B\"\n3 \"Dep <C>\"\n*Edges\n1 2\n1 3\n");
}

TEST(GraphExport, GraphMLParsesBack) {
  auto g = tricky();
  std::istringstream in(export_graph(g, GraphFormat::GraphML));
  boost::property_tree::ptree pt;
  boost::property_tree::read_xml(in, pt);
  std::vector<std::string> names;
  std::size_t edges = 0;
  for (const auto& [tag, child] : pt.get_child("graphml.graph")) {
    if (tag == "node") names.push_back(child.get<std::string>("data"));
    if (tag == "edge") ++edges;
  }
  EXPECT_EQ(names, g.nodes);
  EXPECT_EQ(edges, g.edges.size());
  EXPECT_EQ(pt.get<std::string>("graphml.graph.<xmlattr>.edgedefault"), "undirected");
}

}  // namespace
}  // namespace fraccite
