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
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fraccite/stat_tests.hpp"

namespace fraccite {

/// Units joined by an edge when their difference is NOT significant.
/// Edges are stored as node-index pairs (i < j), sorted.
struct HomogeneityGraph {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  double alpha = 0.05;

  bool has_edge(std::string_view a, std::string_view b) const;
  std::size_t index_of(std::string_view label) const;  ///< throws InvalidArgument
};

/// Nodes in order of first appearance. Throws InvalidArgument on a
/// self-pair, a duplicate pair or when some pair of nodes is missing.
HomogeneityGraph build_graph(const std::vector<PairwiseComparison>& comparisons);

/// Same, with an explicit node order (needed for graphs with < 2 nodes
/// or to fix the order). Every comparison label must be in `nodes`.
HomogeneityGraph build_graph(const std::vector<std::string>& nodes,
                             const std::vector<PairwiseComparison>& comparisons);

using NodeSets = std::vector<std::vector<std::string>>;

/// Connected components; labels sorted inside each set, sets ordered by
/// size descending then by first label.
NodeSets components(const HomogeneityGraph& g);

/// All maximal cliques (isolated nodes are cliques of size 1), same
/// ordering as components().
NodeSets maximal_cliques(const HomogeneityGraph& g);

/// 2E / (n(n-1)). Throws InvalidArgument for fewer than two nodes.
double density(const HomogeneityGraph& g);

enum class GraphFormat { Dot, GraphML, Pajek };

/// "dot", "graphml", "pajek"/"net" (case-insensitive). Throws InvalidArgument.
GraphFormat parse_graph_format(std::string_view name);

void export_graph(std::ostream& out, const HomogeneityGraph& g, GraphFormat format);
std::string export_graph(const HomogeneityGraph& g, GraphFormat format);

}  // namespace fraccite
