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
#include <string>
#include <utility>
#include <vector>

#include "fraccite/query.hpp"
#include "fraccite/record.hpp"

namespace fraccite {

inline constexpr std::size_t kDefaultMinPublications = 5;

/// An organizational unit and the query that selects its publications.
/// `steps` are numbered intermediate result sets that `query` (and later
/// steps) may reference as `#n`.
struct UnitDefinition {
  std::string name;
  QueryExpr query;
  std::vector<std::pair<int, QueryExpr>> steps;
  std::size_t min_pubs = kDefaultMinPublications;
};

/// Reads unit definitions from an INI-like text:
///
///     # comment
///     min_pubs = 5              (default for the units below)
///
///     [Dep Chem]
///     1 = ad=(tsinghua univ same dep chem) and py=2005
///     2 = ad=(tsinghua univ same dep chem eng) and py=2005
///     query = #1 not #2
///
/// Lines starting with whitespace continue the previous value. Throws
/// ConfigError (with line number) on malformed lines, duplicate unit
/// names, missing queries and query syntax errors.
std::vector<UnitDefinition> parse_unit_definitions(std::istream& in);
std::vector<UnitDefinition> read_unit_definitions(const std::filesystem::path& path);

struct AssignedUnit {
  std::string name;
  IdSet members;
};

struct ExcludedUnit {
  std::string name;
  std::size_t publications = 0;
  std::size_t min_pubs = 0;
};

struct UnitFailure {
  std::string name;
  std::string message;
};

struct UnitAssignment {
  std::vector<AssignedUnit> units;  ///< included units, in definition order
  std::vector<ExcludedUnit> excluded;
  std::vector<UnitFailure> failures;
  /// Records that belong to more than one included unit.
  std::size_t overlap_count = 0;

  const AssignedUnit* find(std::string_view name) const;
};

/// Evaluates every unit's query against `corpus`. Units below their
/// min_pubs threshold are excluded; evaluation errors are recorded per
/// unit. Records may belong to several units.
UnitAssignment assign_units(const std::vector<UnitDefinition>& units, const Corpus& corpus);

/// `unit<TAB>status<TAB>publications<TAB>detail` lines, header first.
void write_assignment_report(std::ostream& out, const UnitAssignment& a);

}  // namespace fraccite
