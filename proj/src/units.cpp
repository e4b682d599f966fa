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

#include "fraccite/units.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include "fraccite/error.hpp"
#include "fraccite/text.hpp"

namespace fraccite {

namespace {

struct PendingUnit {
  std::string name;
  std::size_t line = 0;
  std::size_t min_pubs = kDefaultMinPublications;
  std::vector<std::pair<int, std::string>> steps;
  std::string query;
  std::size_t query_line = 0;
};

std::size_t parse_min_pubs(std::string_view v, std::size_t line) {
  v = text::trim(v);
  std::size_t n = 0;
  auto res = std::from_chars(v.data(), v.data() + v.size(), n);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    throw ConfigError("line " + std::to_string(line) + ": min_pubs must be a nonnegative integer");
  return n;
}

QueryExpr compile(const std::string& unit, const std::string& q, std::size_t line) {
  try {
    return parse_affiliation_query(q);
  } catch (const QuerySyntaxError& e) {
    throw ConfigError("line " + std::to_string(line) + ": unit '" + unit + "': " + e.what());
  }
}

}  // namespace

std::vector<UnitDefinition> parse_unit_definitions(std::istream& in) {
  std::vector<PendingUnit> pending;
  std::size_t default_min = kDefaultMinPublications;
  std::string* last_value = nullptr;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto t = text::trim(line);
    if (t.empty() || t.front() == '#' || t.front() == ';') {
      if (t.empty()) last_value = nullptr;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(line.front())) && last_value != nullptr) {
      *last_value += ' ';
      *last_value += t;
      continue;
    }
    last_value = nullptr;
    if (t.front() == '[') {
      if (t.back() != ']') throw ConfigError("line " + std::to_string(line_no) + ": unterminated section header");
      PendingUnit u;
      u.name = std::string(text::trim(t.substr(1, t.size() - 2)));
      if (u.name.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty unit name");
      u.line = line_no;
      u.min_pubs = default_min;
      pending.push_back(std::move(u));
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    auto key = text::to_lower(text::trim(t.substr(0, eq)));
    auto value = std::string(text::trim(t.substr(eq + 1)));

    if (pending.empty()) {
      if (key != "min_pubs")
        throw ConfigError("line " + std::to_string(line_no) + ": only min_pubs may precede the first [unit]");
      default_min = parse_min_pubs(value, line_no);
      continue;
    }
    auto& u = pending.back();
    if (key == "min_pubs") {
      u.min_pubs = parse_min_pubs(value, line_no);
    } else if (key == "query") {
      if (!u.query.empty()) throw ConfigError("line " + std::to_string(line_no) + ": duplicate query for '" + u.name + "'");
      u.query = value;
      u.query_line = line_no;
      last_value = &u.query;
    } else {
      int step = 0;
      auto res = std::from_chars(key.data(), key.data() + key.size(), step);
      if (res.ec != std::errc() || res.ptr != key.data() + key.size() || step < 0)
        throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
      u.steps.emplace_back(step, value);
      last_value = &u.steps.back().second;
    }
  }
  if (in.bad()) throw IoError("error while reading unit definitions");

  std::vector<UnitDefinition> out;
  std::set<std::string> names;
  for (auto& p : pending) {
    if (!names.insert(p.name).second)
      throw ConfigError("line " + std::to_string(p.line) + ": duplicate unit name '" + p.name + "'");
    if (p.query.empty()) throw ConfigError("line " + std::to_string(p.line) + ": unit '" + p.name + "' has no query");
    UnitDefinition d;
    d.name = p.name;
    d.min_pubs = p.min_pubs;
    for (auto& [n, q] : p.steps) d.steps.emplace_back(n, compile(p.name, q, p.line));
    d.query = compile(p.name, p.query, p.query_line);
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<UnitDefinition> read_unit_definitions(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open unit definitions: " + path.string());
  return parse_unit_definitions(in);
}

const AssignedUnit* UnitAssignment::find(std::string_view name) const {
  for (const auto& u : units) {
    if (u.name == name) return &u;
  }
  return nullptr;
}

UnitAssignment assign_units(const std::vector<UnitDefinition>& units, const Corpus& corpus) {
  UnitAssignment out;
  CorpusIndex index(corpus);
  for (const auto& u : units) {
    try {
      NamedResults named;
      for (const auto& [n, q] : u.steps) named[n] = evaluate_query(q, index, named);
      auto ids = evaluate_query(u.query, index, named);
      if (ids.size() < u.min_pubs) {
        out.excluded.push_back({u.name, ids.size(), u.min_pubs});
      } else {
        out.units.push_back({u.name, std::move(ids)});
      }
    } catch (const Error& e) {
      out.failures.push_back({u.name, e.what()});
    }
  }
  std::map<std::string_view, int> membership;
  for (const auto& u : out.units) {
    for (const auto& id : u.members) ++membership[id];
  }
  for (const auto& [id, n] : membership) {
    if (n > 1) ++out.overlap_count;
  }
  return out;
}

void write_assignment_report(std::ostream& out, const UnitAssignment& a) {
  out << "unit\tstatus\tpublications\tdetail\n";
  for (const auto& u : a.units) out << text::tsv_field(u.name) << "\tincluded\t" << u.members.size() << "\t\n";
  for (const auto& u : a.excluded) {
    out << text::tsv_field(u.name) << "\texcluded\t" << u.publications << "\tfewer than " << u.min_pubs
        << " publications\n";
  }
  for (const auto& u : a.failures) out << text::tsv_field(u.name) << "\terror\t0\t" << text::tsv_field(u.message) << '\n';
  out << "# records in more than one unit: " << a.overlap_count << '\n';
}

}  // namespace fraccite
