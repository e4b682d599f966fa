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

#include "fraccite/impact.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "fraccite/error.hpp"
#include "fraccite/text.hpp"

namespace fraccite {

void FractionalCount::add(Reciprocal w, std::uint64_t times) {
  if (w.denominator == 0) throw InvalidArgument("fractional weight with denominator 0");
  if (times > 0) hist_[w.denominator] += times;
}

void FractionalCount::merge(const FractionalCount& other) {
  for (const auto& [k, n] : other.hist_) hist_[k] += n;
}

double FractionalCount::value() const {
  // Ascending k: the largest terms first, fixed order regardless of history.
  double sum = 0.0;
  for (const auto& [k, n] : hist_) sum += static_cast<double>(n) / static_cast<double>(k);
  return sum;
}

boost::multiprecision::cpp_rational FractionalCount::exact() const {
  boost::multiprecision::cpp_rational sum = 0;
  for (const auto& [k, n] : hist_) sum += boost::multiprecision::cpp_rational(n, k);
  return sum;
}

std::uint64_t FractionalCount::terms() const {
  std::uint64_t n = 0;
  for (const auto& [k, c] : hist_) n += c;
  return n;
}

UnitImpact make_unit_impact(std::string unit, const CitationWindow& window, std::size_t publications,
                            std::uint64_t integer_citations, double fractional_citations) {
  if (publications == 0) throw InvalidArgument("unit '" + unit + "' has no publications; ratios are undefined");
  UnitImpact u;
  u.unit = std::move(unit);
  u.window = window;
  u.publications = publications;
  u.integer_citations = integer_citations;
  u.fractional_citations = fractional_citations;
  u.ic_per_p = static_cast<double>(integer_citations) / static_cast<double>(publications);
  u.fc_per_p = fractional_citations / static_cast<double>(publications);
  return u;
}

std::vector<PerPaperScore> per_paper_scores(const std::vector<CitationLink>& links, const Corpus& cited,
                                            const CitationWindow& window) {
  std::vector<PerPaperScore> out;
  out.reserve(cited.size());
  std::unordered_map<std::string, std::size_t> pos;
  for (const auto& r : cited) {
    if (pos.contains(r.id)) continue;
    pos.emplace(r.id, out.size());
    out.push_back({r.id, 0, {}, window});
  }
  // ic counts distinct citing documents even if the link list repeats a pair.
  std::set<std::pair<std::string_view, std::string_view>> seen;
  for (const auto& l : links) {
    if (!window.contains(l.citing_year)) continue;
    auto it = pos.find(l.cited_id);
    if (it == pos.end()) continue;
    if (!seen.emplace(l.cited_id, l.citing_id).second) continue;
    auto& s = out[it->second];
    ++s.ic;
    s.fc.add(l.weight);
  }
  return out;
}

ScoreIndex index_scores(const std::vector<PerPaperScore>& scores) {
  ScoreIndex idx;
  idx.reserve(scores.size());
  for (const auto& s : scores) idx.emplace(s.paper_id, &s);
  return idx;
}

UnitImpact unit_impact(const std::string& unit, const IdSet& members, const ScoreIndex& scores,
                       const CitationWindow& window) {
  if (members.empty()) throw InvalidArgument("unit '" + unit + "' has no publications; ratios are undefined");
  std::uint64_t ic = 0;
  FractionalCount fc;
  for (const auto& id : members) {
    auto it = scores.find(id);
    if (it == scores.end()) throw InvalidArgument("unit '" + unit + "' member " + id + " has no score");
    ic += it->second->ic;
    fc.merge(it->second->fc);
  }
  return make_unit_impact(unit, window, members.size(), ic, fc.value());
}

std::size_t ImpactTable::window_index(const CitationWindow& w) const {
  auto it = std::find(windows.begin(), windows.end(), w);
  if (it == windows.end()) throw InvalidArgument("window " + w.label() + " is not in the table");
  return static_cast<std::size_t>(it - windows.begin());
}

ImpactTable impact_table(const UnitAssignment& assignment, const Corpus& cited, const std::vector<CitationLink>& links,
                         const std::vector<CitationWindow>& windows) {
  if (windows.empty()) throw InvalidArgument("impact table needs at least one citation window");
  ImpactTable t;
  t.windows = windows;
  t.rows.resize(assignment.units.size());
  for (const auto& w : windows) {
    auto scores = per_paper_scores(links, cited, w);
    auto idx = index_scores(scores);
    for (std::size_t u = 0; u < assignment.units.size(); ++u) {
      const auto& unit = assignment.units[u];
      t.rows[u].push_back(unit_impact(unit.name, unit.members, idx, w));
    }
  }
  return t;
}

void write_impact_tsv(std::ostream& out, const ImpactTable& table) {
  out << "unit\twindow\tP\tIC\tFC\tIC_per_P\tFC_per_P\n";
  for (const auto& row : table.rows) {
    for (const auto& c : row) {
      out << text::tsv_field(c.unit) << '\t' << c.window.label() << '\t' << c.publications << '\t'
          << c.integer_citations << '\t' << text::format_double(c.fractional_citations) << '\t'
          << text::format_double(c.ic_per_p) << '\t' << text::format_double(c.fc_per_p) << '\n';
    }
  }
}

namespace {

template <typename T>
T parse_number(std::string_view s, std::size_t line, const char* column) {
  s = text::trim(s);
  T v{};
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ParseError("line " + std::to_string(line) + ": bad " + column + " value '" + std::string(s) + "'");
  return v;
}

}  // namespace

ImpactTable read_impact_tsv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::map<std::string, std::size_t> col;
  std::vector<std::string> unit_order;
  std::map<std::string, std::map<CitationWindow, UnitImpact>> cells;
  std::set<CitationWindow> windows;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty() || line.front() == '#') continue;
    auto fields = text::split(line, '\t');
    if (col.empty()) {
      for (std::size_t i = 0; i < fields.size(); ++i) col[std::string(text::trim(fields[i]))] = i;
      for (const char* need : {"unit", "window", "P", "IC", "FC"}) {
        if (!col.contains(need))
          throw ParseError("line " + std::to_string(line_no) + ": impact table header lacks column '" + need + "'");
      }
      continue;
    }
    auto get = [&](const char* name) -> std::string_view {
      auto i = col.at(name);
      if (i >= fields.size())
        throw ParseError("line " + std::to_string(line_no) + ": missing column '" + std::string(name) + "'");
      return fields[i];
    };
    std::string unit(text::trim(get("unit")));
    if (unit.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty unit name");
    CitationWindow w{0, 0};
    try {
      w = CitationWindow::parse(get("window"));
    } catch (const InvalidArgument& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    auto p = parse_number<std::size_t>(get("P"), line_no, "P");
    auto ic = parse_number<std::uint64_t>(get("IC"), line_no, "IC");
    auto fc = parse_number<double>(get("FC"), line_no, "FC");
    if (p == 0) throw ParseError("line " + std::to_string(line_no) + ": unit '" + unit + "' has P = 0");
    if (fc < 0) throw ParseError("line " + std::to_string(line_no) + ": negative FC");
    if (!cells.contains(unit)) unit_order.push_back(unit);
    auto& m = cells[unit];
    if (m.contains(w))
      throw ParseError("line " + std::to_string(line_no) + ": duplicate row for '" + unit + "' " + w.label());
    m.emplace(w, make_unit_impact(unit, w, p, ic, fc));
    windows.insert(w);
  }
  if (in.bad()) throw IoError("error while reading impact table");
  if (col.empty()) throw ParseError("impact table is empty");

  ImpactTable t;
  t.windows.assign(windows.begin(), windows.end());
  for (const auto& u : unit_order) {
    const auto& m = cells.at(u);
    std::vector<UnitImpact> row;
    for (const auto& w : t.windows) {
      auto it = m.find(w);
      if (it == m.end()) throw ParseError("unit '" + u + "' has no row for window " + w.label());
      row.push_back(it->second);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_impact_text(std::ostream& out, const ImpactTable& table) {
  std::size_t name_w = 4;
  for (std::size_t u = 0; u < table.unit_count(); ++u) name_w = std::max(name_w, table.unit(u).size());

  std::ostringstream head1, head2;
  head1 << std::left << std::setw(static_cast<int>(name_w)) << "" << "  ";
  head2 << std::left << std::setw(static_cast<int>(name_w)) << "Unit" << "  ";
  for (const auto& w : table.windows) {
    head1 << std::left << std::setw(44) << w.label();
    head2 << std::right << std::setw(6) << "P" << std::setw(9) << "IC" << std::setw(9) << "IC/P" << std::setw(10)
          << "FC" << std::setw(8) << "FC/P" << "  ";
  }
  auto rstrip = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  out << rstrip(head1.str()) << '\n' << rstrip(head2.str()) << '\n';
  for (const auto& row : table.rows) {
    std::ostringstream line;
    line << std::left << std::setw(static_cast<int>(name_w)) << row.front().unit << "  " << std::right;
    for (const auto& c : row) {
      line << std::setw(6) << c.publications << std::setw(9) << c.integer_citations << std::setw(9)
           << text::format_fixed(c.ic_per_p, 2) << std::setw(10) << text::format_fixed(c.fractional_citations, 2)
           << std::setw(8) << text::format_fixed(c.fc_per_p, 2) << "  ";
    }
    out << rstrip(line.str()) << '\n';
  }
}

}  // namespace fraccite
