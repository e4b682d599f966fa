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

#include "fraccite/reporting.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "fraccite/error.hpp"
#include "fraccite/text.hpp"

namespace fraccite {

std::string to_string(Parameter p) {
  switch (p) {
    case Parameter::P: return "P";
    case Parameter::IC: return "IC";
    case Parameter::FC: return "FC";
    case Parameter::IcPerP: return "IC/P";
    case Parameter::FcPerP: return "FC/P";
  }
  return "?";
}

Parameter parse_parameter(std::string_view name) {
  auto n = text::to_lower(text::trim(name));
  if (n == "p") return Parameter::P;
  if (n == "ic") return Parameter::IC;
  if (n == "fc") return Parameter::FC;
  if (n == "ic/p" || n == "ic_per_p") return Parameter::IcPerP;
  if (n == "fc/p" || n == "fc_per_p") return Parameter::FcPerP;
  throw InvalidArgument("unknown parameter '" + std::string(name) + "' (expected P, IC, FC, IC/P or FC/P)");
}

double parameter_value(const UnitImpact& u, Parameter p) {
  switch (p) {
    case Parameter::P: return static_cast<double>(u.publications);
    case Parameter::IC: return static_cast<double>(u.integer_citations);
    case Parameter::FC: return u.fractional_citations;
    case Parameter::IcPerP: return u.ic_per_p;
    case Parameter::FcPerP: return u.fc_per_p;
  }
  return 0.0;
}

RankingTable rank_units(const ImpactTable& table, Parameter parameter, const CitationWindow& window) {
  RankingTable r;
  r.parameter = parameter;
  r.window = window;
  if (table.rows.empty()) return r;
  auto w = table.window_index(window);
  for (const auto& row : table.rows) r.rows.push_back({0, row.at(w).unit, parameter_value(row.at(w), parameter), false});
  std::sort(r.rows.begin(), r.rows.end(), [](const RankingRow& a, const RankingRow& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.unit < b.unit;
  });
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    r.rows[i].rank = (i > 0 && r.rows[i].value == r.rows[i - 1].value) ? r.rows[i - 1].rank : i + 1;
  }
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    auto& a = r.rows[i - 1];
    auto& b = r.rows[i];
    if (a.value != b.value && text::format_fixed(a.value, 2) == text::format_fixed(b.value, 2)) {
      a.rounding_tie = true;
      b.rounding_tie = true;
    }
  }
  return r;
}

std::vector<RankChange> rank_change(const RankingTable& a, const RankingTable& b) {
  std::map<std::string, std::size_t> ra;
  for (const auto& row : a.rows) ra.emplace(row.unit, row.rank);
  if (ra.size() != b.rows.size()) throw InvalidArgument("rankings cover different unit sets");
  std::vector<RankChange> out;
  for (const auto& row : b.rows) {
    auto it = ra.find(row.unit);
    if (it == ra.end()) throw InvalidArgument("unit '" + row.unit + "' is missing from the first ranking");
    out.push_back({row.unit, it->second, row.rank,
                   static_cast<long>(it->second) - static_cast<long>(row.rank)});
  }
  return out;
}

std::string render_delta(long delta) {
  if (delta == 0) return "";
  return (delta > 0 ? "+" : "") + std::to_string(delta);
}

std::string format_coefficient(double r, int decimals) {
  auto s = text::format_fixed(r, decimals);
  if (s.starts_with("0.")) return s.substr(1);
  if (s.starts_with("-0.")) return "-" + s.substr(2);
  return s;
}

TextTable correlation_text_table(const CorrelationMatrix& m) {
  TextTable t;
  t.title = "Pearson (lower triangle) and Spearman (upper triangle) correlations, N = " + std::to_string(m.n);
  t.headers.push_back("");
  for (const auto& l : m.labels) t.headers.push_back(l);
  t.right_align.assign(t.headers.size(), true);
  t.right_align[0] = false;
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    std::vector<std::string> row{m.labels[i]};
    for (std::size_t j = 0; j < m.labels.size(); ++j) {
      if (i == j) {
        row.push_back("1");
        continue;
      }
      const auto& c = i < j ? m.spearman[i][j] : m.pearson[i][j];
      if (std::isnan(c.r)) {
        row.push_back("n/a");
        continue;
      }
      auto stars = significance_stars(c.p);
      row.push_back(format_coefficient(c.r) + (stars.empty() ? "" : "(" + stars + ")"));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string render_correlation(const CorrelationMatrix& m) {
  std::ostringstream s;
  render_table(s, correlation_text_table(m), ReportFormat::Text);
  s << "** p < 0.01, * p < 0.05 (2-tailed)\n";
  return s.str();
}

ReportFormat parse_report_format(std::string_view name) {
  auto n = text::to_lower(text::trim(name));
  if (n == "tsv") return ReportFormat::Tsv;
  if (n == "txt" || n == "text") return ReportFormat::Text;
  if (n == "md" || n == "markdown") return ReportFormat::Markdown;
  throw InvalidArgument("unknown report format '" + std::string(name) + "' (expected tsv, txt or md)");
}

std::string extension(ReportFormat f) {
  switch (f) {
    case ReportFormat::Tsv: return "tsv";
    case ReportFormat::Text: return "txt";
    case ReportFormat::Markdown: return "md";
  }
  return "txt";
}

void render_table(std::ostream& out, const TextTable& t, ReportFormat format) {
  auto right = [&](std::size_t c) { return c < t.right_align.size() && t.right_align[c]; };
  switch (format) {
    case ReportFormat::Tsv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "\t" : "") << text::tsv_field(cells[c]);
        out << '\n';
      };
      line(t.headers);
      for (const auto& r : t.rows) line(r);
      break;
    }
    case ReportFormat::Text: {
      std::vector<std::size_t> width(t.headers.size(), 0);
      for (std::size_t c = 0; c < t.headers.size(); ++c) width[c] = t.headers[c].size();
      for (const auto& r : t.rows)
        for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < width.size(); ++c) {
          const std::string& v = c < cells.size() ? cells[c] : std::string();
          std::string pad(width[c] - std::min(width[c], v.size()), ' ');
          if (c) s += "  ";
          s += right(c) ? pad + v : v + pad;
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        out << s << '\n';
      };
      if (!t.title.empty()) out << t.title << "\n\n";
      line(t.headers);
      std::size_t total = 0;
      for (auto w : width) total += w;
      total += width.empty() ? 0 : 2 * (width.size() - 1);
      out << std::string(total, '-') << '\n';
      for (const auto& r : t.rows) line(r);
      break;
    }
    case ReportFormat::Markdown: {
      auto cell = [](const std::string& v) {
        std::string o;
        for (char ch : v) {
          if (ch == '|') o += '\\';
          o += ch;
        }
        return o;
      };
      if (!t.title.empty()) out << "**" << t.title << "**\n\n";
      out << '|';
      for (const auto& h : t.headers) out << ' ' << cell(h) << " |";
      out << "\n|";
      for (std::size_t c = 0; c < t.headers.size(); ++c) out << (right(c) ? " ---: |" : " --- |");
      out << '\n';
      for (const auto& r : t.rows) {
        out << '|';
        for (std::size_t c = 0; c < t.headers.size(); ++c) out << ' ' << (c < r.size() ? cell(r[c]) : "") << " |";
        out << '\n';
      }
      break;
    }
  }
}

namespace {

std::string render_value(double v, Parameter p, bool machine) {
  if (p == Parameter::P || p == Parameter::IC) return std::to_string(static_cast<long long>(std::llround(v)));
  return machine ? text::format_double(v) : text::format_fixed(v, 2);
}

}  // namespace

TextTable ranking_comparison_table(const RankingTable& a, const RankingTable& b, bool machine) {
  TextTable t;
  auto pa = to_string(a.parameter), pb = to_string(b.parameter);
  t.title = "Ranking by " + pa + " (" + a.window.label() + ") and " + pb + " (" + b.window.label() + ")";
  t.headers = {"Rank", "Unit", pa, "Rank", "Unit", pb, "Rank change"};
  if (machine) t.headers.push_back("Rounding tie");
  t.right_align = {true, false, true, true, false, true, true, false};
  auto changes = rank_change(a, b);
  auto n = std::max(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ra = a.rows[i];
    const auto& rb = b.rows[i];
    std::vector<std::string> row{std::to_string(ra.rank), ra.unit, render_value(ra.value, a.parameter, machine),
                                 std::to_string(rb.rank), rb.unit, render_value(rb.value, b.parameter, machine),
                                 machine ? std::to_string(changes[i].delta) : render_delta(changes[i].delta)};
    if (machine) {
      std::string flags;
      if (ra.rounding_tie) flags += "a";
      if (rb.rounding_tie) flags += "b";
      row.push_back(flags);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

TextTable impact_text_table(const ImpactTable& table, bool machine) {
  TextTable t;
  t.title = "Counting scores by unit";
  t.headers = {"Unit"};
  t.right_align = {false};
  for (const auto& w : table.windows) {
    auto s = " (" + w.short_label() + ")";
    for (const char* h : {"P", "IC", "IC/P", "FC", "FC/P"}) {
      t.headers.push_back(h + s);
      t.right_align.push_back(true);
    }
  }
  auto num = [&](double v) { return machine ? text::format_double(v) : text::format_fixed(v, 2); };
  for (const auto& row : table.rows) {
    std::vector<std::string> cells{row.front().unit};
    for (const auto& c : row) {
      cells.push_back(std::to_string(c.publications));
      cells.push_back(std::to_string(c.integer_citations));
      cells.push_back(num(c.ic_per_p));
      cells.push_back(num(c.fractional_citations));
      cells.push_back(num(c.fc_per_p));
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

std::vector<LabeledVector> correlation_parameters(const ImpactTable& impact) {
  std::vector<LabeledVector> out;
  if (impact.windows.empty()) return out;
  auto column = [&](std::size_t w, Parameter p) {
    std::vector<double> v;
    for (const auto& row : impact.rows) v.push_back(parameter_value(row.at(w), p));
    return v;
  };
  auto year = std::to_string(impact.windows.front().start_year());
  out.push_back({"P (" + year + ")", column(0, Parameter::P)});
  for (Parameter p : {Parameter::IcPerP, Parameter::FcPerP, Parameter::IC, Parameter::FC}) {
    for (std::size_t w = 0; w < impact.windows.size(); ++w)
      out.push_back({to_string(p) + " (" + impact.windows[w].short_label() + ")", column(w, p)});
  }
  return out;
}

Report build_report(const ImpactTable& impact, bool with_correlations) {
  Report r;
  r.impact = impact;
  for (const auto& w : impact.windows) {
    r.rankings.push_back({"ic_vs_fc_" + w.label(), rank_units(impact, Parameter::IC, w), rank_units(impact, Parameter::FC, w)});
    r.rankings.push_back(
        {"icp_vs_fcp_" + w.label(), rank_units(impact, Parameter::IcPerP, w), rank_units(impact, Parameter::FcPerP, w)});
  }
  if (with_correlations && impact.unit_count() >= 3) r.correlations = correlation_matrix(correlation_parameters(impact));
  return r;
}

std::vector<std::filesystem::path> export_report(const Report& report, ReportFormat format,
                                                 const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw OutputError("cannot create output directory " + dir.string() + ": " + ec.message());
  bool machine = format == ReportFormat::Tsv;
  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& stem, const TextTable& t, const std::string& footer) {
    auto path = dir / (stem + "." + extension(format));
    std::ofstream out(path, std::ios::binary);
    if (!out) throw OutputError("cannot write " + path.string());
    render_table(out, t, format);
    if (!footer.empty() && format != ReportFormat::Tsv) out << '\n' << footer << '\n';
    out.flush();
    if (!out) throw OutputError("error while writing " + path.string());
    written.push_back(path);
  };
  emit("impact_table", impact_text_table(report.impact, machine), "");
  for (const auto& p : report.rankings) emit(p.name, ranking_comparison_table(p.a, p.b, machine), "");
  if (report.correlations) {
    auto t = correlation_text_table(*report.correlations);
    if (machine) t.title.clear();
    emit("correlations", t, "** p < 0.01, * p < 0.05 (2-tailed)");
  }
  return written;
}

}  // namespace fraccite
