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

#include "fraccite/citation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iterator>
#include <ostream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "fraccite/error.hpp"
#include "fraccite/text.hpp"

namespace fraccite {

CitationWindow::CitationWindow(int start_year, int end_year) : start_(start_year), end_(end_year) {
  if (start_year > end_year)
    throw InvalidArgument("citation window start " + std::to_string(start_year) + " is after end " +
                          std::to_string(end_year));
}

std::string CitationWindow::label() const { return std::to_string(start_) + "-" + std::to_string(end_); }

std::string CitationWindow::short_label() const {
  auto two = [](int y) {
    auto s = std::to_string(((y % 100) + 100) % 100);
    return s.size() == 1 ? "0" + s : s;
  };
  return two(start_) + "-" + two(end_);
}

CitationWindow CitationWindow::parse(std::string_view s) {
  s = text::trim(s);
  auto sep = s.find_first_of(":-", 1);
  if (sep == std::string_view::npos) throw InvalidArgument("citation window must look like Y1:Y2, got '" + std::string(s) + "'");
  auto read = [&](std::string_view part) {
    part = text::trim(part);
    int v = 0;
    auto res = std::from_chars(part.data(), part.data() + part.size(), v);
    if (res.ec != std::errc() || res.ptr != part.data() + part.size())
      throw InvalidArgument("citation window must look like Y1:Y2, got '" + std::string(s) + "'");
    return v;
  };
  return CitationWindow(read(s.substr(0, sep)), read(s.substr(sep + 1)));
}

Reciprocal fractional_weight(const PublicationRecord& citing) {
  if (citing.ref_count == 0)
    throw InvalidArgument("record " + citing.id + " has ref_count 0; fractional weight is undefined");
  return Reciprocal{citing.ref_count};
}

std::string reference_key(std::string_view cited_ref) {
  auto lowered = text::to_lower(text::trim(cited_ref));
  auto pos = lowered.find("doi ");
  if (pos != std::string::npos && (pos == 0 || !std::isalnum(static_cast<unsigned char>(lowered[pos - 1])))) {
    std::string_view rest = text::trim(std::string_view(lowered).substr(pos + 4));
    if (!rest.empty() && rest.front() == '[') rest.remove_prefix(1);
    auto end = rest.find_first_of(" ,;]");
    auto doi = rest.substr(0, end);
    while (!doi.empty() && doi.back() == '.') doi.remove_suffix(1);
    if (!doi.empty()) return "doi:" + std::string(doi);
  }
  std::string out;
  bool space = false;
  for (char c : lowered) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = true;
      continue;
    }
    if (space && !out.empty()) out.push_back(' ');
    space = false;
    out.push_back(c);
  }
  return out;
}

std::vector<std::string> record_keys(const PublicationRecord& r) {
  std::vector<std::string> keys{reference_key(r.id)};
  if (!r.doi.empty()) keys.push_back("doi:" + text::to_lower(text::trim(r.doi)));
  return keys;
}

std::vector<CitationLink> resolve_citations(const Corpus& cited, const Corpus& citing_corpus,
                                            const ResolveOptions& options) {
  std::unordered_map<std::string, std::size_t> by_key;
  std::unordered_set<std::string> cited_ids;
  for (std::size_t i = 0; i < cited.size(); ++i) {
    cited_ids.insert(cited[i].id);
    for (auto& k : record_keys(cited[i])) by_key.emplace(std::move(k), i);
  }

  std::vector<CitationLink> links;
  for (const auto& citing : citing_corpus) {
    if (options.citing_doc_types && !options.citing_doc_types->contains(citing.doc_type)) continue;
    std::vector<std::size_t> hits;
    for (const auto& ref : citing.cited_refs) {
      auto it = by_key.find(reference_key(ref));
      if (it != by_key.end()) hits.push_back(it->second);
    }
    if (hits.empty()) continue;
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    if (citing.ref_count == 0)
      throw DataIntegrityError("citing record " + citing.id + " cites " + std::to_string(hits.size()) +
                               " cited paper(s) but has ref_count 0");
    if (citing.ref_count < hits.size())
      throw DataIntegrityError("citing record " + citing.id + " has ref_count " + std::to_string(citing.ref_count) +
                               " but resolves " + std::to_string(hits.size()) + " distinct cited papers");
    bool self = cited_ids.contains(citing.id);
    if (self && options.exclude_self_citations) continue;
    for (auto idx : hits) {
      links.push_back({citing.id, cited[idx].id, citing.year, Reciprocal{citing.ref_count}, self});
    }
  }
  std::sort(links.begin(), links.end(), [](const CitationLink& a, const CitationLink& b) {
    return std::tie(a.citing_id, a.cited_id) < std::tie(b.citing_id, b.cited_id);
  });
  links.erase(std::unique(links.begin(), links.end(),
                          [](const CitationLink& a, const CitationLink& b) {
                            return a.citing_id == b.citing_id && a.cited_id == b.cited_id;
                          }),
              links.end());
  return links;
}

std::vector<CitationLink> apply_window(const std::vector<CitationLink>& links, const CitationWindow& window) {
  std::vector<CitationLink> out;
  std::copy_if(links.begin(), links.end(), std::back_inserter(out),
               [&](const CitationLink& l) { return window.contains(l.citing_year); });
  return out;
}

void write_link_dump(std::ostream& out, const std::vector<CitationLink>& links) {
  out << "citing_id,cited_id,citing_year,k,weight\n";
  auto csv = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q.push_back('"');
      q.push_back(c);
    }
    return q + "\"";
  };
  for (const auto& l : links) {
    out << csv(l.citing_id) << ',' << csv(l.cited_id) << ',' << l.citing_year << ',' << l.weight.denominator << ','
        << text::format_double(l.weight.value()) << '\n';
  }
}

}  // namespace fraccite
