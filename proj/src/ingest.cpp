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

#include "fraccite/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "fraccite/error.hpp"
#include "fraccite/text.hpp"

namespace fraccite {

namespace {

using TagMap = std::map<std::string, std::vector<std::string>, std::less<>>;

void strip_bom(std::string& line) {
  if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF &&
      static_cast<unsigned char>(line[1]) == 0xBB && static_cast<unsigned char>(line[2]) == 0xBF)
    line.erase(0, 3);
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

template <typename Int>
std::optional<Int> parse_int(std::string_view s) {
  s = text::trim(s);
  Int value{};
  auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

bool is_tag_char(char c) { return std::isupper(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)); }

/// "[Li, X; Wang, Y] Tsinghua Univ, ..." -> "Tsinghua Univ, ..."
std::string strip_author_block(std::string_view address) {
  address = text::trim(address);
  if (!address.empty() && address.front() == '[') {
    auto close = address.find(']');
    if (close != std::string_view::npos) address = text::trim(address.substr(close + 1));
  }
  return std::string(address);
}

/// Splits on ';' outside square brackets.
std::vector<std::string> split_addresses(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string current;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']' && depth > 0) --depth;
    if (c == ';' && depth == 0) {
      auto a = strip_author_block(current);
      if (!a.empty()) out.push_back(std::move(a));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  auto a = strip_author_block(current);
  if (!a.empty()) out.push_back(std::move(a));
  return out;
}

void append_split_refs(std::vector<std::string>& refs, std::string_view line) {
  for (auto& piece : text::split(line, ';')) {
    auto t = text::trim(piece);
    if (!t.empty()) refs.emplace_back(t);
  }
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

/// Builds a record from collected tag values. `addresses_split` tells
/// whether C1 values hold one address each (field-tagged) or a
/// semicolon-joined list (tab-delimited).
std::optional<PublicationRecord> build_record(const TagMap& tags, std::size_t line, bool tabbed,
                                              ParseReport& report) {
  auto get = [&](std::string_view tag) -> const std::vector<std::string>* {
    auto it = tags.find(tag);
    return it == tags.end() ? nullptr : &it->second;
  };

  PublicationRecord r;
  if (const auto* ut = get("UT")) r.id = std::string(text::trim(join(*ut, "")));
  if (r.id.empty()) {
    report.issues.push_back({line, "", "record has no UT (unique id)"});
    return std::nullopt;
  }

  const auto* py = get("PY");
  if (py == nullptr || py->empty()) {
    report.issues.push_back({line, r.id, "record has no PY (publication year)"});
    return std::nullopt;
  }
  auto year = parse_int<int>(join(*py, ""));
  if (!year || *year < 1000 || *year > 9999) {
    report.issues.push_back({line, r.id, "PY is not a 4-digit year: '" + join(*py, " ") + "'"});
    return std::nullopt;
  }
  r.year = *year;

  if (const auto* dt = get("DT")) r.doc_type = parse_doc_type(join(*dt, " "));
  if (const auto* so = get("SO")) r.source = join(*so, " ");
  if (const auto* di = get("DI")) r.doi = std::string(text::trim(join(*di, "")));

  if (const auto* c1 = get("C1")) {
    for (const auto& v : *c1) {
      if (tabbed) {
        auto split = split_addresses(v);
        r.addresses.insert(r.addresses.end(), split.begin(), split.end());
      } else {
        auto a = strip_author_block(v);
        if (!a.empty()) r.addresses.push_back(std::move(a));
      }
    }
  }

  if (const auto* cr = get("CR")) {
    for (const auto& v : *cr) append_split_refs(r.cited_refs, v);
  }

  const auto* nr = get("NR");
  if (nr != nullptr && !nr->empty() && !text::trim(join(*nr, "")).empty()) {
    auto k = parse_int<std::uint32_t>(join(*nr, ""));
    if (!k) {
      report.issues.push_back({line, r.id, "NR is not a nonnegative integer: '" + join(*nr, " ") + "'"});
      return std::nullopt;
    }
    r.ref_count = *k;
  } else {
    r.ref_count = static_cast<std::uint32_t>(r.cited_refs.size());
  }
  return r;
}

void push_unique(ParsedCorpus& out, std::unordered_set<std::string>& seen, PublicationRecord r, std::size_t line) {
  if (!seen.insert(r.id).second) {
    out.report.issues.push_back({line, r.id, "duplicate record id; later occurrence skipped"});
    return;
  }
  out.records.push_back(std::move(r));
}

ParsedCorpus parse_tagged(std::istream& in, std::string first_line, std::size_t first_line_no) {
  ParsedCorpus out;
  std::unordered_set<std::string> seen;
  TagMap tags;
  std::string current_tag;
  std::size_t record_line = 0;
  bool in_record = false;

  auto handle = [&](std::string& line, std::size_t line_no) {
    strip_cr(line);
    if (text::trim(line).empty()) return;
    bool continuation = line.size() >= 2 && line[0] == ' ' && line[1] == ' ';
    if (continuation) {
      if (in_record && !current_tag.empty()) tags[current_tag].emplace_back(text::trim(line));
      return;
    }
    if (line.size() < 2 || !is_tag_char(line[0]) || !is_tag_char(line[1]) || (line.size() > 2 && line[2] != ' ')) {
      out.report.issues.push_back({line_no, "", "line is neither a field tag nor a continuation; ignored"});
      return;
    }
    std::string tag = line.substr(0, 2);
    std::string value = line.size() > 3 ? std::string(text::trim(std::string_view(line).substr(3))) : std::string();
    if (tag == "FN" || tag == "VR" || tag == "EF") {
      current_tag.clear();
      return;
    }
    if (tag == "ER") {
      if (in_record) {
        if (auto r = build_record(tags, record_line, false, out.report)) push_unique(out, seen, std::move(*r), record_line);
      }
      tags.clear();
      current_tag.clear();
      in_record = false;
      return;
    }
    if (!in_record) {
      in_record = true;
      record_line = line_no;
    }
    current_tag = tag;
    tags[tag].push_back(std::move(value));
  };

  handle(first_line, first_line_no);
  std::string line;
  std::size_t line_no = first_line_no;
  while (std::getline(in, line)) handle(line, ++line_no);
  if (in.bad()) throw IoError("error while reading WoS export");
  if (in_record) out.report.issues.push_back({record_line, "", "record not terminated by ER; skipped"});
  return out;
}

ParsedCorpus parse_tab_delimited(std::istream& in, const std::string& header_line, std::size_t header_no) {
  ParsedCorpus out;
  std::unordered_set<std::string> seen;
  auto header = text::split(header_line, '\t');
  for (auto& h : header) h = std::string(text::trim(h));
  std::string line;
  std::size_t line_no = header_no;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (text::trim(line).empty()) continue;
    auto cols = text::split(line, '\t');
    TagMap tags;
    for (std::size_t i = 0; i < cols.size() && i < header.size(); ++i) {
      auto v = text::trim(cols[i]);
      if (!v.empty()) tags[header[i]].emplace_back(v);
    }
    if (auto r = build_record(tags, line_no, true, out.report)) push_unique(out, seen, std::move(*r), line_no);
  }
  if (in.bad()) throw IoError("error while reading WoS export");
  return out;
}

}  // namespace

ParsedCorpus parse_wos_export(std::istream& in) {
  if (!in.good()) throw IoError("WoS export stream is not readable");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) strip_bom(line);
    strip_cr(line);
    if (text::trim(line).empty()) continue;
    if (line.find('\t') != std::string::npos) return parse_tab_delimited(in, line, line_no);
    return parse_tagged(in, line, line_no);
  }
  if (in.bad()) throw IoError("error while reading WoS export");
  return {};
}

ParsedCorpus parse_canonical(std::istream& in) {
  if (!in.good()) throw IoError("canonical corpus stream is not readable");
  ParsedCorpus out;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) strip_bom(line);
    if (text::trim(line).empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      if (!j.is_object()) throw std::invalid_argument("line is not a JSON object");
      PublicationRecord r;
      r.id = j.at("id").get<std::string>();
      if (r.id.empty()) throw std::invalid_argument("empty id");
      r.year = j.at("year").get<int>();
      if (r.year < 1000 || r.year > 9999) throw std::invalid_argument("year is not a 4-digit year");
      if (auto it = j.find("doc_type"); it != j.end()) {
        auto t = doc_type_from_name(it->get<std::string>());
        if (!t) throw std::invalid_argument("unknown doc_type '" + it->get<std::string>() + "'");
        r.doc_type = *t;
      }
      if (auto it = j.find("source"); it != j.end()) r.source = it->get<std::string>();
      if (auto it = j.find("addresses"); it != j.end()) r.addresses = it->get<std::vector<std::string>>();
      if (auto it = j.find("ref_count"); it != j.end()) {
        auto k = it->get<long long>();
        if (k < 0 || k > 0xFFFFFFFFLL) throw std::invalid_argument("ref_count out of range");
        r.ref_count = static_cast<std::uint32_t>(k);
      }
      if (auto it = j.find("cited_refs"); it != j.end()) r.cited_refs = it->get<std::vector<std::string>>();
      if (auto it = j.find("doi"); it != j.end()) r.doi = it->get<std::string>();
      push_unique(out, seen, std::move(r), line_no);
    } catch (const std::exception& e) {
      out.report.issues.push_back({line_no, "", std::string("cannot decode line: ") + e.what()});
    }
  }
  if (in.bad()) throw IoError("error while reading canonical corpus");
  return out;
}

void write_canonical(std::ostream& out, const Corpus& records) {
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["year"] = r.year;
    j["doc_type"] = std::string(to_string(r.doc_type));
    j["source"] = r.source;
    j["addresses"] = r.addresses;
    j["ref_count"] = r.ref_count;
    j["cited_refs"] = r.cited_refs;
    if (!r.doi.empty()) j["doi"] = r.doi;
    out << j.dump() << '\n';
  }
}

std::string write_canonical(const Corpus& records) {
  std::ostringstream os;
  write_canonical(os, records);
  return os.str();
}

ParsedCorpus read_corpus_file(const std::filesystem::path& path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file: " + path.string());
  return format == CorpusFormat::Wos ? parse_wos_export(in) : parse_canonical(in);
}

Corpus filter_corpus(const Corpus& corpus, const std::set<DocType>& doc_types, int year) {
  Corpus out;
  std::copy_if(corpus.begin(), corpus.end(), std::back_inserter(out),
               [&](const PublicationRecord& r) { return r.year == year && doc_types.contains(r.doc_type); });
  return out;
}

}  // namespace fraccite
