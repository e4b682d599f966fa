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
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fraccite {

enum class DocType { Article, Review, ProceedingsPaper, Other };

/// Canonical spelling: "article", "review", "proceedings-paper", "other".
std::string_view to_string(DocType t);

/// Accepts the canonical spellings and the WoS DT labels ("Article",
/// "Proceedings Paper", ...), case-insensitively. For compound WoS labels
/// ("Article; Proceedings Paper") the first element decides. Anything
/// unrecognised maps to Other.
DocType parse_doc_type(std::string_view label);

/// Strict variant for command-line and config input; nullopt on unknown text.
std::optional<DocType> doc_type_from_name(std::string_view name);

/// One indexed document.
struct PublicationRecord {
  std::string id;
  int year = 0;
  DocType doc_type = DocType::Other;
  std::string source;
  std::vector<std::string> addresses;
  /// Full length of the reference list (WoS NR), not just the resolvable part.
  std::uint32_t ref_count = 0;
  std::vector<std::string> cited_refs;
  /// Optional DOI, used as an extra resolution key for cited references.
  std::string doi;

  bool operator==(const PublicationRecord&) const = default;
};

using Corpus = std::vector<PublicationRecord>;
using IdSet = std::set<std::string>;

/// One record-level problem found while reading a corpus.
struct ParseIssue {
  std::size_t line = 0;   ///< 1-based line where the record (or bad line) starts
  std::string record_id;  ///< empty when unknown
  std::string message;

  bool operator==(const ParseIssue&) const = default;
};

struct ParseReport {
  std::vector<ParseIssue> issues;

  bool empty() const { return issues.empty(); }
  std::size_t size() const { return issues.size(); }
};

struct ParsedCorpus {
  Corpus records;
  ParseReport report;
};

/// Writes a report as `line<TAB>record_id<TAB>message` lines.
void write_parse_report(std::ostream& out, const ParseReport& report);

/// Returns problems that violate corpus-wide invariants: duplicate ids,
/// empty ids and years outside 1000..9999.
ParseReport validate_corpus(const Corpus& corpus);

}  // namespace fraccite
