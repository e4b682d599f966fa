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

#include "fraccite/record.hpp"

#include <ostream>
#include <unordered_set>

#include "fraccite/text.hpp"

namespace fraccite {

std::string_view to_string(DocType t) {
  switch (t) {
    case DocType::Article:
      return "article";
    case DocType::Review:
      return "review";
    case DocType::ProceedingsPaper:
      return "proceedings-paper";
    case DocType::Other:
      break;
  }
  return "other";
}

std::optional<DocType> doc_type_from_name(std::string_view name) {
  auto n = text::normalize_phrase(name);
  if (n == "article") return DocType::Article;
  if (n == "review") return DocType::Review;
  if (n == "proceedings paper" || n == "proceeding paper") return DocType::ProceedingsPaper;
  if (n == "other") return DocType::Other;
  return std::nullopt;
}

DocType parse_doc_type(std::string_view label) {
  auto first = label.substr(0, label.find(';'));
  return doc_type_from_name(text::trim(first)).value_or(DocType::Other);
}

void write_parse_report(std::ostream& out, const ParseReport& report) {
  for (const auto& issue : report.issues) {
    out << issue.line << '\t' << text::tsv_field(issue.record_id) << '\t' << text::tsv_field(issue.message)
        << '\n';
  }
}

ParseReport validate_corpus(const Corpus& corpus) {
  ParseReport report;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& r = corpus[i];
    if (r.id.empty()) {
      report.issues.push_back({i + 1, "", "empty record id"});
      continue;
    }
    if (!seen.insert(r.id).second) report.issues.push_back({i + 1, r.id, "duplicate record id"});
    if (r.year < 1000 || r.year > 9999)
      report.issues.push_back({i + 1, r.id, "year is not a 4-digit year: " + std::to_string(r.year)});
  }
  return report;
}

}  // namespace fraccite
