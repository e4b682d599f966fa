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

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fraccite/record.hpp"

namespace fraccite {

/// Inclusive range of citing-publication years.
class CitationWindow {
 public:
  /// Throws InvalidArgument when start > end.
  CitationWindow(int start_year, int end_year);

  int start_year() const { return start_; }
  int end_year() const { return end_; }
  int years() const { return end_ - start_ + 1; }
  bool contains(int year) const { return year >= start_ && year <= end_; }

  /// "2005-2009"
  std::string label() const;
  /// "05-09"
  std::string short_label() const;

  /// Parses "2005:2009" or "2005-2009".
  static CitationWindow parse(std::string_view text);

  auto operator<=>(const CitationWindow&) const = default;

 private:
  int start_;
  int end_;
};

/// Exact fractional weight 1/k of one citation. Stored as the denominator
/// so that weight * ref_count == 1 holds exactly.
struct Reciprocal {
  std::uint32_t denominator = 1;

  double value() const { return 1.0 / static_cast<double>(denominator); }
  auto operator<=>(const Reciprocal&) const = default;
};

/// 1/ref_count of the citing record. Throws InvalidArgument for
/// ref_count == 0.
Reciprocal fractional_weight(const PublicationRecord& citing);

struct CitationLink {
  std::string citing_id;
  std::string cited_id;
  int citing_year = 0;
  Reciprocal weight;
  /// The citing record is itself a member of the cited set.
  bool self_citation = false;

  std::uint32_t ref_count() const { return weight.denominator; }
  bool operator==(const CitationLink&) const = default;
};

struct ResolveOptions {
  bool exclude_self_citations = false;
  /// When set, only citing records of these types contribute.
  std::optional<std::set<DocType>> citing_doc_types;
};

/// Normalized lookup key of a cited-reference string: trimmed, lower-cased,
/// whitespace collapsed; a reference that carries "DOI <x>" maps to
/// "doi:<x>".
std::string reference_key(std::string_view cited_ref);

/// Keys under which a record can be cited: its id and, if present, its DOI.
std::vector<std::string> record_keys(const PublicationRecord& r);

/// Joins citing records to cited records. One link per distinct
/// (citing, cited) pair with weight 1/ref_count of the citing record.
/// Output is sorted by (citing_id, cited_id) and therefore independent of
/// input order.
///
/// Throws DataIntegrityError when a citing record that resolves to the cited
/// set has ref_count 0, or has fewer references than resolved cited papers.
std::vector<CitationLink> resolve_citations(const Corpus& cited, const Corpus& citing_corpus,
                                            const ResolveOptions& options = {});

/// Keeps links whose citing year lies in `window`; order-stable.
std::vector<CitationLink> apply_window(const std::vector<CitationLink>& links, const CitationWindow& window);

/// `citing_id,cited_id,citing_year,k,weight` lines with a header.
void write_link_dump(std::ostream& out, const std::vector<CitationLink>& links);

}  // namespace fraccite
