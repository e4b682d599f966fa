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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fraccite/record.hpp"

namespace fraccite {

/// Affiliation query in the WoS advanced-search dialect.
///
///   ad=(tsinghua univ same dep phys) and ad=(china not taiwan) and py=2005
///   #1 not #2
///
/// Operator precedence, tightest first: SAME, NOT, AND, OR. All binary
/// operators are left-associative. Keywords are case-insensitive.
///
/// NOT is a set difference at record level, also inside a field group:
/// `ad=(china not taiwan)` keeps records with a "china" address and no
/// "taiwan" address anywhere.
struct QueryExpr {
  enum class Kind {
    Phrase,  ///< address phrase; `text` holds the normalized words
    Same,    ///< all `phrases` inside one address string
    Year,    ///< py=`year`
    Ref,     ///< #`ref`, a previously named result set
    And,
    Or,
    Not,  ///< children[0] minus children[1]
  };

  Kind kind = Kind::Phrase;
  std::string text;
  std::vector<std::string> phrases;
  int year = 0;
  int ref = 0;
  std::vector<QueryExpr> children;

  static QueryExpr phrase(std::string_view words);
  static QueryExpr same(std::vector<std::string> phrase_list);
  static QueryExpr year_equals(int y);
  static QueryExpr reference(int n);
  static QueryExpr binary(Kind k, QueryExpr lhs, QueryExpr rhs);

  bool operator==(const QueryExpr&) const = default;
};

/// Parses query text. Throws QuerySyntaxError carrying the byte offset of
/// the offending token and a hint of what was expected there.
QueryExpr parse_affiliation_query(std::string_view text);

/// Fully parenthesized canonical rendering; parse_affiliation_query()
/// of the result gives back an equal tree.
std::string render_query(const QueryExpr& expr);

/// Normalized address tokens of a corpus, built once and shared across
/// evaluations.
class CorpusIndex {
 public:
  explicit CorpusIndex(const Corpus& corpus);

  std::size_t size() const { return ids_.size(); }
  const std::string& id(std::size_t i) const { return ids_[i]; }
  int year(std::size_t i) const { return years_[i]; }
  const std::vector<std::vector<std::string>>& address_tokens(std::size_t i) const { return addresses_[i]; }
  IdSet all_ids() const;

 private:
  std::vector<std::string> ids_;
  std::vector<int> years_;
  std::vector<std::vector<std::vector<std::string>>> addresses_;
};

using NamedResults = std::map<int, IdSet>;

/// True when `phrase` occurs as a whole-word phrase in `address`
/// (both normalized with text::normalize_phrase).
bool address_contains_phrase(std::string_view address, std::string_view phrase);

/// Evaluates `expr` to the set of matching record ids. Throws
/// UnresolvedReferenceError for a `#n` missing from `named`.
IdSet evaluate_query(const QueryExpr& expr, const CorpusIndex& index, const NamedResults& named = {});
IdSet evaluate_query(const QueryExpr& expr, const Corpus& corpus, const NamedResults& named = {});

}  // namespace fraccite
