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

#include "fraccite/query.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iterator>
#include <optional>

#include "fraccite/error.hpp"
#include "fraccite/text.hpp"

namespace fraccite {

QueryExpr QueryExpr::phrase(std::string_view words) {
  QueryExpr e;
  e.kind = Kind::Phrase;
  e.text = text::normalize_phrase(words);
  return e;
}

QueryExpr QueryExpr::same(std::vector<std::string> phrase_list) {
  QueryExpr e;
  e.kind = Kind::Same;
  for (auto& p : phrase_list) e.phrases.push_back(text::normalize_phrase(p));
  return e;
}

QueryExpr QueryExpr::year_equals(int y) {
  QueryExpr e;
  e.kind = Kind::Year;
  e.year = y;
  return e;
}

QueryExpr QueryExpr::reference(int n) {
  QueryExpr e;
  e.kind = Kind::Ref;
  e.ref = n;
  return e;
}

QueryExpr QueryExpr::binary(Kind k, QueryExpr lhs, QueryExpr rhs) {
  QueryExpr e;
  e.kind = k;
  e.children.push_back(std::move(lhs));
  e.children.push_back(std::move(rhs));
  return e;
}

namespace {

enum class Tok { Word, Quoted, LParen, RParen, Equals, Ref, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  std::size_t offset = 0;
  int ref = 0;
};

bool is_word_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '=' && c != '"';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.offset = i;
    if (c == '(') {
      t.type = Tok::LParen;
      ++i;
    } else if (c == ')') {
      t.type = Tok::RParen;
      ++i;
    } else if (c == '=') {
      t.type = Tok::Equals;
      ++i;
    } else if (c == '"') {
      auto close = s.find('"', i + 1);
      if (close == std::string_view::npos) throw QuerySyntaxError(i, "closing '\"'", "unterminated quoted phrase");
      t.type = Tok::Quoted;
      t.text = std::string(s.substr(i + 1, close - i - 1));
      i = close + 1;
    } else if (c == '#' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && is_word_char(s[j])) throw QuerySyntaxError(i, "result reference '#n'", "malformed reference");
      t.type = Tok::Ref;
      auto digits = s.substr(i + 1, j - i - 1);
      auto res = std::from_chars(digits.data(), digits.data() + digits.size(), t.ref);
      if (res.ec != std::errc()) throw QuerySyntaxError(i, "result reference '#n'", "reference number out of range");
      t.text = std::string(s.substr(i, j - i));
      i = j;
    } else {
      std::size_t j = i;
      while (j < s.size() && is_word_char(s[j])) ++j;
      t.type = Tok::Word;
      t.text = std::string(s.substr(i, j - i));
      i = j;
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.type = Tok::End;
  end.offset = s.size();
  out.push_back(end);
  return out;
}

bool is_keyword(std::string_view w) {
  return text::iequals(w, "and") || text::iequals(w, "or") || text::iequals(w, "not") || text::iequals(w, "same");
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  QueryExpr parse() {
    auto e = parse_or(false);
    if (peek().type != Tok::End) fail("end of query", "unexpected '" + describe(peek()) + "'");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  const Token& next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

  [[noreturn]] void fail(const std::string& expected, const std::string& message) const {
    throw QuerySyntaxError(peek().offset, expected, message);
  }

  static std::string describe(const Token& t) {
    switch (t.type) {
      case Tok::LParen:
        return "(";
      case Tok::RParen:
        return ")";
      case Tok::Equals:
        return "=";
      case Tok::End:
        return "end of query";
      default:
        return t.text;
    }
  }

  bool at_keyword(std::string_view kw) const { return peek().type == Tok::Word && text::iequals(peek().text, kw); }

  // The same precedence ladder serves the top level (`in_group == false`)
  // and the inside of ad=( ... ) groups.
  QueryExpr parse_or(bool in_group) {
    auto lhs = parse_and(in_group);
    while (at_keyword("or")) {
      next();
      lhs = QueryExpr::binary(QueryExpr::Kind::Or, std::move(lhs), parse_and(in_group));
    }
    return lhs;
  }

  QueryExpr parse_and(bool in_group) {
    auto lhs = parse_not(in_group);
    while (at_keyword("and")) {
      next();
      lhs = QueryExpr::binary(QueryExpr::Kind::And, std::move(lhs), parse_not(in_group));
    }
    return lhs;
  }

  QueryExpr parse_not(bool in_group) {
    auto lhs = in_group ? parse_group_same() : parse_term();
    while (at_keyword("not")) {
      next();
      auto rhs = in_group ? parse_group_same() : parse_term();
      lhs = QueryExpr::binary(QueryExpr::Kind::Not, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  QueryExpr parse_term() {
    const auto& t = peek();
    if (t.type == Tok::Ref) {
      next();
      return QueryExpr::reference(t.ref);
    }
    if (t.type == Tok::LParen) {
      next();
      auto e = parse_or(false);
      expect_rparen();
      return e;
    }
    if (t.type == Tok::Word && peek(1).type == Tok::Equals) {
      if (text::iequals(t.text, "ad")) {
        next();
        next();
        return parse_address_body();
      }
      if (text::iequals(t.text, "py")) {
        next();
        next();
        return parse_year();
      }
      fail("field tag 'ad' or 'py'", "unsupported field tag '" + t.text + "'");
    }
    if (at_keyword("same")) fail("'ad=', 'py=', '#n' or '('", "SAME is only allowed inside an ad= field");
    fail("'ad=', 'py=', '#n' or '('", "unexpected '" + describe(t) + "'");
  }

  QueryExpr parse_year() {
    const auto& t = peek();
    if (t.type != Tok::Word || t.text.size() != 4 ||
        !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail("4-digit year", "invalid year '" + describe(t) + "'");
    next();
    return QueryExpr::year_equals(std::stoi(t.text));
  }

  QueryExpr parse_address_body() {
    if (peek().type == Tok::LParen) {
      next();
      auto e = parse_or(true);
      expect_rparen();
      return e;
    }
    return parse_group_same();
  }

  QueryExpr parse_group_same() {
    if (peek().type == Tok::LParen) {
      next();
      auto e = parse_or(true);
      expect_rparen();
      if (at_keyword("same")) fail("address phrase", "SAME operands must be address phrases, not groups");
      return e;
    }
    std::vector<std::string> phrases;
    phrases.push_back(parse_phrase());
    while (at_keyword("same")) {
      next();
      if (peek().type == Tok::LParen) fail("address phrase", "SAME operands must be address phrases, not groups");
      phrases.push_back(parse_phrase());
    }
    if (phrases.size() == 1) return QueryExpr::phrase(phrases.front());
    return QueryExpr::same(std::move(phrases));
  }

  std::string parse_phrase() {
    std::string words;
    std::size_t start = peek().offset;
    while ((peek().type == Tok::Word && !is_keyword(peek().text) && peek(1).type != Tok::Equals) ||
           peek().type == Tok::Quoted) {
      if (!words.empty()) words.push_back(' ');
      words += next().text;
    }
    if (words.empty()) fail("address phrase", "unexpected '" + describe(peek()) + "'");
    auto norm = text::normalize_phrase(words);
    if (norm.empty()) throw QuerySyntaxError(start, "address phrase", "phrase has no letters or digits");
    return norm;
  }

  void expect_rparen() {
    if (peek().type != Tok::RParen) fail("')'", "unexpected '" + describe(peek()) + "'");
    next();
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string render_phrase(const std::string& phrase) {
  std::string out;
  for (const auto& w : text::split(phrase, ' ')) {
    if (!out.empty()) out.push_back(' ');
    if (is_keyword(w)) {
      out += '"' + w + '"';
    } else {
      out += w;
    }
  }
  return out;
}

bool tokens_contain(const std::vector<std::string>& hay, const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > hay.size()) return false;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

IdSet set_and(const IdSet& a, const IdSet& b) {
  IdSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

IdSet set_or(const IdSet& a, const IdSet& b) {
  IdSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

IdSet set_minus(const IdSet& a, const IdSet& b) {
  IdSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace

QueryExpr parse_affiliation_query(std::string_view src) { return Parser(src).parse(); }

std::string render_query(const QueryExpr& e) {
  using K = QueryExpr::Kind;
  switch (e.kind) {
    case K::Phrase:
      return "ad=(" + render_phrase(e.text) + ")";
    case K::Same: {
      std::string out = "ad=(";
      for (std::size_t i = 0; i < e.phrases.size(); ++i) {
        if (i) out += " same ";
        out += render_phrase(e.phrases[i]);
      }
      return out + ")";
    }
    case K::Year:
      return "py=" + std::to_string(e.year);
    case K::Ref:
      return "#" + std::to_string(e.ref);
    case K::And:
      return "(" + render_query(e.children.at(0)) + " and " + render_query(e.children.at(1)) + ")";
    case K::Or:
      return "(" + render_query(e.children.at(0)) + " or " + render_query(e.children.at(1)) + ")";
    case K::Not:
      return "(" + render_query(e.children.at(0)) + " not " + render_query(e.children.at(1)) + ")";
  }
  return {};
}

CorpusIndex::CorpusIndex(const Corpus& corpus) {
  ids_.reserve(corpus.size());
  years_.reserve(corpus.size());
  addresses_.reserve(corpus.size());
  for (const auto& r : corpus) {
    ids_.push_back(r.id);
    years_.push_back(r.year);
    std::vector<std::vector<std::string>> toks;
    toks.reserve(r.addresses.size());
    for (const auto& a : r.addresses) toks.push_back(text::phrase_tokens(a));
    addresses_.push_back(std::move(toks));
  }
}

IdSet CorpusIndex::all_ids() const { return IdSet(ids_.begin(), ids_.end()); }

bool address_contains_phrase(std::string_view address, std::string_view phrase) {
  return tokens_contain(text::phrase_tokens(address), text::phrase_tokens(phrase));
}

IdSet evaluate_query(const QueryExpr& e, const CorpusIndex& index, const NamedResults& named) {
  using K = QueryExpr::Kind;
  switch (e.kind) {
    case K::Phrase:
    case K::Same: {
      std::vector<std::vector<std::string>> needles;
      if (e.kind == K::Phrase) {
        needles.push_back(text::phrase_tokens(e.text));
      } else {
        for (const auto& p : e.phrases) needles.push_back(text::phrase_tokens(p));
      }
      IdSet out;
      for (std::size_t i = 0; i < index.size(); ++i) {
        for (const auto& addr : index.address_tokens(i)) {
          bool all = std::all_of(needles.begin(), needles.end(),
                                 [&](const auto& n) { return tokens_contain(addr, n); });
          if (all) {
            out.insert(index.id(i));
            break;
          }
        }
      }
      return out;
    }
    case K::Year: {
      IdSet out;
      for (std::size_t i = 0; i < index.size(); ++i) {
        if (index.year(i) == e.year) out.insert(index.id(i));
      }
      return out;
    }
    case K::Ref: {
      auto it = named.find(e.ref);
      if (it == named.end()) throw UnresolvedReferenceError(e.ref);
      return it->second;
    }
    case K::And:
      return set_and(evaluate_query(e.children.at(0), index, named), evaluate_query(e.children.at(1), index, named));
    case K::Or:
      return set_or(evaluate_query(e.children.at(0), index, named), evaluate_query(e.children.at(1), index, named));
    case K::Not:
      return set_minus(evaluate_query(e.children.at(0), index, named),
                       evaluate_query(e.children.at(1), index, named));
  }
  return {};
}

IdSet evaluate_query(const QueryExpr& expr, const Corpus& corpus, const NamedResults& named) {
  return evaluate_query(expr, CorpusIndex(corpus), named);
}

}  // namespace fraccite
