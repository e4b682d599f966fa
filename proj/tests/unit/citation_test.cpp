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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "fraccite/citation.hpp"
#include "fraccite/error.hpp"
#include "test_support.hpp"

namespace fraccite {
namespace {

using testing::record;

TEST(Window, ParseLabelAndBounds) {
  auto w = CitationWindow::parse("2005:2009");
  EXPECT_EQ(w, CitationWindow(2005, 2009));
  EXPECT_EQ(w.label(), "2005-2009");
  EXPECT_EQ(w.short_label(), "05-09");
  EXPECT_EQ(w.years(), 5);
  EXPECT_EQ(CitationWindow::parse("2005-2007"), CitationWindow(2005, 2007));
  EXPECT_THROW(CitationWindow(2009, 2005), InvalidArgument);
  EXPECT_THROW(CitationWindow::parse("2005"), InvalidArgument);
  EXPECT_THROW(CitationWindow::parse("a:b"), InvalidArgument);
}

TEST(FractionalWeight, Examples) {
  EXPECT_DOUBLE_EQ(fractional_weight(record("c", 2006, {}, 1)).value(), 1.0);
  EXPECT_DOUBLE_EQ(fractional_weight(record("c", 2006, {}, 40)).value(), 0.025);
  EXPECT_THROW(fractional_weight(record("c", 2006, {}, 0)), InvalidArgument);
}

TEST(Resolve, SixAndFortyReferences) {
  Corpus cited{record("P1", 2005, {})};
  auto six = resolve_citations(cited, {record("C6", 2006, {}, 6, {"P1"})});
  ASSERT_EQ(six.size(), 1u);
  EXPECT_NEAR(six[0].weight.value(), 1.0 / 6, 1e-15);
  EXPECT_EQ(six[0].ref_count(), 6u);
  auto forty = resolve_citations(cited, {record("C40", 2006, {}, 40, {"P1"})});
  EXPECT_DOUBLE_EQ(forty[0].weight.value(), 0.025);
}

TEST(Resolve, NoCitedSetReferencesNoLinks) {
  Corpus cited{record("P1", 2005, {})};
  EXPECT_TRUE(resolve_citations(cited, {record("C", 2006, {}, 3, {"elsewhere", "X"})}).empty());
}

TEST(Resolve, DuplicateMentionsCollapseAndKeysNormalize) {
  auto p = record("WOS:000A", 2005, {});
  p.doi = "10.1000/XYZ";
  Corpus cited{p};
  auto links = resolve_citations(cited, {record("C", 2006, {}, 5, {"wos:000a", " WOS:000A ", "Smith J, 2005, DOI 10.1000/xyz"})});
  ASSERT_EQ(links.size(), 1u);
  EXPECT_EQ(links[0].cited_id, "WOS:000A");
}

TEST(Resolve, IntegrityErrors) {
  Corpus cited{record("P1", 2005, {}), record("P2", 2005, {})};
  EXPECT_THROW(resolve_citations(cited, {record("C", 2006, {}, 0, {"P1"})}), DataIntegrityError);
  EXPECT_THROW(resolve_citations(cited, {record("C", 2006, {}, 1, {"P1", "P2"})}), DataIntegrityError);
}

TEST(Resolve, SelfCitationsFlaggedAndOptionallyDropped) {
  Corpus cited{record("P1", 2005, {}, 2, {"P2"}), record("P2", 2005, {})};
  auto all = resolve_citations(cited, cited);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(all[0].self_citation);
  EXPECT_TRUE(resolve_citations(cited, cited, {.exclude_self_citations = true}).empty());
}

TEST(Resolve, CitingTypeFilter) {
  Corpus cited{record("P1", 2005, {})};
  Corpus citing{record("A", 2006, {}, 2, {"P1"}), record("E", 2006, {}, 2, {"P1"}, DocType::Other)};
  EXPECT_EQ(resolve_citations(cited, citing).size(), 2u);
  ResolveOptions o;
  o.citing_doc_types = std::set<DocType>{DocType::Article};
  auto f = resolve_citations(cited, citing, o);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].citing_id, "A");
}

struct RandomCase {
  Corpus cited, citing;
};

RandomCase random_case(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RandomCase rc;
  for (int i = 0; i < 40; ++i) rc.cited.push_back(record("P" + std::to_string(i), 2005, {}));
  for (int j = 0; j < 300; ++j) {
    std::vector<std::string> refs;
    int n = static_cast<int>(rng() % 6);
    for (int r = 0; r < n; ++r) refs.push_back("P" + std::to_string(rng() % 40));
    refs.push_back("outside " + std::to_string(j));
    auto k = static_cast<std::uint32_t>(refs.size() + rng() % 30);
    rc.citing.push_back(record("C" + std::to_string(j), 2005 + static_cast<int>(rng() % 6), {}, k, refs));
  }
  return rc;
}

TEST(Resolve, WeightInvariantsHoldExactly) {
  using boost::multiprecision::cpp_rational;
  auto rc = random_case(21);
  auto links = resolve_citations(rc.cited, rc.citing);
  std::map<std::string, cpp_rational> per_citing;
  std::set<std::pair<std::string, std::string>> pairs;
  std::map<std::string, std::uint32_t> k_of;
  for (const auto& c : rc.citing) k_of[c.id] = c.ref_count;
  for (const auto& l : links) {
    EXPECT_TRUE(pairs.insert({l.citing_id, l.cited_id}).second);
    EXPECT_EQ(l.weight.denominator, k_of.at(l.citing_id));
    cpp_rational w(1, l.weight.denominator);
    EXPECT_EQ(w * l.weight.denominator, 1);
    EXPECT_GT(l.weight.value(), 0.0);
    EXPECT_LE(l.weight.value(), 1.0);
    per_citing[l.citing_id] += w;
  }
  for (const auto& [id, sum] : per_citing) EXPECT_LE(sum, 1);
}

TEST(Resolve, IndependentOfInputOrder) {
  auto rc = random_case(22);
  auto base = resolve_citations(rc.cited, rc.citing);
  std::mt19937_64 rng(1);
  std::shuffle(rc.cited.begin(), rc.cited.end(), rng);
  std::shuffle(rc.citing.begin(), rc.citing.end(), rng);
  EXPECT_EQ(resolve_citations(rc.cited, rc.citing), base);
}

TEST(ApplyWindow, InclusiveBounds) {
  std::vector<CitationLink> links{{"a", "p", 2007, {2}, false}, {"b", "p", 2008, {2}, false}};
  auto kept = apply_window(links, CitationWindow(2005, 2007));
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0].citing_year, 2007);
}

TEST(ApplyWindow, MatchesDirectFilter) {
  auto rc = random_case(23);
  auto links = resolve_citations(rc.cited, rc.citing);
  std::vector<CitationLink> oracle;
  for (const auto& l : links)
    if (l.citing_year <= 2009) oracle.push_back(l);
  EXPECT_EQ(apply_window(links, CitationWindow(2005, 2009)), oracle);
  EXPECT_LT(oracle.size(), links.size());
}

TEST(LinkDump, Layout) {
  std::ostringstream o;
  write_link_dump(o, {{"c", "p", 2006, {4}, false}});
  EXPECT_EQ(o.str(), "citing_id,cited_id,citing_year,k,weight\nc,p,2006,4,0.25\n");
}

}  // namespace
}  // namespace fraccite
