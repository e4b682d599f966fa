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

#include "fraccite/synthetic.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fraccite/distributions.hpp"
#include "fraccite/error.hpp"
#include "fraccite/text.hpp"

namespace fraccite {

namespace {

constexpr std::uint32_t kMaxK = 1000000;

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

enum Stream : std::uint64_t { kCitedK = 1, kCounts = 2, kCitingK = 3 };

std::mt19937_64 engine(std::uint64_t seed, Stream stream, std::uint64_t index) {
  return std::mt19937_64(splitmix(splitmix(splitmix(seed) ^ stream) ^ index));
}

std::string padded(const char* prefix, std::size_t n, int width) {
  auto s = std::to_string(n);
  if (static_cast<int>(s.size()) < width) s.insert(0, static_cast<std::size_t>(width) - s.size(), '0');
  return prefix + s;
}

double decay(const FieldProfile& f, int age) {
  if (std::isinf(f.half_life)) return 1.0;
  return std::pow(0.5, static_cast<double>(age) / f.half_life);
}

std::uint32_t parse_u32(std::string_view s, std::string_view whole) {
  std::uint32_t v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw InvalidArgument("bad k distribution '" + std::string(whole) + "'");
  return v;
}

double parse_real(std::string_view s, std::string_view whole) {
  double v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw InvalidArgument("bad k distribution '" + std::string(whole) + "'");
  return v;
}

}  // namespace

KDistribution KDistribution::constant(std::uint32_t k) {
  if (k == 0) throw InvalidArgument("k must be at least 1");
  KDistribution d;
  d.kind_ = Kind::Constant;
  d.lo_ = d.hi_ = k;
  return d;
}

KDistribution KDistribution::uniform(std::uint32_t lo, std::uint32_t hi) {
  if (lo == 0 || lo > hi) throw InvalidArgument("uniform k needs 1 <= lo <= hi");
  KDistribution d;
  d.kind_ = Kind::Uniform;
  d.lo_ = lo;
  d.hi_ = hi;
  return d;
}

KDistribution KDistribution::choice(std::vector<std::uint32_t> values) {
  if (values.empty()) throw InvalidArgument("choice k needs at least one value");
  for (auto v : values)
    if (v == 0) throw InvalidArgument("k must be at least 1");
  KDistribution d;
  d.kind_ = Kind::Choice;
  d.lo_ = *std::min_element(values.begin(), values.end());
  d.hi_ = *std::max_element(values.begin(), values.end());
  d.values_ = std::move(values);
  return d;
}

KDistribution KDistribution::lognormal(double mean, double sigma) {
  if (!(mean >= 1.0) || !(sigma > 0.0) || !std::isfinite(mean) || !std::isfinite(sigma))
    throw InvalidArgument("log-normal k needs mean >= 1 and sigma > 0");
  KDistribution d;
  d.kind_ = Kind::LogNormal;
  d.sigma_ = sigma;
  d.mu_ = std::log(mean) - 0.5 * sigma * sigma;
  return d;
}

KDistribution KDistribution::parse(std::string_view t) {
  auto parts = text::split(text::trim(t), ':');
  auto name = parts.empty() ? std::string() : text::to_lower(parts[0]);
  if ((name == "const" || name == "constant") && parts.size() == 2) return constant(parse_u32(parts[1], t));
  if (name == "uniform" && parts.size() == 3) return uniform(parse_u32(parts[1], t), parse_u32(parts[2], t));
  if (name == "choice" && parts.size() == 2) {
    std::vector<std::uint32_t> v;
    for (const auto& x : text::split(parts[1], ',')) v.push_back(parse_u32(x, t));
    return choice(std::move(v));
  }
  if (name == "lognormal" && parts.size() == 3) return lognormal(parse_real(parts[1], t), parse_real(parts[2], t));
  throw InvalidArgument("bad k distribution '" + std::string(t) +
                        "' (expected const:K, uniform:LO:HI, choice:K1,K2,... or lognormal:MEAN:SIGMA)");
}

std::string KDistribution::to_string() const {
  switch (kind_) {
    case Kind::Constant: return "const:" + std::to_string(lo_);
    case Kind::Uniform: return "uniform:" + std::to_string(lo_) + ":" + std::to_string(hi_);
    case Kind::Choice: {
      std::string s = "choice:";
      for (std::size_t i = 0; i < values_.size(); ++i) s += (i ? "," : "") + std::to_string(values_[i]);
      return s;
    }
    case Kind::LogNormal:
      return "lognormal:" + text::format_double(std::exp(mu_ + 0.5 * sigma_ * sigma_)) + ":" +
             text::format_double(sigma_);
  }
  return "";
}

std::uint32_t KDistribution::sample(std::mt19937_64& rng) const {
  switch (kind_) {
    case Kind::Constant: return lo_;
    case Kind::Uniform: return std::uniform_int_distribution<std::uint32_t>(lo_, hi_)(rng);
    case Kind::Choice: return values_[std::uniform_int_distribution<std::size_t>(0, values_.size() - 1)(rng)];
    case Kind::LogNormal: {
      double x = std::round(std::lognormal_distribution<double>(mu_, sigma_)(rng));
      return static_cast<std::uint32_t>(std::clamp(x, 1.0, static_cast<double>(kMaxK)));
    }
  }
  return lo_;
}

std::uint32_t KDistribution::min_k() const { return kind_ == Kind::LogNormal ? 1 : lo_; }

double KDistribution::mean_reciprocal() const {
  switch (kind_) {
    case Kind::Constant: return 1.0 / lo_;
    case Kind::Uniform: {
      double s = 0.0;
      for (std::uint32_t k = hi_; k >= lo_ && k > 0; --k) s += 1.0 / k;
      return s / static_cast<double>(hi_ - lo_ + 1);
    }
    case Kind::Choice: {
      std::vector<std::uint32_t> v = values_;
      std::sort(v.begin(), v.end(), std::greater<>());
      double s = 0.0;
      for (auto k : v) s += 1.0 / k;
      return s / static_cast<double>(v.size());
    }
    case Kind::LogNormal: {
      auto cdf = [&](double x) { return dist::normal_cdf((std::log(x) - mu_) / sigma_); };
      double s = cdf(1.5);  // k = 1 takes everything that rounds below 1.5
      double prev = cdf(1.5);
      for (std::uint32_t k = 2; k < kMaxK; ++k) {
        double c = cdf(k + 0.5);
        s += (c - prev) / k;
        prev = c;
        if (1.0 - c < 1e-15) break;
      }
      return s;
    }
  }
  return 0.0;
}

void validate(const SyntheticSpec& spec) {
  if (spec.fields.empty()) throw InvalidArgument("synthetic spec has no fields");
  if (spec.papers_per_unit == 0) throw InvalidArgument("papers_per_unit must be at least 1");
  if (spec.refs_per_citing == 0) throw InvalidArgument("refs_per_citing must be at least 1");
  if (spec.citing_years.start_year() < spec.cited_year)
    throw InvalidArgument("citing years start before the cited year");
  std::set<std::string> units;
  for (const auto& f : spec.fields) {
    if (f.unit_names.empty()) throw InvalidArgument("field '" + f.name + "' has no units");
    if (!(f.rate >= 0) || !std::isfinite(f.rate)) throw InvalidArgument("field '" + f.name + "' needs a finite rate >= 0");
    if (!(f.half_life > 0)) throw InvalidArgument("field '" + f.name + "' needs half_life > 0");
    if (spec.refs_per_citing > f.k.min_k())
      throw InvalidArgument("field '" + f.name + "': refs_per_citing = " + std::to_string(spec.refs_per_citing) +
                            " exceeds the smallest k (" + std::to_string(f.k.min_k()) + ") its distribution can draw");
    for (const auto& u : f.unit_names) {
      if (text::trim(u).empty()) throw InvalidArgument("field '" + f.name + "' has an empty unit name");
      if (!units.insert(u).second) throw InvalidArgument("unit '" + u + "' appears twice");
    }
  }
}

SyntheticCorpus generate(const SyntheticSpec& spec) {
  validate(spec);
  SyntheticCorpus out;

  struct Paper {
    std::size_t index;
    std::size_t field;
  };
  std::vector<Paper> papers;
  for (std::size_t f = 0; f < spec.fields.size(); ++f) {
    const auto& field = spec.fields[f];
    for (const auto& unit : field.unit_names) {
      for (std::size_t i = 0; i < spec.papers_per_unit; ++i) {
        auto idx = papers.size();
        auto rng = engine(spec.seed, kCitedK, idx);
        PublicationRecord r;
        r.id = padded("SYN-P", idx + 1, 6);
        r.year = spec.cited_year;
        r.doc_type = DocType::Article;
        r.source = "Synthetic " + field.name + " Journal";
        r.addresses = {"Synthetic Univ, " + unit};
        r.ref_count = field.k.sample(rng);
        out.cited.push_back(std::move(r));
        out.labels.push_back({out.cited.back().id, unit, field.name});
        papers.push_back({idx, f});
      }
    }
  }

  // events[f][y] lists cited paper indices, one entry per citing event.
  const int years = spec.citing_years.years();
  std::vector<std::vector<std::vector<std::size_t>>> events(
      spec.fields.size(), std::vector<std::vector<std::size_t>>(static_cast<std::size_t>(years)));
  for (const auto& p : papers) {
    const auto& field = spec.fields[p.field];
    auto rng = engine(spec.seed, kCounts, p.index);
    for (int y = 0; y < years; ++y) {
      int age = spec.citing_years.start_year() + y - spec.cited_year;
      double mean = field.rate * decay(field, age);
      if (mean <= 0) continue;
      auto n = std::poisson_distribution<std::uint64_t>(mean)(rng);
      for (std::uint64_t e = 0; e < n; ++e) events[p.field][static_cast<std::size_t>(y)].push_back(p.index);
    }
  }

  std::size_t doc_index = 0;
  for (std::size_t f = 0; f < spec.fields.size(); ++f) {
    const auto& field = spec.fields[f];
    for (int y = 0; y < years; ++y) {
      const auto& ev = events[f][static_cast<std::size_t>(y)];
      if (ev.empty()) continue;
      const std::size_t r = spec.refs_per_citing;
      std::size_t docs = (ev.size() + r - 1) / r;
      // Deal events round-robin; a paper that would land twice in the same
      // document moves to an extra document instead.
      std::vector<std::vector<std::size_t>> groups(docs);
      for (std::size_t e = 0; e < ev.size(); ++e) {
        std::size_t g = e % docs;
        while (std::find(groups[g].begin(), groups[g].end(), ev[e]) != groups[g].end() || groups[g].size() >= r) {
          ++g;
          if (g == groups.size()) groups.emplace_back();
        }
        groups[g].push_back(ev[e]);
      }
      for (const auto& grp : groups) {
        auto rng = engine(spec.seed, kCitingK, doc_index);
        PublicationRecord c;
        c.id = padded("SYN-C", ++doc_index, 7);
        c.year = spec.citing_years.start_year() + y;
        c.doc_type = DocType::Article;
        c.source = "Synthetic " + field.name + " Journal";
        c.addresses = {"Synthetic Citing Inst"};
        c.ref_count = field.k.sample(rng);
        for (auto idx : grp) c.cited_refs.push_back(out.cited[idx].id);
        out.citing.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::vector<FieldExpectation> expected_metrics(const SyntheticSpec& spec, const CitationWindow& window) {
  std::vector<FieldExpectation> out;
  for (const auto& f : spec.fields) {
    double sum = 0.0;
    for (int y = window.start_year(); y <= window.end_year(); ++y) {
      if (!spec.citing_years.contains(y)) continue;
      sum += decay(f, y - spec.cited_year);
    }
    double ic = f.rate * sum;
    out.push_back({f.name, ic, ic * f.k.mean_reciprocal()});
  }
  return out;
}

void write_labels(std::ostream& out, const std::vector<SyntheticLabel>& labels) {
  out << "paper_id\tunit\tfield\n";
  for (const auto& l : labels)
    out << text::tsv_field(l.paper_id) << '\t' << text::tsv_field(l.unit) << '\t' << text::tsv_field(l.field) << '\n';
}

std::string unit_definitions_for(const SyntheticSpec& spec) {
  std::ostringstream s;
  s << "min_pubs = 1\n";
  for (const auto& f : spec.fields) {
    for (const auto& u : f.unit_names) {
      std::string phrase;
      for (char c : u) phrase += c == '"' ? ' ' : c;
      s << "\n[" << u << "]\nquery = ad=(synthetic univ same \"" << phrase << "\") and py=" << spec.cited_year << '\n';
    }
  }
  return s.str();
}

SyntheticSpec parse_synthetic_spec(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("synthetic spec is not valid JSON: ") + e.what());
  }
  try {
    SyntheticSpec s;
    s.seed = j.value("seed", std::uint64_t{1});
    s.cited_year = j.value("cited_year", 2005);
    if (j.contains("citing_years")) {
      const auto& cy = j.at("citing_years");
      s.citing_years = CitationWindow(cy.at(0).get<int>(), cy.at(1).get<int>());
    }
    s.papers_per_unit = j.value("papers_per_unit", std::size_t{20});
    s.refs_per_citing = j.value("refs_per_citing", std::size_t{1});
    for (const auto& fj : j.at("fields")) {
      FieldProfile f;
      f.name = fj.at("name").get<std::string>();
      f.k = KDistribution::parse(fj.value("k", std::string("const:10")));
      f.rate = fj.value("rate", 1.0);
      if (fj.contains("half_life") && !fj.at("half_life").is_null()) f.half_life = fj.at("half_life").get<double>();
      f.unit_names = fj.at("units").get<std::vector<std::string>>();
      s.fields.push_back(std::move(f));
    }
    validate(s);
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("synthetic spec: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("synthetic spec: ") + e.what());
  }
}

}  // namespace fraccite
