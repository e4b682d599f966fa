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
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fraccite/citation.hpp"
#include "fraccite/record.hpp"

namespace fraccite {

/// Distribution of reference-list lengths k.
class KDistribution {
 public:
  enum class Kind { Constant, Uniform, Choice, LogNormal };

  static KDistribution constant(std::uint32_t k);
  /// Uniform on the integers {lo, ..., hi}.
  static KDistribution uniform(std::uint32_t lo, std::uint32_t hi);
  /// Equally likely values; duplicates weigh double.
  static KDistribution choice(std::vector<std::uint32_t> values);
  /// round(X) with X log-normal of the given mean and log-scale sigma,
  /// clamped below at 1.
  static KDistribution lognormal(double mean, double sigma);

  /// "const:10", "uniform:5:10", "choice:5,10", "lognormal:30:0.5".
  /// Throws InvalidArgument.
  static KDistribution parse(std::string_view text);
  std::string to_string() const;

  Kind kind() const { return kind_; }
  std::uint32_t sample(std::mt19937_64& rng) const;
  std::uint32_t min_k() const;
  /// E[1/k]; exact for constant, uniform and choice, summed over the rounded pmf
  /// for log-normal.
  double mean_reciprocal() const;

 private:
  Kind kind_ = Kind::Constant;
  std::uint32_t lo_ = 1, hi_ = 1;
  double mu_ = 0.0, sigma_ = 0.0;
  std::vector<std::uint32_t> values_;
};

struct FieldProfile {
  std::string name;
  KDistribution k = KDistribution::constant(10);
  /// Expected citing documents per cited paper per year at age 0.
  double rate = 1.0;
  /// Citation half-life in years; infinity disables decay.
  double half_life = std::numeric_limits<double>::infinity();
  std::vector<std::string> unit_names;
};

struct SyntheticSpec {
  std::vector<FieldProfile> fields;
  std::size_t papers_per_unit = 20;
  int cited_year = 2005;
  CitationWindow citing_years{2005, 2009};
  std::uint64_t seed = 1;
  /// Cited papers named by one citing document (each citing document draws
  /// one k, so a value above 1 correlates the weights of co-cited papers).
  std::size_t refs_per_citing = 1;
};

/// Throws InvalidArgument when the spec cannot be generated: no fields, a
/// field without units, negative rates, non-positive half-life, citing
/// years before the cited year, duplicate unit names, or refs_per_citing
/// larger than the smallest k a field can draw.
void validate(const SyntheticSpec& spec);

struct SyntheticLabel {
  std::string paper_id;
  std::string unit;
  std::string field;
};

struct SyntheticCorpus {
  Corpus cited;
  Corpus citing;
  std::vector<SyntheticLabel> labels;
};

/// Cited papers get the address "Synthetic Univ, <unit>". Every (paper,
/// citing year) pair draws a Poisson count with mean
/// rate * 0.5^((year - cited_year) / half_life); each count is a citing
/// document (or a share of one, with refs_per_citing > 1) whose k comes
/// from the field's distribution. Random streams are keyed by
/// (seed, record index), so output is a pure function of the spec.
SyntheticCorpus generate(const SyntheticSpec& spec);

struct FieldExpectation {
  std::string field;
  double ic_per_p = 0.0;
  double fc_per_p = 0.0;
};

/// Closed-form E[IC/P] = rate * sum of yearly decay factors over the part
/// of `window` that the spec generates, and E[FC/P] = E[IC/P] * E[1/k].
std::vector<FieldExpectation> expected_metrics(const SyntheticSpec& spec, const CitationWindow& window);

/// `paper_id<TAB>unit<TAB>field` with a header.
void write_labels(std::ostream& out, const std::vector<SyntheticLabel>& labels);

/// Unit-definition text that selects each synthetic unit.
std::string unit_definitions_for(const SyntheticSpec& spec);

/// JSON spec file:
///   {"seed": 7, "cited_year": 2005, "citing_years": [2005, 2009],
///    "papers_per_unit": 50, "refs_per_citing": 1,
///    "fields": [{"name": "math", "k": "const:10", "rate": 0.6,
///                "half_life": 4, "units": ["Dep Math"]}]}
/// "half_life" may be omitted or null for no decay. Throws ConfigError.
SyntheticSpec parse_synthetic_spec(std::istream& in);

}  // namespace fraccite
