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

#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>

#include "fraccite/record.hpp"

namespace fraccite {

enum class CorpusFormat { Wos, Canonical };

/// Reads a Web of Science export. Both the field-tagged plain-text layout
/// (two-letter tags, indented continuation lines, ER terminators) and the
/// tab-delimited layout (header row of tags) are accepted; the layout is
/// detected from the first non-empty line.
///
/// Records without UT, or with an unusable PY/NR, are skipped and reported.
/// A missing NR falls back to the number of CR entries. Throws IoError when
/// the stream is unreadable.
ParsedCorpus parse_wos_export(std::istream& in);

/// Reads the canonical corpus format: one JSON object per line with the
/// PublicationRecord field names. Blank lines are skipped, unknown keys are
/// ignored, undecodable lines are reported with their line number.
ParsedCorpus parse_canonical(std::istream& in);

/// Writes records in the canonical format; `parse_canonical` of the output
/// reproduces `records` exactly.
void write_canonical(std::ostream& out, const Corpus& records);
std::string write_canonical(const Corpus& records);

/// Opens and parses `path`. Throws IoError naming the path when it cannot
/// be opened.
ParsedCorpus read_corpus_file(const std::filesystem::path& path, CorpusFormat format);

/// Keeps records whose type is in `doc_types` and whose year equals `year`.
/// Stable; never touches record fields.
Corpus filter_corpus(const Corpus& corpus, const std::set<DocType>& doc_types, int year);

}  // namespace fraccite
