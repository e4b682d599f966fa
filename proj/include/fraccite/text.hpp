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

#include <string>
#include <string_view>
#include <vector>

namespace fraccite::text {

std::string_view trim(std::string_view s);
std::string to_lower(std::string_view s);
bool iequals(std::string_view a, std::string_view b);

std::vector<std::string> split(std::string_view s, char sep);

/// Lower-cases, replaces every non-alphanumeric byte with a space and
/// collapses whitespace. Bytes >= 0x80 are kept so UTF-8 words survive.
std::string normalize_phrase(std::string_view s);

/// normalize_phrase() split into its words.
std::vector<std::string> phrase_tokens(std::string_view s);

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double v);

/// Fixed-point rendering with `decimals` digits ("%.*f").
std::string format_fixed(double v, int decimals);

/// Escapes a field for tab-delimited output (tabs/newlines become spaces).
std::string tsv_field(std::string_view s);

}  // namespace fraccite::text
