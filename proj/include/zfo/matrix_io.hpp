// Copyright 2026 The zfo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// CSV and JSON matrix documents.
//
// CSV: the first row is an empty cell followed by the element labels; every
// following row is a label and n decimal values. Row labels must repeat the
// column labels in the same order.
//
//   ,a,b
//   a,1,0.4
//   b,0,1
//
// JSON: {"elements": ["a","b"], "matrix": [[1,0.4],[0,1]]}
//
// Values are emitted in the shortest decimal form that parses back to the
// identical double.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "zfo/relation.hpp"

namespace zfo::io {

enum class Format { kCsv, kJson };

std::string_view to_string(Format f) noexcept;
/// "csv" or "json"; nullopt otherwise.
std::optional<Format> parse_format(std::string_view name) noexcept;
/// .json means JSON; anything else is CSV.
Format format_for_path(const std::filesystem::path& path);

/// Shortest round-trip decimal text for a membership value.
std::string format_value(double value);

/// Throw ParseError (with row/column where applicable) or InvalidRelation.
FuzzyRelation parse_csv(std::string_view text);
FuzzyRelation parse_json(std::string_view text);
FuzzyRelation parse_matrix(std::string_view text, Format format);

std::string emit_csv(const FuzzyRelation& r);
std::string emit_json(const FuzzyRelation& r);
std::string emit_matrix(const FuzzyRelation& r, Format format);

/// Throws Error if the file cannot be read. Format defaults to the extension.
FuzzyRelation read_matrix_file(const std::filesystem::path& path,
                               std::optional<Format> format = std::nullopt);
void write_matrix_file(const std::filesystem::path& path, const FuzzyRelation& r, Format format);

}  // namespace zfo::io
