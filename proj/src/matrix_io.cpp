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

#include "zfo/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace zfo::io {
namespace {

struct Cell {
  std::string text;
  bool quoted = false;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  return lines;
}

std::vector<Cell> split_cells(std::string_view line, std::size_t row) {
  std::vector<Cell> cells;
  std::size_t i = 0;
  while (true) {
    Cell cell;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i < line.size() && line[i] == '"') {
      cell.quoted = true;
      ++i;
      bool closed = false;
      while (i < line.size()) {
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            cell.text.push_back('"');
            i += 2;
            continue;
          }
          ++i;
          closed = true;
          break;
        }
        cell.text.push_back(line[i++]);
      }
      if (!closed) throw ParseError(row, cells.size() + 1, "unterminated quoted cell");
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i < line.size() && line[i] != ',') {
        throw ParseError(row, cells.size() + 1, "unexpected text after quoted cell");
      }
    } else {
      const auto end = std::min(line.find(',', i), line.size());
      cell.text = std::string(trim(line.substr(i, end - i)));
      i = end;
    }
    cells.push_back(std::move(cell));
    if (i >= line.size()) break;
    ++i;  // skip ','
  }
  return cells;
}

double parse_value(std::string_view text, std::size_t row, std::size_t column) {
  if (text.empty()) throw ParseError(row, column, "empty value");
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ParseError(row, column, "malformed number '" + std::string(text) + "'");
  }
  if (!Membership::valid(value)) {
    throw ParseError(row, column, "value " + std::string(text) + " is outside [0,1]");
  }
  return value;
}

void check_labels(const std::vector<std::string>& labels, std::size_t row, std::size_t first_column) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw ParseError(row, first_column + i, "empty element label");
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[j] == labels[i]) {
        throw ParseError(row, first_column + i, "duplicate element label '" + labels[i] + "'");
      }
    }
  }
}

bool needs_quotes(const std::string& label) {
  return label.find_first_of(",\"\r\n") != std::string::npos || label.front() == ' ' ||
         label.front() == '\t' || label.back() == ' ' || label.back() == '\t';
}

std::string csv_label(const std::string& label) {
  if (!needs_quotes(label)) return label;
  std::string out = "\"";
  for (char c : label) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string_view to_string(Format f) noexcept { return f == Format::kJson ? "json" : "csv"; }

std::optional<Format> parse_format(std::string_view name) noexcept {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  return std::nullopt;
}

Format format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".json" ? Format::kJson : Format::kCsv;
}

std::string format_value(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

FuzzyRelation parse_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(0, 0, "empty matrix document");

  const auto header = split_cells(lines[0], 1);
  if (!header[0].text.empty()) throw ParseError(1, 1, "header row must start with an empty cell");
  if (header.size() < 2) throw ParseError(1, 0, "empty matrix: header has no element labels");
  std::vector<std::string> labels;
  for (std::size_t c = 1; c < header.size(); ++c) labels.push_back(header[c].text);
  check_labels(labels, 1, 2);

  const std::size_t n = labels.size();
  if (lines.size() - 1 != n) {
    throw ParseError(lines.size() < n + 1 ? lines.size() + 1 : n + 2, 0,
                     "non-square matrix: " + std::to_string(n) + " columns but " +
                         std::to_string(lines.size() - 1) + " rows");
  }

  std::vector<double> grid;
  grid.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t row = i + 2;
    const auto cells = split_cells(lines[i + 1], row);
    if (cells.size() != n + 1) {
      throw ParseError(row, std::min(cells.size(), n + 1) + 1,
                       "non-square matrix: expected " + std::to_string(n) + " values, got " +
                           std::to_string(cells.size() - 1));
    }
    if (cells[0].text != labels[i]) {
      throw ParseError(row, 1, "row label '" + cells[0].text + "' does not match column label '" +
                                   labels[i] + "'");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (cells[j + 1].quoted) throw ParseError(row, j + 2, "quoted value");
      grid.push_back(parse_value(cells[j + 1].text, row, j + 2));
    }
  }
  return FuzzyRelation(std::move(labels), std::move(grid));
}

FuzzyRelation parse_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, 0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(0, 0, "JSON document must be an object");
  if (!doc.contains("elements") || !doc["elements"].is_array()) {
    throw ParseError(0, 0, "JSON document needs an \"elements\" array");
  }
  if (!doc.contains("matrix") || !doc["matrix"].is_array()) {
    throw ParseError(0, 0, "JSON document needs a \"matrix\" array");
  }

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < doc["elements"].size(); ++i) {
    const auto& e = doc["elements"][i];
    if (!e.is_string()) throw ParseError(0, i + 1, "element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  if (labels.empty()) throw ParseError(0, 0, "empty matrix: no elements");
  check_labels(labels, 0, 1);

  const auto& matrix = doc["matrix"];
  const std::size_t n = labels.size();
  if (matrix.size() != n) {
    throw ParseError(std::min(matrix.size(), n) + 1, 0,
                     "non-square matrix: " + std::to_string(n) + " elements but " +
                         std::to_string(matrix.size()) + " rows");
  }
  std::vector<double> grid;
  grid.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = matrix[i];
    if (!row.is_array() || row.size() != n) {
      throw ParseError(i + 1, 0, "non-square matrix: row " + std::to_string(i + 1) + " must hold " +
                                     std::to_string(n) + " numbers");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!row[j].is_number()) throw ParseError(i + 1, j + 1, "malformed number");
      const double v = row[j].get<double>();
      if (!Membership::valid(v)) throw ParseError(i + 1, j + 1, "value is outside [0,1]");
      grid.push_back(v);
    }
  }
  return FuzzyRelation(std::move(labels), std::move(grid));
}

FuzzyRelation parse_matrix(std::string_view text, Format format) {
  return format == Format::kJson ? parse_json(text) : parse_csv(text);
}

std::string emit_csv(const FuzzyRelation& r) {
  std::string out;
  for (const auto& label : r.labels()) out += "," + csv_label(label);
  out += '\n';
  for (std::size_t i = 0; i < r.size(); ++i) {
    out += csv_label(r.label(i));
    for (double v : r.row(i)) out += "," + format_value(v);
    out += '\n';
  }
  return out;
}

std::string emit_json(const FuzzyRelation& r) {
  std::string out = "{\n  \"elements\": [";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ", ";
    out += nlohmann::json(r.label(i)).dump();
  }
  out += "],\n  \"matrix\": [\n";
  for (std::size_t i = 0; i < r.size(); ++i) {
    out += "    [";
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) out += ", ";
      out += format_value(r(i, j));
    }
    out += i + 1 < r.size() ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

std::string emit_matrix(const FuzzyRelation& r, Format format) {
  return format == Format::kJson ? emit_json(r) : emit_csv(r);
}

FuzzyRelation read_matrix_file(const std::filesystem::path& path, std::optional<Format> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str(), format.value_or(format_for_path(path)));
}

void write_matrix_file(const std::filesystem::path& path, const FuzzyRelation& r, Format format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << emit_matrix(r, format);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace zfo::io
