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

#include "zfo/relation.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_set>
#include <utility>

namespace zfo {

const char* to_string(Precondition p) noexcept {
  switch (p) {
    case Precondition::kNotAnOrder: return "not-an-order";
    case Precondition::kEqualPivots: return "equal-pivots";
    case Precondition::kReversePositive: return "reverse-positive";
    case Precondition::kZeroMembership: return "zero-membership";
    case Precondition::kOutOfRange: return "out-of-range";
  }
  return "unknown";
}

PreconditionViolation::PreconditionViolation(Precondition which, const std::string& detail)
    : Error(std::string("precondition violated (") + to_string(which) + "): " + detail),
      which_(which) {}

ParseError::ParseError(std::size_t row, std::size_t column, const std::string& message)
    : Error(row == 0 ? message
                     : "row " + std::to_string(row) + ", column " + std::to_string(column) +
                           ": " + message),
      row_(row),
      column_(column) {}

Membership Membership::of(double value) {
  if (!valid(value)) {
    throw InvalidRelation("membership value " + std::to_string(value) + " is outside [0,1]");
  }
  return Membership(value == 0.0 ? 0.0 : value);
}

FuzzyRelation::FuzzyRelation(std::vector<std::string> labels, std::vector<double> grid)
    : labels_(std::make_shared<const std::vector<std::string>>(std::move(labels))),
      n_(labels_->size()),
      grid_(std::move(grid)) {
  if (n_ == 0) throw InvalidRelation("carrier must be nonempty");
  std::unordered_set<std::string_view> seen;
  for (const auto& label : *labels_) {
    if (label.empty()) throw InvalidRelation("element labels must be non-empty");
    if (!seen.insert(label).second) throw InvalidRelation("duplicate element label '" + label + "'");
  }
  validate_grid();
}

FuzzyRelation::FuzzyRelation(std::shared_ptr<const std::vector<std::string>> labels,
                             std::vector<double> grid)
    : labels_(std::move(labels)), n_(labels_->size()), grid_(std::move(grid)) {
  validate_grid();
}

void FuzzyRelation::validate_grid() {
  if (grid_.size() != n_ * n_) {
    throw InvalidRelation("grid has " + std::to_string(grid_.size()) + " entries, expected " +
                          std::to_string(n_ * n_));
  }
  for (double& v : grid_) v = Membership::of(v).value();
}

FuzzyRelation FuzzyRelation::identity(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  std::vector<double> grid(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) grid[i * n + i] = 1.0;
  return FuzzyRelation(std::move(labels), std::move(grid));
}

std::vector<std::string> FuzzyRelation::default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("x_" + std::to_string(i));
  return labels;
}

double FuzzyRelation::at(std::size_t row, std::size_t column) const {
  if (row >= n_ || column >= n_) throw std::out_of_range("relation index out of range");
  return (*this)(row, column);
}

std::optional<std::size_t> FuzzyRelation::index_of(std::string_view label) const {
  const auto it = std::find(labels_->begin(), labels_->end(), label);
  if (it == labels_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_->begin());
}

bool FuzzyRelation::same_carrier(const FuzzyRelation& other) const noexcept {
  return labels_ == other.labels_ || *labels_ == *other.labels_;
}

FuzzyRelation FuzzyRelation::with_values(std::vector<double> grid) const {
  return FuzzyRelation(labels_, std::move(grid));
}

bool operator==(const FuzzyRelation& lhs, const FuzzyRelation& rhs) noexcept {
  return lhs.same_carrier(rhs) && lhs.grid_ == rhs.grid_;
}

void require_same_carrier(const FuzzyRelation& lhs, const FuzzyRelation& rhs) {
  if (!lhs.same_carrier(rhs)) throw CarrierMismatch("relations are defined over different carriers");
}

}  // namespace zfo
