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

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zfo/error.hpp"

namespace zfo {

/// A membership grade in the closed interval [0, 1].
///
/// Construction rejects NaN, infinities and out-of-range values. Negative
/// zero is normalized to +0.0 so that every comparison, min and max yields
/// the same bit pattern no matter which kernel computed it.
class Membership {
 public:
  constexpr Membership() = default;

  /// Throws InvalidRelation when `value` is not in [0, 1].
  static Membership of(double value);

  /// True for values acceptable as memberships.
  static constexpr bool valid(double value) noexcept { return value >= 0.0 && value <= 1.0; }

  constexpr double value() const noexcept { return value_; }

  friend constexpr bool operator==(Membership, Membership) = default;
  friend constexpr auto operator<=>(Membership, Membership) = default;

 private:
  constexpr explicit Membership(double v) : value_(v) {}
  double value_ = 0.0;
};

struct Element {
  std::string label;
  std::size_t index = 0;

  friend bool operator==(const Element&, const Element&) = default;
};

/// Ordered pair of element indices. Unordered pairs are stored with
/// first < second.
struct Pair {
  std::size_t first = 0;
  std::size_t second = 0;

  friend constexpr bool operator==(Pair, Pair) = default;
  friend constexpr auto operator<=>(Pair, Pair) = default;
};

/// A fuzzy relation r : X x X -> [0,1] over a finite, labeled, nonempty
/// carrier X. Entry (i, j) holds r(x_i, x_j); storage is row-major.
///
/// Values are immutable once constructed. Copies share the label list.
class FuzzyRelation {
 public:
  /// Throws InvalidRelation for an empty carrier, empty or duplicate labels,
  /// a grid that is not labels.size() squared, or an invalid membership.
  FuzzyRelation(std::vector<std::string> labels, std::vector<double> grid);

  /// Identity relation: 1 on the diagonal, 0 elsewhere.
  static FuzzyRelation identity(std::vector<std::string> labels);

  /// Labels x_1 .. x_n.
  static std::vector<std::string> default_labels(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  double operator()(std::size_t row, std::size_t column) const noexcept {
    return grid_[row * n_ + column];
  }
  /// Bounds-checked access.
  double at(std::size_t row, std::size_t column) const;

  std::span<const double> row(std::size_t i) const noexcept {
    return {grid_.data() + i * n_, n_};
  }
  const std::vector<double>& values() const noexcept { return grid_; }

  const std::vector<std::string>& labels() const noexcept { return *labels_; }
  const std::string& label(std::size_t i) const { return labels_->at(i); }
  Element element(std::size_t i) const { return {label(i), i}; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Same labels in the same order.
  bool same_carrier(const FuzzyRelation& other) const noexcept;

  /// New relation over this carrier with the given row-major grid. Values
  /// are validated like the main constructor.
  FuzzyRelation with_values(std::vector<double> grid) const;

  /// Bit-exact equality of carrier and every entry.
  friend bool operator==(const FuzzyRelation& lhs, const FuzzyRelation& rhs) noexcept;

 private:
  FuzzyRelation(std::shared_ptr<const std::vector<std::string>> labels, std::vector<double> grid);
  void validate_grid();

  std::shared_ptr<const std::vector<std::string>> labels_;
  std::size_t n_ = 0;
  std::vector<double> grid_;
};

/// Throws CarrierMismatch unless both relations share their carrier.
void require_same_carrier(const FuzzyRelation& lhs, const FuzzyRelation& rhs);

}  // namespace zfo
