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

// One-step pivot extension and iterative linearization of Zadeh fuzzy
// orders on finite carriers.

#include <cstddef>
#include <vector>

#include "zfo/relation.hpp"

namespace zfo {

struct RaisedEntry {
  Pair at;
  double old_value = 0.0;
  double new_value = 0.0;

  friend bool operator==(const RaisedEntry&, const RaisedEntry&) = default;
};

/// One application of the pivot extension: a is placed below-to-above b,
/// i.e. afterwards r(a,b) = 1 and r(b,a) = 0.
struct PivotStep {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t step_index = 1;  // 1-based
  std::vector<RaisedEntry> entries_raised;

  friend bool operator==(const PivotStep&, const PivotStep&) = default;
};

struct LinearizationResult {
  FuzzyRelation relation;
  std::vector<PivotStep> trace;
  std::size_t k = 0;  // pivots applied
  std::size_t m = 0;  // ordered incomparable entries of the input
};

/// Orientation imposed on an incomparable pair {x_i, x_j}, i < j.
enum class PivotOrientation {
  kLowFirst,   // pivot (x_i, x_j): r'(x_i, x_j) = 1
  kHighFirst,  // pivot (x_j, x_i)
};

struct PivotPolicy {
  PivotOrientation orientation = PivotOrientation::kLowFirst;
  // Ordered pairs (a,b) tried before the scan. A pair is applied only if
  // a and b are still incomparable when its turn comes; otherwise skipped.
  std::vector<Pair> explicit_pairs;
};

/// r'(x,y) = max(r(x,y), min(r(x,a), r(b,y))).
///
/// Requires r to be a Zadeh order, a != b and r(b,a) = 0; throws
/// PreconditionViolation naming the failed condition otherwise.
FuzzyRelation pivot_extend(const FuzzyRelation& r, std::size_t a, std::size_t b);

/// Same as pivot_extend, additionally recording which entries rose.
/// step_index of the returned step is 1.
std::pair<FuzzyRelation, PivotStep> pivot_extend_traced(const FuzzyRelation& r, std::size_t a,
                                                        std::size_t b);

/// Repeatedly pivots on the first incomparable pair in row-major order,
/// rescanning from the start after each pivot, until r is linear.
/// Throws PreconditionViolation(kNotAnOrder) if r is not a Zadeh order.
LinearizationResult linearize(const FuzzyRelation& r, const PivotPolicy& policy = {});

/// Number of ordered pairs (x,y), x != y, with r(x,y) = r(y,x) = 0.
std::size_t count_incomparable_entries(const FuzzyRelation& r);

/// Re-applies a trace to its input relation (no precondition checks).
FuzzyRelation replay(const FuzzyRelation& r, const std::vector<PivotStep>& trace);

}  // namespace zfo
