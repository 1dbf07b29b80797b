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

#include "zfo/extension.hpp"

#include <string>

#include "zfo/axioms.hpp"
#include "zfo/simd/kernels.hpp"

namespace zfo {
namespace {

void check_index(const FuzzyRelation& r, std::size_t i) {
  if (i >= r.size()) {
    throw PreconditionViolation(Precondition::kOutOfRange,
                                "element index " + std::to_string(i) + " not in carrier of size " +
                                    std::to_string(r.size()));
  }
}

void check_pivot(const FuzzyRelation& r, std::size_t a, std::size_t b) {
  check_index(r, a);
  check_index(r, b);
  if (a == b) {
    throw PreconditionViolation(Precondition::kEqualPivots,
                                "pivot elements must differ (both are '" + r.label(a) + "')");
  }
  if (r(b, a) > 0.0) {
    throw PreconditionViolation(Precondition::kReversePositive,
                                "r(" + r.label(b) + "," + r.label(a) + ") must be 0");
  }
}

// Assumes r is an order and r(b,a) == 0.
std::vector<double> apply_pivot(const FuzzyRelation& r, std::size_t a, std::size_t b) {
  const std::size_t n = r.size();
  std::vector<double> out(r.values());
  const auto row_b = r.row(b);
  for (std::size_t x = 0; x < n; ++x) {
    const double s = r(x, a);
    if (s == 0.0) continue;
    simd::raise_row(std::span<double>(out.data() + x * n, n), r.row(x), s, row_b);
  }
  return out;
}

std::vector<RaisedEntry> diff(const FuzzyRelation& before, const std::vector<double>& after) {
  std::vector<RaisedEntry> raised;
  const std::size_t n = before.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const double v = after[x * n + y];
      if (v != before(x, y)) raised.push_back({{x, y}, before(x, y), v});
    }
  }
  return raised;
}

void require_order(const FuzzyRelation& r) {
  if (!is_zadeh_order(r)) {
    throw PreconditionViolation(Precondition::kNotAnOrder, "relation is not a Zadeh fuzzy order");
  }
}

bool incomparable(const FuzzyRelation& r, std::size_t i, std::size_t j) {
  return r(i, j) == 0.0 && r(j, i) == 0.0;
}

}  // namespace

FuzzyRelation pivot_extend(const FuzzyRelation& r, std::size_t a, std::size_t b) {
  check_pivot(r, a, b);
  require_order(r);
  return r.with_values(apply_pivot(r, a, b));
}

std::pair<FuzzyRelation, PivotStep> pivot_extend_traced(const FuzzyRelation& r, std::size_t a,
                                                        std::size_t b) {
  check_pivot(r, a, b);
  require_order(r);
  auto values = apply_pivot(r, a, b);
  PivotStep step{a, b, 1, diff(r, values)};
  return {r.with_values(std::move(values)), std::move(step)};
}

LinearizationResult linearize(const FuzzyRelation& r, const PivotPolicy& policy) {
  require_order(r);
  for (const Pair& p : policy.explicit_pairs) {
    check_index(r, p.first);
    check_index(r, p.second);
    if (p.first == p.second) {
      throw PreconditionViolation(Precondition::kEqualPivots, "explicit pivot pair repeats an element");
    }
  }

  LinearizationResult result{r, {}, 0, count_incomparable_entries(r)};
  FuzzyRelation current = r;

  auto pivot = [&](std::size_t a, std::size_t b) {
    auto values = apply_pivot(current, a, b);
    result.trace.push_back({a, b, result.trace.size() + 1, diff(current, values)});
    current = current.with_values(std::move(values));
  };

  for (const Pair& p : policy.explicit_pairs) {
    if (incomparable(current, p.first, p.second)) pivot(p.first, p.second);
  }

  const std::size_t n = current.size();
  // Pairs before the last pivot position can only have become comparable,
  // so restarting the scan there is equivalent to restarting at (0,1).
  std::size_t start_i = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = start_i; i < n && !changed; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!incomparable(current, i, j)) continue;
        if (policy.orientation == PivotOrientation::kLowFirst) {
          pivot(i, j);
        } else {
          pivot(j, i);
        }
        start_i = i;
        changed = true;
        break;
      }
    }
  }

  result.k = result.trace.size();
  result.relation = std::move(current);
  return result;
}

std::size_t count_incomparable_entries(const FuzzyRelation& r) {
  return 2 * incomparable_pairs(r).size();
}

FuzzyRelation replay(const FuzzyRelation& r, const std::vector<PivotStep>& trace) {
  FuzzyRelation current = r;
  for (const auto& step : trace) current = current.with_values(apply_pivot(current, step.a, step.b));
  return current;
}

}  // namespace zfo
