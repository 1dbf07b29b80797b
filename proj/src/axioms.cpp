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

#include "zfo/axioms.hpp"

#include <algorithm>

#include "zfo/simd/kernels.hpp"

namespace zfo {
namespace {

// composed[z] = max_y min(r(x,y), r(y,z)), i.e. row x of r composed with r.
void compose_row(const FuzzyRelation& r, std::size_t x, std::vector<double>& composed) {
  std::fill(composed.begin(), composed.end(), 0.0);
  for (std::size_t y = 0; y < r.size(); ++y) {
    const double s = r(x, y);
    if (s > 0.0) simd::raise_row(composed, composed, s, r.row(y));
  }
}

}  // namespace

Check<ReflexivityWitness> is_reflexive(const FuzzyRelation& r) {
  Check<ReflexivityWitness> out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r(i, i) != 1.0) out.witnesses.push_back({i, r(i, i)});
  }
  return out;
}

Check<AntisymmetryWitness> is_antisymmetric(const FuzzyRelation& r) {
  Check<AntisymmetryWitness> out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      if (r(i, j) > 0.0 && r(j, i) > 0.0) out.witnesses.push_back({{i, j}, r(i, j), r(j, i)});
    }
  }
  return out;
}

Check<TransitivityWitness> is_transitive(const FuzzyRelation& r) {
  Check<TransitivityWitness> out;
  const std::size_t n = r.size();
  std::vector<double> composed(n);
  for (std::size_t x = 0; x < n; ++x) {
    compose_row(r, x, composed);
    if (simd::row_le(composed, r.row(x))) continue;
    // Slow path only for rows that actually violate.
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const double through = std::min(r(x, y), r(y, z));
        if (r(x, z) < through) out.witnesses.push_back({x, y, z, r(x, z), through});
      }
    }
  }
  return out;
}

AxiomReport check_order(const FuzzyRelation& r) {
  return {is_reflexive(r), is_antisymmetric(r), is_transitive(r)};
}

bool is_zadeh_order(const FuzzyRelation& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (r(i, i) != 1.0) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (r(i, j) > 0.0 && r(j, i) > 0.0) return false;
    }
  }
  std::vector<double> composed(n);
  for (std::size_t x = 0; x < n; ++x) {
    compose_row(r, x, composed);
    if (!simd::row_le(composed, r.row(x))) return false;
  }
  return true;
}

std::vector<Pair> incomparable_pairs(const FuzzyRelation& r) {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      if (r(i, j) == 0.0 && r(j, i) == 0.0) out.push_back({i, j});
    }
  }
  return out;
}

Check<Pair> is_linear(const FuzzyRelation& r) { return {incomparable_pairs(r)}; }

bool extends(const FuzzyRelation& lo, const FuzzyRelation& hi) {
  require_same_carrier(lo, hi);
  return simd::row_le(lo.values(), hi.values());
}

FuzzyRelation pointwise_inf(std::span<const FuzzyRelation> family) {
  if (family.empty()) throw EmptyFamily();
  std::vector<double> acc = family.front().values();
  for (const auto& member : family.subspan(1)) {
    require_same_carrier(family.front(), member);
    simd::min_row(acc, member.values());
  }
  return family.front().with_values(std::move(acc));
}

}  // namespace zfo
