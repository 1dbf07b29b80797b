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

// Definitional predicates on fuzzy relations: the three Zadeh order axioms,
// linearity, incomparability, the extension ordering and fuzzy
// intersection. Witness lists are complete and ordered row-major.

#include <cstddef>
#include <span>
#include <vector>

#include "zfo/relation.hpp"

namespace zfo {

/// r(x,x) != 1.
struct ReflexivityWitness {
  std::size_t element = 0;
  double value = 0.0;

  friend bool operator==(const ReflexivityWitness&, const ReflexivityWitness&) = default;
};

/// x < y with r(x,y) > 0 and r(y,x) > 0.
struct AntisymmetryWitness {
  Pair pair;
  double forward = 0.0;   // r(x,y)
  double backward = 0.0;  // r(y,x)

  friend bool operator==(const AntisymmetryWitness&, const AntisymmetryWitness&) = default;
};

/// r(x,z) < min(r(x,y), r(y,z)).
struct TransitivityWitness {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;
  double direct = 0.0;   // r(x,z)
  double through = 0.0;  // min(r(x,y), r(y,z))

  friend bool operator==(const TransitivityWitness&, const TransitivityWitness&) = default;
};

/// Verdict plus the violations that refute it; passes iff there are none.
template <class Witness>
struct Check {
  std::vector<Witness> witnesses;

  bool passed() const noexcept { return witnesses.empty(); }
  explicit operator bool() const noexcept { return passed(); }
};

struct AxiomReport {
  Check<ReflexivityWitness> reflexive;
  Check<AntisymmetryWitness> antisymmetric;
  Check<TransitivityWitness> transitive;

  bool is_order() const noexcept {
    return reflexive.passed() && antisymmetric.passed() && transitive.passed();
  }
};

Check<ReflexivityWitness> is_reflexive(const FuzzyRelation& r);
Check<AntisymmetryWitness> is_antisymmetric(const FuzzyRelation& r);

/// Max-min transitivity; the supremum over y is a maximum on a finite carrier.
Check<TransitivityWitness> is_transitive(const FuzzyRelation& r);

AxiomReport check_order(const FuzzyRelation& r);

/// Cheaper than check_order(r).is_order(): stops at the first violation.
bool is_zadeh_order(const FuzzyRelation& r);

/// Distinct x,y with r(x,y) = r(y,x) = 0, as (i,j) with i < j, row-major.
std::vector<Pair> incomparable_pairs(const FuzzyRelation& r);

/// Every pair of distinct elements is comparable. Witnesses are the
/// incomparable pairs. Does not check the order axioms.
Check<Pair> is_linear(const FuzzyRelation& r);

/// hi extends lo: lo(x,y) <= hi(x,y) everywhere. Throws CarrierMismatch.
bool extends(const FuzzyRelation& lo, const FuzzyRelation& hi);

/// Entrywise minimum of the family. Throws EmptyFamily or CarrierMismatch.
FuzzyRelation pointwise_inf(std::span<const FuzzyRelation> family);

}  // namespace zfo
