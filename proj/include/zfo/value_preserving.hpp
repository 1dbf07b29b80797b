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

// Linear extensions that keep a prescribed membership value, and the
// finite family of linear extensions whose fuzzy intersection gives back
// the original order.

#include <cstddef>
#include <vector>

#include "zfo/extension.hpp"
#include "zfo/relation.hpp"

namespace zfo {

struct ClampResult {
  FuzzyRelation relation;  // linear, extends r, relation(a,b) == r(a,b)
  Membership beta;         // r(a,b)
  FuzzyRelation base;      // linear extension the clamp was applied to
  Pair preserved_pair;
};

/// Linear Zadeh order s extending r with s(a,b) = r(a,b).
///
/// If r is linear, s = r. Otherwise base = linearize(r); if base already
/// keeps the value it is returned, else every entry whose original value is
/// at most beta = r(a,b) is capped at beta.
///
/// Throws PreconditionViolation if r is not an order, a == b, or r(a,b) == 0.
ClampResult clamp_extend(const FuzzyRelation& r, std::size_t a, std::size_t b);

enum class CertificateKind {
  kOrients,   // member has (a,b) = 1 and (b,a) = 0 for an incomparable pair
  kPreserves  // member has (a,b) = r(a,b) for a positive off-diagonal entry
};

struct Certificate {
  CertificateKind kind = CertificateKind::kOrients;
  Pair pair;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct FamilyMember {
  FuzzyRelation relation;
  std::vector<Certificate> certifies;  // empty only for a one-element carrier
};

/// Distinct linear extensions of a base order. Bit-identical members are
/// stored once with their certificates merged.
struct ExtensionFamily {
  std::vector<FamilyMember> members;

  std::size_t size() const noexcept { return members.size(); }
  /// Total number of certificates, i.e. the member count before merging.
  std::size_t certificate_count() const noexcept;
  std::vector<FuzzyRelation> relations() const;

  /// Appends, merging with an existing bit-identical member if present.
  void add(FuzzyRelation relation, Certificate certificate);

  /// Copy without the given certificate. Members whose only certificates
  /// were removed are dropped.
  ExtensionFamily without(const Certificate& certificate) const;
};

/// For every incomparable pair {a,b}: linearize(pivot_extend(r,a,b)) and
/// linearize(pivot_extend(r,b,a)); for every ordered (a,b), a != b, with
/// r(a,b) > 0: clamp_extend(r,a,b). A linear r yields the family {r}.
/// Throws PreconditionViolation(kNotAnOrder).
ExtensionFamily certifying_family(const FuzzyRelation& r);

struct EntryMismatch {
  Pair at;
  double infimum = 0.0;
  double expected = 0.0;

  friend bool operator==(const EntryMismatch&, const EntryMismatch&) = default;
};

struct IntersectionCheck {
  FuzzyRelation infimum;
  std::vector<EntryMismatch> mismatches;  // row-major

  bool passed() const noexcept { return mismatches.empty(); }
};

/// Compares the pointwise infimum of the family with r, bit-exactly.
/// Throws EmptyFamily or CarrierMismatch.
IntersectionCheck verify_intersection(const FuzzyRelation& r, const ExtensionFamily& family);
IntersectionCheck verify_intersection(const FuzzyRelation& r,
                                      std::span<const FuzzyRelation> family);

}  // namespace zfo
