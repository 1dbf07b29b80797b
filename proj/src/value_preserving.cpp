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

#include "zfo/value_preserving.hpp"

#include <algorithm>
#include <string>

#include "zfo/axioms.hpp"
#include "zfo/simd/kernels.hpp"

namespace zfo {

ClampResult clamp_extend(const FuzzyRelation& r, std::size_t a, std::size_t b) {
  if (a >= r.size() || b >= r.size()) {
    throw PreconditionViolation(Precondition::kOutOfRange, "element index not in carrier");
  }
  if (a == b) {
    throw PreconditionViolation(Precondition::kEqualPivots, "clamp pair must be off-diagonal");
  }
  if (r(a, b) == 0.0) {
    throw PreconditionViolation(Precondition::kZeroMembership,
                                "r(" + r.label(a) + "," + r.label(b) + ") must be positive");
  }
  if (!is_zadeh_order(r)) {
    throw PreconditionViolation(Precondition::kNotAnOrder, "relation is not a Zadeh fuzzy order");
  }

  const Membership beta = Membership::of(r(a, b));
  if (is_linear(r).passed()) return {r, beta, r, {a, b}};

  FuzzyRelation base = linearize(r).relation;
  if (base(a, b) == beta.value()) return {base, beta, base, {a, b}};

  std::vector<double> clamped(r.values().size());
  simd::clamp_row(clamped, r.values(), base.values(), beta.value());
  return {r.with_values(std::move(clamped)), beta, std::move(base), {a, b}};
}

std::size_t ExtensionFamily::certificate_count() const noexcept {
  std::size_t total = 0;
  for (const auto& m : members) total += m.certifies.size();
  return total;
}

std::vector<FuzzyRelation> ExtensionFamily::relations() const {
  std::vector<FuzzyRelation> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.relation);
  return out;
}

void ExtensionFamily::add(FuzzyRelation relation, Certificate certificate) {
  for (auto& m : members) {
    if (m.relation == relation) {
      m.certifies.push_back(certificate);
      return;
    }
  }
  members.push_back({std::move(relation), {certificate}});
}

ExtensionFamily ExtensionFamily::without(const Certificate& certificate) const {
  ExtensionFamily out;
  for (const auto& m : members) {
    FamilyMember copy = m;
    if (std::erase(copy.certifies, certificate) > 0 && copy.certifies.empty()) continue;
    out.members.push_back(std::move(copy));
  }
  return out;
}

ExtensionFamily certifying_family(const FuzzyRelation& r) {
  if (!is_zadeh_order(r)) {
    throw PreconditionViolation(Precondition::kNotAnOrder, "relation is not a Zadeh fuzzy order");
  }
  ExtensionFamily family;
  const auto incomparable = incomparable_pairs(r);
  if (incomparable.empty()) {
    // A linear order certifies itself; tag it with every positive entry.
    family.members.push_back({r, {}});
    for (std::size_t a = 0; a < r.size(); ++a) {
      for (std::size_t b = 0; b < r.size(); ++b) {
        if (a != b && r(a, b) > 0.0) {
          family.members.front().certifies.push_back({CertificateKind::kPreserves, {a, b}});
        }
      }
    }
    return family;
  }

  for (const Pair& p : incomparable) {
    family.add(linearize(pivot_extend(r, p.first, p.second)).relation,
               {CertificateKind::kOrients, {p.first, p.second}});
    family.add(linearize(pivot_extend(r, p.second, p.first)).relation,
               {CertificateKind::kOrients, {p.second, p.first}});
  }
  for (std::size_t a = 0; a < r.size(); ++a) {
    for (std::size_t b = 0; b < r.size(); ++b) {
      if (a != b && r(a, b) > 0.0) {
        family.add(clamp_extend(r, a, b).relation, {CertificateKind::kPreserves, {a, b}});
      }
    }
  }
  return family;
}

IntersectionCheck verify_intersection(const FuzzyRelation& r,
                                      std::span<const FuzzyRelation> family) {
  if (family.empty()) throw EmptyFamily();
  for (const auto& m : family) require_same_carrier(r, m);
  IntersectionCheck out{pointwise_inf(family), {}};
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t y = 0; y < r.size(); ++y) {
      if (out.infimum(x, y) != r(x, y)) out.mismatches.push_back({{x, y}, out.infimum(x, y), r(x, y)});
    }
  }
  return out;
}

IntersectionCheck verify_intersection(const FuzzyRelation& r, const ExtensionFamily& family) {
  const auto relations = family.relations();
  return verify_intersection(r, std::span<const FuzzyRelation>(relations));
}

}  // namespace zfo
