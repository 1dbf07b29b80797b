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

#include <gtest/gtest.h>

#include "golden.hpp"
#include "zfo/axioms.hpp"
#include "zfo/oracle.hpp"

namespace zfo {
namespace {

using golden::ex1_input;
using golden::ex3_input;
using golden::ex3_output;

TEST(ClampExtendTest, LinearInputIsReturnedUnchanged) {
  const auto r = ex3_output();
  const auto result = clamp_extend(r, 0, 3);
  EXPECT_EQ(result.relation, r);
  EXPECT_EQ(result.beta.value(), 0.60);
}

TEST(ClampExtendTest, SevenElementPairX1X4) {
  const auto r = ex3_input();
  const auto result = clamp_extend(r, 0, 3);
  EXPECT_EQ(result.beta.value(), 0.55);
  EXPECT_EQ(result.base, ex3_output());
  EXPECT_EQ(result.base(0, 3), 0.60);
  EXPECT_EQ(result.preserved_pair, (Pair{0, 3}));

  const auto& s = result.relation;
  EXPECT_EQ(s(0, 3), 0.55);
  EXPECT_EQ(s(0, 1), 0.55);
  EXPECT_EQ(s(0, 6), 0.75);
  EXPECT_EQ(s(2, 6), 0.90);
  EXPECT_EQ(s(3, 4), 0.55);
  EXPECT_EQ(s.values(), golden::naive_clamp(r, ex3_output(), 0.55));
}

TEST(ClampExtendTest, ThreeElementPairAC) {
  const auto result = clamp_extend(ex1_input(), 0, 2);
  EXPECT_EQ(result.beta.value(), 0.4);
  EXPECT_EQ(result.base, golden::ex1_output());
  EXPECT_EQ(result.relation, FuzzyRelation({"a", "b", "c"}, {1, 0.4, 0.4, 0, 1, 0.4, 0, 0, 1}));
}

TEST(ClampExtendTest, BaseAlreadyPreservingIsReturned) {
  // r(x_3, x_1) = 0.15 survives linearization untouched.
  const auto result = clamp_extend(ex3_input(), 2, 0);
  EXPECT_EQ(result.relation, ex3_output());
}

TEST(ClampExtendTest, Preconditions) {
  try {
    (void)clamp_extend(ex3_input(), 0, 1);
    ADD_FAILURE();
  } catch (const PreconditionViolation& e) {
    EXPECT_EQ(e.which(), Precondition::kZeroMembership);
  }
  try {
    (void)clamp_extend(FuzzyRelation({"a", "b"}, {1, 0.3, 0.2, 1}), 0, 1);
    ADD_FAILURE();
  } catch (const PreconditionViolation& e) {
    EXPECT_EQ(e.which(), Precondition::kNotAnOrder);
  }
}

TEST(CertifyingFamilyTest, LinearInputGivesSingleton) {
  const auto family = certifying_family(ex3_output());
  ASSERT_EQ(family.size(), 1u);
  EXPECT_EQ(family.members[0].relation, ex3_output());
  const auto one = certifying_family(FuzzyRelation({"a"}, {1}));
  EXPECT_EQ(one.size(), 1u);
}

TEST(CertifyingFamilyTest, ThreeElementExampleCounts) {
  const auto family = certifying_family(ex1_input());
  // Two orientations per incomparable pair, one clamp for (a,c).
  EXPECT_EQ(family.certificate_count(), 5u);
  // Orienting (a,b) and orienting (b,c) both end in the chain a<b<c.
  EXPECT_EQ(family.size(), 4u);
  EXPECT_EQ(family.members[0].relation, golden::ex1_output());
  EXPECT_EQ(family.members[0].certifies,
            (std::vector<Certificate>{{CertificateKind::kOrients, {0, 1}}, {CertificateKind::kOrients, {1, 2}}}));
}

TEST(CertifyingFamilyTest, SevenElementExampleCounts) {
  const auto r = ex3_input();
  const auto family = certifying_family(r);
  EXPECT_EQ(golden::count_positive_off_diagonal(r), 17u);
  EXPECT_EQ(family.certificate_count(), 2 * 4 + 17u);
  EXPECT_EQ(family.size(), 12u);
}

TEST(CertifyingFamilyTest, OrientingMembersLockThePair) {
  const auto r = ex3_input();
  const auto family = certifying_family(r);
  for (const auto& m : family.members) {
    for (const auto& c : m.certifies) {
      if (c.kind == CertificateKind::kOrients) {
        EXPECT_EQ(m.relation(c.pair.first, c.pair.second), 1.0);
        EXPECT_EQ(m.relation(c.pair.second, c.pair.first), 0.0);
      } else {
        EXPECT_EQ(m.relation(c.pair.first, c.pair.second), r(c.pair.first, c.pair.second));
      }
    }
  }
}

TEST(VerifyIntersectionTest, Examples) {
  const auto r = ex1_input();
  EXPECT_TRUE(verify_intersection(r, certifying_family(r)).passed());
  EXPECT_EQ(pointwise_inf(certifying_family(r).relations()), r);

  const auto lin = ex3_output();
  EXPECT_TRUE(verify_intersection(lin, std::vector{lin}).passed());

  const auto check = verify_intersection(ex3_input(), std::vector{ex3_output()});
  EXPECT_FALSE(check.passed());
  EXPECT_NE(std::find(check.mismatches.begin(), check.mismatches.end(), EntryMismatch{{0, 1}, 1.0, 0.0}),
            check.mismatches.end());
}

TEST(VerifyIntersectionTest, Errors) {
  EXPECT_THROW((void)verify_intersection(ex1_input(), std::vector<FuzzyRelation>{}), EmptyFamily);
  EXPECT_THROW((void)verify_intersection(ex1_input(), std::vector{ex3_input()}), CarrierMismatch);
}

ExtensionFamily drop_members_with(const ExtensionFamily& family, const Certificate& c) {
  ExtensionFamily out;
  for (const auto& m : family.members) {
    if (std::find(m.certifies.begin(), m.certifies.end(), c) == m.certifies.end()) out.members.push_back(m);
  }
  return out;
}

TEST(CertifyingFamilyTest, PreservingMemberIsNeededForX1X5) {
  const auto r = ex3_input();
  const auto reduced = drop_members_with(certifying_family(r), {CertificateKind::kPreserves, {0, 4}});
  const auto check = verify_intersection(r, reduced);
  ASSERT_FALSE(check.passed());
  ASSERT_EQ(check.mismatches.size(), 1u);
  EXPECT_EQ(check.mismatches[0], (EntryMismatch{{0, 4}, 0.5, 0.4}));
}

TEST(CertifyingFamilyTest, OrientingMembersAlreadyAttainX1X4) {
  // orients(x_2,x_1) and orients(x_2,x_3) keep r(x_1,x_4) = 0.55, so the
  // preserving member for (x_1,x_4) is redundant in this family.
  const auto r = ex3_input();
  const auto family = certifying_family(r);
  const auto reduced = drop_members_with(family, {CertificateKind::kPreserves, {0, 3}});
  EXPECT_LT(reduced.size(), family.size());
  EXPECT_TRUE(verify_intersection(r, reduced).passed());
  EXPECT_EQ(linearize(pivot_extend(r, 1, 0)).relation(0, 3), 0.55);
  EXPECT_EQ(linearize(pivot_extend(r, 1, 2)).relation(0, 3), 0.55);
}

TEST(ExtensionFamilyTest, AddMergesAndWithoutDrops) {
  ExtensionFamily family;
  const auto r = ex1_input();
  family.add(r, {CertificateKind::kPreserves, {0, 2}});
  family.add(r, {CertificateKind::kOrients, {0, 1}});
  family.add(golden::ex1_output(), {CertificateKind::kOrients, {1, 2}});
  EXPECT_EQ(family.size(), 2u);
  EXPECT_EQ(family.certificate_count(), 3u);

  const auto fewer = family.without({CertificateKind::kOrients, {1, 2}});
  EXPECT_EQ(fewer.size(), 1u);
  const auto merged = family.without({CertificateKind::kOrients, {0, 1}});
  EXPECT_EQ(merged.size(), 2u);
  EXPECT_EQ(merged.certificate_count(), 2u);
}

// Properties over generated orders.

std::vector<FuzzyRelation> orders(std::size_t count) {
  std::vector<FuzzyRelation> out;
  const double densities[] = {0.0, 0.3, 0.7, 1.0, 0.5};
  for (std::size_t seed = 0; seed < count; ++seed) {
    oracle::GeneratorSpec spec;
    spec.n = 1 + seed % 8;
    spec.density = densities[seed % 5];
    spec.seed = 77 + seed;
    out.push_back(oracle::random_zadeh_order(spec));
  }
  return out;
}

TEST(ClampPropertyTest, ValuePreservingLinearExtension) {
  for (const auto& r : orders(300)) {
    for (std::size_t a = 0; a < r.size(); ++a) {
      for (std::size_t b = 0; b < r.size(); ++b) {
        if (a == b || r(a, b) == 0.0) continue;
        const auto result = clamp_extend(r, a, b);
        const auto& s = result.relation;
        const double beta = result.beta.value();
        const bool clamped = result.base(a, b) != beta;
        if (!clamped) EXPECT_EQ(s, result.base);
        ASSERT_TRUE(oracle::brute_check_order(s));
        EXPECT_TRUE(is_linear(s).passed());
        EXPECT_TRUE(extends(r, s));
        EXPECT_EQ(s(a, b), r(a, b));
        for (std::size_t x = 0; x < r.size(); ++x) {
          for (std::size_t y = 0; y < r.size(); ++y) {
            EXPECT_TRUE(s(x, y) == result.base(x, y) || s(x, y) == beta);
            // The cap only applies when the base extension did not already keep r(a,b).
            if (!clamped) continue;
            if (r(x, y) > beta) EXPECT_EQ(s(x, y), result.base(x, y));
            if (r(x, y) <= beta) EXPECT_LE(s(x, y), beta);
          }
        }
      }
    }
  }
}

TEST(FamilyPropertyTest, InfimumReconstructsInput) {
  for (const auto& r : orders(400)) {
    const auto family = certifying_family(r);
    for (const auto& m : family.members) {
      EXPECT_TRUE(is_zadeh_order(m.relation));
      EXPECT_TRUE(is_linear(m.relation).passed());
      EXPECT_TRUE(extends(r, m.relation));
    }
    EXPECT_TRUE(verify_intersection(r, family).passed());
  }
}

}  // namespace
}  // namespace zfo
