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

#include "zfo/simd/kernels.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cstring>

#include "zfo/axioms.hpp"
#include "zfo/extension.hpp"
#include "zfo/oracle.hpp"
#include "zfo/value_preserving.hpp"

namespace zfo::simd {
namespace {

std::vector<double> random_row(oracle::Rng& rng, std::size_t n) {
  std::vector<double> row(n);
  for (auto& v : row) {
    switch (rng.below(4)) {
      case 0: v = 0.0; break;
      case 1: v = 1.0; break;
      case 2: v = 0.1 * static_cast<double>(1 + rng.below(9)); break;
      default: v = rng.unit(); break;
    }
  }
  return row;
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

class KernelEquivalenceTest : public ::testing::TestWithParam<Backend> {};

TEST_P(KernelEquivalenceTest, MatchesScalarBitForBit) {
  const KernelTable& ref = scalar_table();
  const KernelTable& simd = table(GetParam());
  EXPECT_EQ(simd.backend, GetParam());
  oracle::Rng rng(99);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::size_t n = rng.below(38);
    const auto a = random_row(rng, n);
    const auto b = random_row(rng, n);
    const double s = random_row(rng, 1)[0];

    std::vector<double> out_ref(n), out_simd(n);
    ref.raise_row(out_ref.data(), a.data(), s, b.data(), n);
    simd.raise_row(out_simd.data(), a.data(), s, b.data(), n);
    ASSERT_TRUE(bit_equal(out_ref, out_simd)) << "raise_row n=" << n;

    // In-place form.
    auto inplace = a;
    simd.raise_row(inplace.data(), inplace.data(), s, b.data(), n);
    ASSERT_TRUE(bit_equal(out_ref, inplace));

    auto acc_ref = a, acc_simd = a;
    ref.min_row(acc_ref.data(), b.data(), n);
    simd.min_row(acc_simd.data(), b.data(), n);
    ASSERT_TRUE(bit_equal(acc_ref, acc_simd)) << "min_row n=" << n;

    ref.clamp_row(out_ref.data(), a.data(), b.data(), s, n);
    simd.clamp_row(out_simd.data(), a.data(), b.data(), s, n);
    ASSERT_TRUE(bit_equal(out_ref, out_simd)) << "clamp_row n=" << n;

    ASSERT_EQ(ref.row_le(a.data(), b.data(), n), simd.row_le(a.data(), b.data(), n));
    ASSERT_TRUE(simd.row_le(acc_simd.data(), a.data(), n));
    ASSERT_TRUE(simd.row_le(a.data(), a.data(), n));
  }
}

TEST_P(KernelEquivalenceTest, RowLeDetectsEveryPosition) {
  const KernelTable& simd = table(GetParam());
  for (std::size_t n = 1; n < 20; ++n) {
    for (std::size_t bad = 0; bad < n; ++bad) {
      std::vector<double> lo(n, 0.5), hi(n, 0.5);
      lo[bad] = 0.75;
      EXPECT_FALSE(simd.row_le(lo.data(), hi.data(), n)) << n << " " << bad;
    }
  }
}

TEST_P(KernelEquivalenceTest, LibraryResultsIndependentOfBackend) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    oracle::GeneratorSpec spec;
    spec.n = 1 + seed % 12;
    spec.density = 0.35;
    spec.seed = seed;
    const auto r = oracle::random_zadeh_order(spec);

    force_backend(Backend::kScalar);
    const auto lin_ref = linearize(r);
    const auto fam_ref = certifying_family(r);
    const bool order_ref = is_zadeh_order(oracle::random_zadeh_order(spec));

    force_backend(GetParam());
    const auto lin = linearize(r);
    const auto fam = certifying_family(r);
    EXPECT_EQ(order_ref, is_zadeh_order(oracle::random_zadeh_order(spec)));
    reset_backend();

    EXPECT_EQ(lin.relation, lin_ref.relation);
    EXPECT_EQ(lin.trace, lin_ref.trace);
    ASSERT_EQ(fam.size(), fam_ref.size());
    for (std::size_t i = 0; i < fam.size(); ++i) {
      EXPECT_EQ(fam.members[i].relation, fam_ref.members[i].relation);
      EXPECT_EQ(fam.members[i].certifies, fam_ref.members[i].certifies);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Available, KernelEquivalenceTest, ::testing::ValuesIn(available_backends()),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(DispatchTest, ScalarAlwaysAvailable) {
  EXPECT_TRUE(is_available(Backend::kScalar));
  EXPECT_FALSE(available_backends().empty());
  EXPECT_EQ(available_backends().front(), Backend::kScalar);
}

TEST(DispatchTest, ActivePicksWidestAvailable) {
  reset_backend();
  EXPECT_EQ(active().backend, available_backends().back());
  force_backend(Backend::kScalar);
  EXPECT_EQ(active().backend, Backend::kScalar);
  reset_backend();
}

TEST(DispatchTest, UnavailableBackendThrows) {
  for (Backend b : {Backend::kAvx2, Backend::kNeon}) {
    if (!is_available(b)) {
      EXPECT_THROW((void)table(b), std::invalid_argument);
      EXPECT_THROW(force_backend(b), std::invalid_argument);
    }
  }
}

}  // namespace
}  // namespace zfo::simd
