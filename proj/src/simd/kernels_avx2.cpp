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

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>

#include "zfo/simd/kernels.hpp"

namespace zfo::simd {
namespace {

// _mm256_min_pd/_mm256_max_pd return the second operand on ties, which is
// bit-identical to the first for validated memberships (no NaN, no -0.0).

void raise_row(double* out, const double* base, double s, const double* other,
               std::size_t n) noexcept {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d b = _mm256_loadu_pd(base + i);
    const __m256d o = _mm256_loadu_pd(other + i);
    _mm256_storeu_pd(out + i, _mm256_max_pd(b, _mm256_min_pd(vs, o)));
  }
  for (; i < n; ++i) out[i] = std::max(base[i], std::min(s, other[i]));
}

void min_row(double* acc, const double* src, std::size_t n) noexcept {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(acc + i);
    const __m256d s = _mm256_loadu_pd(src + i);
    _mm256_storeu_pd(acc + i, _mm256_min_pd(a, s));
  }
  for (; i < n; ++i) acc[i] = std::min(acc[i], src[i]);
}

void clamp_row(double* out, const double* orig, const double* ext, double beta,
               std::size_t n) noexcept {
  const __m256d vb = _mm256_set1_pd(beta);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_loadu_pd(orig + i);
    const __m256d e = _mm256_loadu_pd(ext + i);
    const __m256d keep = _mm256_cmp_pd(r, vb, _CMP_GT_OQ);
    _mm256_storeu_pd(out + i, _mm256_blendv_pd(_mm256_min_pd(vb, e), e, keep));
  }
  for (; i < n; ++i) out[i] = orig[i] > beta ? ext[i] : std::min(beta, ext[i]);
}

bool row_le(const double* lo, const double* hi, std::size_t n) noexcept {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d l = _mm256_loadu_pd(lo + i);
    const __m256d h = _mm256_loadu_pd(hi + i);
    if (_mm256_movemask_pd(_mm256_cmp_pd(l, h, _CMP_LE_OQ)) != 0xF) return false;
  }
  for (; i < n; ++i) {
    if (!(lo[i] <= hi[i])) return false;
  }
  return true;
}

constexpr KernelTable kAvx2{Backend::kAvx2, raise_row, min_row, clamp_row, row_le};

}  // namespace

const KernelTable& avx2_table() noexcept { return kAvx2; }

}  // namespace zfo::simd
