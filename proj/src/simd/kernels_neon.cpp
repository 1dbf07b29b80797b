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

// AArch64 Advanced SIMD variant. NEON is mandatory on AArch64, so no
// runtime probe is needed.

#include <arm_neon.h>

#include <algorithm>

#include "zfo/simd/kernels.hpp"

namespace zfo::simd {
namespace {

void raise_row(double* out, const double* base, double s, const double* other,
               std::size_t n) noexcept {
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t b = vld1q_f64(base + i);
    const float64x2_t o = vld1q_f64(other + i);
    vst1q_f64(out + i, vmaxq_f64(b, vminq_f64(vs, o)));
  }
  for (; i < n; ++i) out[i] = std::max(base[i], std::min(s, other[i]));
}

void min_row(double* acc, const double* src, std::size_t n) noexcept {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(acc + i, vminq_f64(vld1q_f64(acc + i), vld1q_f64(src + i)));
  for (; i < n; ++i) acc[i] = std::min(acc[i], src[i]);
}

void clamp_row(double* out, const double* orig, const double* ext, double beta,
               std::size_t n) noexcept {
  const float64x2_t vb = vdupq_n_f64(beta);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t r = vld1q_f64(orig + i);
    const float64x2_t e = vld1q_f64(ext + i);
    const uint64x2_t keep = vcgtq_f64(r, vb);
    vst1q_f64(out + i, vbslq_f64(keep, e, vminq_f64(vb, e)));
  }
  for (; i < n; ++i) out[i] = orig[i] > beta ? ext[i] : std::min(beta, ext[i]);
}

bool row_le(const double* lo, const double* hi, std::size_t n) noexcept {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t le = vcleq_f64(vld1q_f64(lo + i), vld1q_f64(hi + i));
    if ((vgetq_lane_u64(le, 0) & vgetq_lane_u64(le, 1)) == 0) return false;
  }
  for (; i < n; ++i) {
    if (!(lo[i] <= hi[i])) return false;
  }
  return true;
}

constexpr KernelTable kNeon{Backend::kNeon, raise_row, min_row, clamp_row, row_le};

}  // namespace

const KernelTable& neon_table() noexcept { return kNeon; }

}  // namespace zfo::simd
