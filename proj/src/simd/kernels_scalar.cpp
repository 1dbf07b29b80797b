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

#include <algorithm>

#include "zfo/simd/kernels.hpp"

namespace zfo::simd {
namespace {

void raise_row(double* out, const double* base, double s, const double* other,
               std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::max(base[i], std::min(s, other[i]));
}

void min_row(double* acc, const double* src, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) acc[i] = std::min(acc[i], src[i]);
}

void clamp_row(double* out, const double* orig, const double* ext, double beta,
               std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) out[i] = orig[i] > beta ? ext[i] : std::min(beta, ext[i]);
}

bool row_le(const double* lo, const double* hi, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    if (!(lo[i] <= hi[i])) return false;
  }
  return true;
}

constexpr KernelTable kScalar{Backend::kScalar, raise_row, min_row, clamp_row, row_le};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace zfo::simd
