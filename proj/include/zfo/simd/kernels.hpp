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

// Row kernels behind every grid-wide operation. Each backend implements the
// same table; results are bit-identical across backends because only
// comparisons, min and max are applied to validated memberships.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace zfo::simd {

enum class Backend { kScalar, kAvx2, kNeon };

std::string_view to_string(Backend b) noexcept;

struct KernelTable {
  Backend backend;

  // out[i] = max(base[i], min(s, other[i])). out may alias base.
  void (*raise_row)(double* out, const double* base, double s, const double* other,
                    std::size_t n) noexcept;

  // acc[i] = min(acc[i], src[i]).
  void (*min_row)(double* acc, const double* src, std::size_t n) noexcept;

  // out[i] = orig[i] > beta ? ext[i] : min(beta, ext[i]).
  void (*clamp_row)(double* out, const double* orig, const double* ext, double beta,
                    std::size_t n) noexcept;

  // True iff lo[i] <= hi[i] for every i.
  bool (*row_le)(const double* lo, const double* hi, std::size_t n) noexcept;
};

const KernelTable& scalar_table() noexcept;
#if defined(ZFO_HAVE_AVX2)
const KernelTable& avx2_table() noexcept;
#endif
#if defined(ZFO_HAVE_NEON)
const KernelTable& neon_table() noexcept;
#endif

/// Backends compiled in and supported by the running CPU.
std::vector<Backend> available_backends();
bool is_available(Backend b) noexcept;

/// Table for `b`; throws std::invalid_argument if unavailable.
const KernelTable& table(Backend b);

/// Table used by the library. Chosen once from CPU features (widest
/// available wins) unless overridden with force_backend.
const KernelTable& active() noexcept;

/// Override the runtime selection; intended for tests and benchmarks.
void force_backend(Backend b);
void reset_backend() noexcept;

// Span conveniences used by the library modules.
inline void raise_row(std::span<double> out, std::span<const double> base, double s,
                      std::span<const double> other) noexcept {
  active().raise_row(out.data(), base.data(), s, other.data(), out.size());
}
inline void min_row(std::span<double> acc, std::span<const double> src) noexcept {
  active().min_row(acc.data(), src.data(), acc.size());
}
inline void clamp_row(std::span<double> out, std::span<const double> orig,
                      std::span<const double> ext, double beta) noexcept {
  active().clamp_row(out.data(), orig.data(), ext.data(), beta, out.size());
}
inline bool row_le(std::span<const double> lo, std::span<const double> hi) noexcept {
  return active().row_le(lo.data(), hi.data(), lo.size());
}

}  // namespace zfo::simd
