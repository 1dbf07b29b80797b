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

#include <atomic>
#include <stdexcept>
#include <string>

#include "zfo/simd/kernels.hpp"

namespace zfo::simd {
namespace {

bool cpu_supports(Backend b) noexcept {
  switch (b) {
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
#if defined(ZFO_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::kNeon:
#if defined(ZFO_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* detect() noexcept {
#if defined(ZFO_HAVE_AVX2)
  if (cpu_supports(Backend::kAvx2)) return &avx2_table();
#endif
#if defined(ZFO_HAVE_NEON)
  return &neon_table();
#endif
  return &scalar_table();
}

std::atomic<const KernelTable*>& slot() noexcept {
  static std::atomic<const KernelTable*> current{detect()};
  return current;
}

}  // namespace

std::string_view to_string(Backend b) noexcept {
  switch (b) {
    case Backend::kScalar: return "scalar";
    case Backend::kAvx2: return "avx2";
    case Backend::kNeon: return "neon";
  }
  return "unknown";
}

bool is_available(Backend b) noexcept { return cpu_supports(b); }

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::kScalar, Backend::kAvx2, Backend::kNeon}) {
    if (is_available(b)) out.push_back(b);
  }
  return out;
}

const KernelTable& table(Backend b) {
  if (!is_available(b)) {
    throw std::invalid_argument("kernel backend '" + std::string(to_string(b)) +
                                "' is not available on this machine");
  }
  switch (b) {
#if defined(ZFO_HAVE_AVX2)
    case Backend::kAvx2: return avx2_table();
#endif
#if defined(ZFO_HAVE_NEON)
    case Backend::kNeon: return neon_table();
#endif
    default: return scalar_table();
  }
}

const KernelTable& active() noexcept { return *slot().load(std::memory_order_acquire); }

void force_backend(Backend b) { slot().store(&table(b), std::memory_order_release); }

void reset_backend() noexcept { slot().store(detect(), std::memory_order_release); }

}  // namespace zfo::simd
