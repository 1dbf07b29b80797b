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

// Test oracles: an exhaustive axiom checker and a reconstruction probe
// written without the library's kernels, plus a seeded generator of valid
// Zadeh fuzzy orders.
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by
// the C++ standard. Draws are converted to indices and unit reals by the
// helpers below rather than std::*_distribution, whose results vary between
// standard library implementations.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "zfo/relation.hpp"

namespace zfo::oracle {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1), 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform in [0, bound) by rejection; bound > 0.
  std::size_t below(std::size_t bound);
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

std::vector<double> default_value_pool();

struct GeneratorSpec {
  static constexpr std::size_t kMaxN = 12;

  std::size_t n = 1;                                  // 1 .. kMaxN
  double density = 0.5;                               // P(forward edge)
  std::vector<double> value_pool = default_value_pool();
  std::uint64_t seed = 0;
};

/// Random order: a random permutation fixes which edges point forward, each
/// forward edge is kept with probability `density`, the crisp edge set is
/// transitively closed, support pairs get pool values, and the values are
/// lifted by max-min composition to a fixpoint. Diagonal is 1.
///
/// Throws InvalidSpec for n outside 1..12, density outside [0,1], or an
/// empty pool / pool values outside (0,1].
FuzzyRelation random_zadeh_order(const GeneratorSpec& spec);

/// Direct translation of the three axioms into nested loops.
bool brute_check_order(const FuzzyRelation& r);

/// Copy of r with one entry replaced by a random value from
/// {0, 1} united with the default pool. May or may not break the order.
FuzzyRelation random_corruption(const FuzzyRelation& r, Rng& rng);

struct ProbeResult {
  bool passed = false;
  bool library_verdict = false;  // verify_intersection
  bool fold_matches = false;     // independent min fold equals r
  std::size_t family_size = 0;
};

/// certifying_family + verify_intersection, cross-checked by a second,
/// plain-loop infimum. Passes iff both agree that the infimum equals r.
ProbeResult inf_reconstruction_probe(const FuzzyRelation& r);

}  // namespace zfo::oracle
