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

#include "zfo/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "zfo/value_preserving.hpp"

namespace zfo::oracle {

std::size_t Rng::below(std::size_t bound) {
  const std::uint64_t range = bound;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw = 0;
  do {
    draw = engine_();
  } while (draw >= limit);
  return static_cast<std::size_t>(draw % range);
}

std::vector<double> default_value_pool() {
  return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
}

FuzzyRelation random_zadeh_order(const GeneratorSpec& spec) {
  if (spec.n < 1 || spec.n > GeneratorSpec::kMaxN) {
    throw InvalidSpec("generator n must be in 1.." + std::to_string(GeneratorSpec::kMaxN));
  }
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
    throw InvalidSpec("generator density must be in [0,1]");
  }
  if (spec.value_pool.empty()) throw InvalidSpec("generator value pool is empty");
  for (double v : spec.value_pool) {
    if (!(v > 0.0 && v <= 1.0)) throw InvalidSpec("generator pool values must be in (0,1]");
  }

  const std::size_t n = spec.n;
  Rng rng(spec.seed);

  // Fisher-Yates with our own bounded draws.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);

  std::vector<char> edge(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.chance(spec.density)) edge[perm[i] * n + perm[j]] = 1;
    }
  }
  // Warshall closure; stays acyclic because every edge goes forward in perm.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!edge[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (edge[k * n + j]) edge[i * n + j] = 1;
      }
    }
  }

  std::vector<double> grid(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i * n + i] = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (edge[i * n + j]) grid[i * n + j] = spec.value_pool[rng.below(spec.value_pool.size())];
    }
  }

  // Max-min lift. Positive min terms only arise on closed support, so no
  // new positive entries appear.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t z = 0; z < n; ++z) {
        double best = grid[x * n + z];
        for (std::size_t y = 0; y < n; ++y) best = std::max(best, std::min(grid[x * n + y], grid[y * n + z]));
        if (best != grid[x * n + z]) {
          grid[x * n + z] = best;
          changed = true;
        }
      }
    }
  }
  return FuzzyRelation(FuzzyRelation::default_labels(n), std::move(grid));
}

bool brute_check_order(const FuzzyRelation& r) {
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (r(x, x) != 1.0) return false;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && r(x, y) > 0.0 && r(y, x) != 0.0) return false;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const double lhs = r(x, z);
        const double a = r(x, y);
        const double b = r(y, z);
        if (lhs < (a < b ? a : b)) return false;
      }
    }
  }
  return true;
}

FuzzyRelation random_corruption(const FuzzyRelation& r, Rng& rng) {
  std::vector<double> values = r.values();
  std::vector<double> pool = default_value_pool();
  pool.push_back(0.0);
  values[rng.below(values.size())] = pool[rng.below(pool.size())];
  return r.with_values(std::move(values));
}

ProbeResult inf_reconstruction_probe(const FuzzyRelation& r) {
  ProbeResult out;
  const ExtensionFamily family = certifying_family(r);
  out.family_size = family.size();
  out.library_verdict = verify_intersection(r, family).passed();

  const std::size_t n = r.size();
  std::vector<double> fold(n * n, 1.0);
  for (const auto& member : family.members) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const double v = member.relation(x, y);
        if (v < fold[x * n + y]) fold[x * n + y] = v;
      }
    }
  }
  out.fold_matches = true;
  for (std::size_t x = 0; x < n && out.fold_matches; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (fold[x * n + y] != r(x, y)) {
        out.fold_matches = false;
        break;
      }
    }
  }
  out.passed = out.library_verdict && out.fold_matches;
  return out;
}

}  // namespace zfo::oracle
