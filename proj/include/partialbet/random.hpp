/*
 * Copyright 2026 The partialbet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Seeded generators for formulas and partial values, shared by the
// verification suites and the tests.

#pragma once

#include <random>

#include "partialbet/formula.hpp"
#include "partialbet/values.hpp"

namespace partialbet {

using Rng = std::mt19937_64;

struct FormulaShape {
  int max_depth = 4;
  bool allow_neutral = true;
  bool allow_constants = true;
};

/// Random formula of the given arity (arity 0 yields constants only).
inline Formula random_formula(int arity, Rng& rng, FormulaShape shape = {}) {
  std::uniform_int_distribution<int> pick(0, 99);
  auto leaf = [&]() -> Formula {
    const int r = pick(rng);
    if (arity > 0 && (!shape.allow_constants || r < 80)) {
      std::uniform_int_distribution<int> var(1, arity);
      return Formula::var(var(rng), arity);
    }
    const int c = shape.allow_neutral ? r % 3 : r % 2;
    if (c == 0) return Formula::zero(arity);
    if (c == 1) return Formula::one(arity);
    return Formula::neutral(arity);
  };
  auto build = [&](auto& self, int depth) -> Formula {
    const int r = pick(rng);
    if (depth <= 0 || r < 25) return leaf();
    if (r < 45) return !self(self, depth - 1);
    Formula a = self(self, depth - 1);
    Formula b = self(self, depth - 1);
    return r < 72 ? (a & b) : (a | b);
  };
  return build(build, shape.max_depth);
}

/// Uniform on T (rejection from the unit square), with a small share of
/// exact boundary points so edge cases get exercised.
inline PartialValue random_partial_value(Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, 19);
  switch (pick(rng)) {
    case 0: return {unit(rng), 0.0};
    case 1: return {0.0, unit(rng)};
    case 2: {
      const double x = unit(rng);
      return {x, 1.0 - x};
    }
    default: break;
  }
  for (;;) {
    const double x = unit(rng), y = unit(rng);
    if (x + y <= 1.0) return {x, y};
  }
}

}  // namespace partialbet
