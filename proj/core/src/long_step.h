// Copyright 2026 The IRLS Authors.
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

#ifndef IRLS_SRC_LONG_STEP_H_
#define IRLS_SRC_LONG_STEP_H_

#include <cmath>
#include <optional>

#include "irls/linalg.h"

namespace irls::internal {

inline constexpr int kMaxStepDoublings = 30;
inline constexpr double kMaxWeight = 1e300;

struct LongStep {
  Vector weights;
  // Solution for `weights` when it had to be computed to evaluate the guard.
  std::optional<ElectricalSolution> solution;
  int doublings = 0;
};

// Tries weights·α^(2^k) for k = 1, 2, ... and keeps the last candidate for
// which `guard(candidate, solution)` holds. `solve(candidate)` returns the
// electrical solution for a candidate. Stops after the first failing guard,
// once a candidate's ℓ1 norm exceeds `budget`, or at k = kMaxStepDoublings.
template <typename SolveFn, typename GuardFn>
LongStep DoubleStep(const Vector& weights, const Vector& alpha, double budget,
                    SolveFn solve, GuardFn guard) {
  LongStep step;
  step.weights = weights.cwiseProduct(alpha);
  if (step.weights.sum() > budget) return step;
  for (int k = 1; k <= kMaxStepDoublings; ++k) {
    const double exponent = std::ldexp(1.0, k);
    Vector candidate(weights.size());
    bool representable = true;
    for (Index i = 0; i < weights.size(); ++i) {
      candidate[i] = weights[i] * std::pow(alpha[i], exponent);
      if (!std::isfinite(candidate[i]) || candidate[i] > kMaxWeight) {
        representable = false;
        break;
      }
    }
    if (!representable) break;
    ElectricalSolution solution = solve(candidate);
    if (!guard(candidate, solution)) break;
    step.weights = std::move(candidate);
    step.solution = std::move(solution);
    step.doublings = k;
    if (step.weights.sum() > budget) break;
  }
  return step;
}

}  // namespace irls::internal

#endif  // IRLS_SRC_LONG_STEP_H_
