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

// Exact optimum of min ‖x‖_p subject to A·x = b for small m, found by
// enumerating the basic solutions of the corresponding linear program.
// Meant as ground truth for tests; the cost grows combinatorially in m.

#ifndef IRLS_LP_ORACLE_H_
#define IRLS_LP_ORACLE_H_

#include "irls/linalg.h"

namespace irls {

inline constexpr Index kLpOracleMaxColumns = 12;
inline constexpr long kLpOracleMaxSubsets = 1'000'000;

struct LpOptimum {
  double value = 0.0;
  // A minimizer; one of the enumerated basic solutions.
  Vector x;
};

// ℓ∞ enumerates vertices of {(x, t) : A·x = b, −t <= xᵢ <= t}, choosing
// which m + 1 − rank(A) of the inequalities are tight. ℓ1 enumerates the
// supports of size rank(A) whose columns are linearly independent, which
// are exactly the bases of the split form A·(x⁺ − x⁻) = b, x± >= 0.
//
// Throws TooLarge if m > 12 or the subset count exceeds 10⁶, and Infeasible
// if no basic feasible solution exists (b outside the column span).
LpOptimum LpOracleSolve(const Matrix& a, const Vector& b, Norm norm);

inline double LpOracle(const Matrix& a, const Vector& b, Norm norm) {
  return LpOracleSolve(a, b, norm).value;
}

}  // namespace irls

#endif  // IRLS_LP_ORACLE_H_
