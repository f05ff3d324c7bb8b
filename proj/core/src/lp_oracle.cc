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

#include "irls/lp_oracle.h"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "irls/errors.h"

namespace irls {
namespace {

constexpr double kRankThreshold = 1e-10;
constexpr double kFeasibilityTolerance = 1e-9;

long Binomial(Index n, Index k) {
  if (k < 0 || k > n) return 0;
  long result = 1;
  for (Index i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

Index NumericalRank(const Matrix& a) {
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(a);
  cod.setThreshold(kRankThreshold);
  return cod.rank();
}

// Calls visit(subset) for every k-subset of {0, ..., m − 1} in
// lexicographic order.
template <typename Visit>
void ForEachSubset(Index m, Index k, Visit visit) {
  std::vector<Index> subset(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    visit(subset);
    Index i = k - 1;
    while (i >= 0 && subset[i] == m - k + i) --i;
    if (i < 0) return;
    ++subset[i];
    for (Index j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

// Solves the square-or-tall system exactly when it has full column rank and
// is consistent; returns false otherwise.
bool SolveBasis(const Matrix& system, const Vector& rhs, Vector& solution) {
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(system);
  cod.setThreshold(kRankThreshold);
  if (cod.rank() < system.cols()) return false;
  solution = cod.solve(rhs);
  const double scale = 1.0 + rhs.lpNorm<Eigen::Infinity>();
  return (system * solution - rhs).lpNorm<Eigen::Infinity>() <=
         kFeasibilityTolerance * scale;
}

void CheckBudget(Index m, long subsets) {
  if (m > kLpOracleMaxColumns) {
    throw TooLarge("lp oracle supports at most " +
                   std::to_string(kLpOracleMaxColumns) + " columns, got " +
                   std::to_string(m));
  }
  if (subsets > kLpOracleMaxSubsets) {
    throw TooLarge("lp oracle would enumerate " + std::to_string(subsets) +
                   " subsets");
  }
}

LpOptimum SolveLinf(const Matrix& a, const Vector& b, Index rank) {
  const Index n = a.rows();
  const Index m = a.cols();
  const Index k = m + 1 - rank;
  CheckBudget(m, Binomial(m, k) << k);

  LpOptimum best;
  best.value = std::numeric_limits<double>::infinity();
  Matrix system = Matrix::Zero(n + k, m + 1);
  system.topLeftCorner(n, m) = a;
  Vector rhs = Vector::Zero(n + k);
  rhs.head(n) = b;
  Vector solution;

  ForEachSubset(m, k, [&](const std::vector<Index>& subset) {
    for (unsigned long signs = 0; signs < (1ul << k); ++signs) {
      system.bottomRows(k).setZero();
      for (Index j = 0; j < k; ++j) {
        // xᵢ = ±t, written as xᵢ ∓ t = 0.
        system(n + j, subset[j]) = 1.0;
        system(n + j, m) = (signs >> j) & 1ul ? 1.0 : -1.0;
      }
      if (!SolveBasis(system, rhs, solution)) continue;
      const double t = solution[m];
      const double slack = kFeasibilityTolerance * (1.0 + std::abs(t));
      if (solution.head(m).lpNorm<Eigen::Infinity>() > t + slack) continue;
      if (t < best.value) {
        best.value = t;
        best.x = solution.head(m);
      }
    }
  });
  if (!std::isfinite(best.value)) {
    throw Infeasible("no basic feasible solution: b is outside the span of A");
  }
  best.value = best.x.lpNorm<Eigen::Infinity>();
  return best;
}

LpOptimum SolveL1(const Matrix& a, const Vector& b, Index rank) {
  const Index m = a.cols();
  CheckBudget(m, Binomial(m, rank));

  LpOptimum best;
  best.value = std::numeric_limits<double>::infinity();
  Vector solution;
  ForEachSubset(m, rank, [&](const std::vector<Index>& subset) {
    Matrix columns(a.rows(), rank);
    for (Index j = 0; j < rank; ++j) columns.col(j) = a.col(subset[j]);
    if (!SolveBasis(columns, b, solution)) return;
    const double value = solution.lpNorm<1>();
    if (value < best.value) {
      best.value = value;
      best.x = Vector::Zero(m);
      for (Index j = 0; j < rank; ++j) best.x[subset[j]] = solution[j];
    }
  });
  if (!std::isfinite(best.value)) {
    throw Infeasible("no basic feasible solution: b is outside the span of A");
  }
  return best;
}

}  // namespace

LpOptimum LpOracleSolve(const Matrix& a, const Vector& b, Norm norm) {
  CheckSystem(a, b);
  CheckFinite(a, "constraint matrix");
  CheckFinite(b, "right-hand side");
  const Index m = a.cols();
  if (m > kLpOracleMaxColumns) CheckBudget(m, 0);
  if (b.isZero(0.0)) return LpOptimum{0.0, Vector::Zero(m)};

  const Index rank = NumericalRank(a);
  if (rank == 0) {
    throw Infeasible("A is zero but b is not");
  }
  return norm == Norm::kLinf ? SolveLinf(a, b, rank) : SolveL1(a, b, rank);
}

}  // namespace irls
