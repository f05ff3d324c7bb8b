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

// Approximate decision solver for min ‖x‖_∞ subject to A·x = b.
//
// Given a target M and accuracy ε the solver either returns x with A·x = b
// and ‖x‖_∞ <= (1+ε)·M, or resistances r on the simplex whose electrical
// energy is at least (1−ε)²·M², which proves min ‖x‖_∞ >= (1−ε)·M.
//
// Each iteration solves one weighted least-squares problem and multiplies
// the resistance of every coordinate with |xᵢ| >= (1+ε)·M by xᵢ²/M². Every
// such update raises the energy by at least M² per unit of added resistance,
// so once ‖r‖₁ exceeds the budget the normalized resistances certify
// infeasibility. Iterates with small ‖x‖_∞ are averaged; the average is
// returned as soon as it is (1+ε)·M-feasible.

#ifndef IRLS_LINF_SOLVER_H_
#define IRLS_LINF_SOLVER_H_

#include <optional>
#include <variant>

#include "irls/linalg.h"
#include "irls/trace.h"

namespace irls {

struct LinfConfig {
  double eps = 0.1;
  double target = 1.0;
  StepMode step_mode = StepMode::kShort;
  // Iterates with ‖x‖_∞ <= ρ·M enter the running average. Default m^{1/3}.
  std::optional<double> averaging_threshold;
  // The loop runs while ‖r‖₁ <= budget. Default 1/ε.
  std::optional<double> resistance_budget;
  // Default DefaultMaxIterations(m, eps).
  std::optional<long> max_iterations;
  // Initial resistances, rescaled to ‖r‖₁ = 1. Default uniform 1/m.
  std::optional<WeightVector> warm_start;
  LinalgOptions linalg;

  // Throws InvalidArgument unless 0 < ε <= 1/2, M > 0, ρ >= 1, budget > 1.
  void Validate() const;
};

struct LinfFeasible {
  Vector x;
  double linf_norm = 0.0;
};

struct LinfInfeasible {
  // r/‖r‖₁.
  WeightVector r_simplex;
  // Electrical energy of r_simplex, >= (1−ε)²·M².
  double energy_lb = 0.0;
};

using LinfOutcome = std::variant<LinfFeasible, LinfInfeasible>;

struct LinfResult {
  LinfOutcome outcome;
  IterationTrace trace;

  bool feasible() const {
    return std::holds_alternative<LinfFeasible>(outcome);
  }
};

// αᵢ = 1 if |xᵢ| < (1+ε)·M, xᵢ²/M² otherwise.
Vector LinfUpdateFactors(const Vector& x, double target, double eps);

LinfResult LinfDecide(const Matrix& a, const Vector& b,
                      const LinfConfig& config);

// True iff E(r_simplex) >= (1−ε)²·M², which implies
// min ‖x‖_∞ >= (1−ε)·M.
bool VerifyLinfCertificate(const Matrix& a, const Vector& b,
                           const WeightVector& r_simplex, double target,
                           double eps, const LinalgOptions& options = {});

// Long-step update: r·α^(2^k) for the largest k (up to 30) such that every
// candidate up to it keeps (E_new − E_old) / ‖r_new − r‖₁ >= M², with
// E_new recomputed by a fresh solve. k = 0 is the short step and is always
// accepted. `flow` must be the optimal flow for `resistances`.
WeightVector LongStepUpdate(const WeightVector& resistances, const Vector& flow,
                            double target, double eps, const Matrix& a,
                            const Vector& b,
                            const LinalgOptions& options = {});

// 100·(m^{1/3}·log(1/ε)/ε^{2/3} + log(m)/ε²) + 10⁴.
long DefaultMaxIterations(Index m, double eps);

}  // namespace irls

#endif  // IRLS_LINF_SOLVER_H_
