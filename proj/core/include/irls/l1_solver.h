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

// Approximate decision solver for min ‖x‖₁ subject to A·x = b.
//
// Works over conductances c. Either returns potentials φ with
// bᵀφ / ‖Aᵀφ‖_∞ >= (1−ε)·M (a dual certificate that min ‖x‖₁ >= (1−ε)·M),
// or conductances c on the simplex whose electrical flow
// x = diag(c)·Aᵀ·(A·diag(c)·Aᵀ)⁺·b satisfies ‖x‖₁ <= (1+ε)·M.

#ifndef IRLS_L1_SOLVER_H_
#define IRLS_L1_SOLVER_H_

#include <optional>
#include <variant>

#include "irls/linalg.h"
#include "irls/trace.h"

namespace irls {

struct L1Config {
  double eps = 0.1;
  double target = 1.0;
  StepMode step_mode = StepMode::kShort;
  // Default m^{1/3}.
  std::optional<double> averaging_threshold;
  // The loop runs while ‖c‖₁ <= budget. Default 1 + 1/((1+ε)² − 1).
  std::optional<double> conductance_budget;
  std::optional<long> max_iterations;
  // Initial conductances, rescaled to ‖c‖₁ = 1. Default uniform 1/m.
  std::optional<WeightVector> warm_start;
  LinalgOptions linalg;

  void Validate() const;
};

struct L1Feasible {
  Vector x;
  double l1_norm = 0.0;
  // c/‖c‖₁ for the final conductances.
  WeightVector c_simplex;
};

struct L1Infeasible {
  // Scaled so that bᵀφ = 1.
  Vector phi;
  // bᵀφ / ‖Aᵀφ‖_∞, >= (1−ε)·M.
  double dual_value = 0.0;
};

using L1Outcome = std::variant<L1Infeasible, L1Feasible>;

struct L1Result {
  L1Outcome outcome;
  IterationTrace trace;

  bool feasible() const { return std::holds_alternative<L1Feasible>(outcome); }
};

// With g = Aᵀφ / bᵀφ: αᵢ = 1 if |gᵢ| <= 1/((1−ε)·M), gᵢ²·M² otherwise.
Vector L1UpdateFactors(const Vector& g, double target, double eps);

L1Result L1Decide(const Matrix& a, const Vector& b, const L1Config& config);

// x = diag(c)·Aᵀ·(A·diag(c)·Aᵀ)⁺·b. Satisfies A·x = b and
// ‖x‖₁² <= ‖c‖₁ · bᵀ(A·diag(c)·Aᵀ)⁺·b. Invariant under scaling c.
Vector ExtractFeasible(const WeightVector& conductances, const Matrix& a,
                       const Vector& b, const LinalgOptions& options = {});

// bᵀφ / ‖Aᵀφ‖_∞ with 0/0 read as 0. Throws DegenerateCertificate when
// Aᵀφ = 0 but bᵀφ != 0.
double L1DualValue(const Matrix& a, const Vector& b, const Vector& phi);

// True iff L1DualValue(a, b, phi) >= (1−ε)·M.
bool VerifyL1Dual(const Matrix& a, const Vector& b, const Vector& phi,
                  double target, double eps);

// Long-step update over conductances, guarded by
// (1/E_new − 1/E_old) / ‖c_new − c‖₁ >= 1/M². `phi` must be the optimal
// potentials for `conductances`.
WeightVector L1LongStepUpdate(const WeightVector& conductances,
                              const Vector& phi, double target, double eps,
                              const Matrix& a, const Vector& b,
                              const LinalgOptions& options = {});

}  // namespace irls

#endif  // IRLS_L1_SOLVER_H_
