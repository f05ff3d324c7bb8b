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

// Drivers on top of the two decision solvers: a norm-agnostic decision
// interface, phase scheduling (warm-starting from a coarser decision), and
// the search that turns approximate decisions into an approximate optimum.

#ifndef IRLS_META_H_
#define IRLS_META_H_

#include <optional>
#include <variant>
#include <vector>

#include "irls/l1_solver.h"
#include "irls/linalg.h"
#include "irls/linf_solver.h"
#include "irls/trace.h"

namespace irls {

using DecisionOutcome =
    std::variant<LinfFeasible, LinfInfeasible, L1Feasible, L1Infeasible>;

bool IsFeasible(const DecisionOutcome& outcome);
// The returned point; nullptr for certificates.
const Vector* FeasiblePoint(const DecisionOutcome& outcome);
// ‖x‖_p of the returned point; NaN for certificates.
double ObjectiveValue(const DecisionOutcome& outcome);
// The lower bound on the optimum proven by a certificate: √E(r_simplex) for
// ℓ∞, bᵀφ/‖Aᵀφ‖_∞ for ℓ1. NaN for feasible outcomes.
double CertifiedLowerBound(const DecisionOutcome& outcome);

struct DecideOptions {
  StepMode step_mode = StepMode::kShort;
  std::optional<double> averaging_threshold;
  // Resistance budget (ℓ∞) or conductance budget (ℓ1).
  std::optional<double> budget;
  // Resistances for ℓ∞, conductances for ℓ1.
  std::optional<WeightVector> warm_start;
  std::optional<long> max_iterations;
  LinalgOptions linalg;
};

struct DecisionResult {
  DecisionOutcome outcome;
  IterationTrace trace;
  // Number of decision-solver invocations behind this result.
  int calls = 1;

  bool feasible() const { return IsFeasible(outcome); }
};

DecisionResult Decide(const Matrix& a, const Vector& b, Norm norm, double eps,
                      double target, const DecideOptions& options = {});

struct PhaseOptions {
  StepMode step_mode = StepMode::kShort;
  LinalgOptions linalg;
};

// Decision with phase scheduling. For ε < 1/2 a decision at accuracy
// min(1/2, 2ε) is solved first (recursively), with its target chosen so
// that a point it returns is already (1+ε)·M-feasible (ℓ∞) or a certificate
// it returns already proves (1−ε)·M (ℓ1). Otherwise its certificate
// weights warm-start the ε-level solve, whose weight budget is cut from
// 1/ε to the smallest value (about 3) that still certifies the (1−ε)
// bound, with averaging threshold (ε·m)^{1/3} clamped to [1, m].
DecisionResult PhasedDecide(const Matrix& a, const Vector& b, Norm norm,
                            double eps, double target,
                            const PhaseOptions& options = {});

struct SearchStep {
  double target = 0.0;
  double eps = 0.0;
  bool feasible = false;
};

// [lower, upper] always brackets the optimum: lower is certified by a dual
// object (or a norm inequality) and upper is attained by a feasible point.
struct SearchState {
  double lower = 0.0;
  double upper = 0.0;
  std::vector<SearchStep> history;
};

struct OptimizeOptions {
  StepMode step_mode = StepMode::kShort;
  bool phased = false;
  int max_search_steps = 500;
  LinalgOptions linalg;
};

struct OptimizeResult {
  Vector x;
  double value = 0.0;
  double lower_bound = 0.0;
  SearchState search;
  IterationTrace trace;
  int decision_calls = 0;
  double final_target = 0.0;
  double final_eps = 0.0;
};

// Returns x with A·x = b and ‖x‖_p <= (1+ε)·lower_bound <= (1+ε)·OPT.
// Throws InvalidArgument for b = 0 and InvariantViolation if the closing
// decision returns a certificate.
OptimizeResult Optimize(const Matrix& a, const Vector& b, double eps,
                        Norm norm, const OptimizeOptions& options = {});

// The initial search interval: [‖x₀‖₂/√m, ‖x₀‖_∞] for ℓ∞ and
// [‖x₀‖₂, ‖x₀‖₁] for ℓ1, with x₀ the uniform-weight electrical flow.
SearchState InitialSearchInterval(const Matrix& a, const Vector& b, Norm norm,
                                  const LinalgOptions& options = {});

}  // namespace irls

#endif  // IRLS_META_H_
