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

#include "irls/meta.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "irls/electrical.h"
#include "irls/errors.h"

namespace irls {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void CheckEps(double eps) {
  if (!(eps > 0.0 && eps <= 0.5)) {
    throw InvalidArgument("eps must lie in (0, 1/2], got " +
                          std::to_string(eps));
  }
}

double PhaseAveragingThreshold(double eps, Index m) {
  const double md = static_cast<double>(m);
  return std::clamp(std::cbrt(eps * md), 1.0, std::max(1.0, md));
}

DecisionResult PhasedLinf(const Matrix& a, const Vector& b, double eps,
                          double target, const PhaseOptions& options) {
  DecideOptions plain;
  plain.step_mode = options.step_mode;
  plain.linalg = options.linalg;
  if (eps >= 0.5) return Decide(a, b, Norm::kLinf, eps, target, plain);

  // A point returned by the coarse call has ‖x‖_∞ <= (1+ε)·M.
  const double coarse_eps = std::min(0.5, 2.0 * eps);
  const double coarse_target = (1.0 + eps) * target / (1.0 + coarse_eps);
  DecisionResult coarse = PhasedLinf(a, b, coarse_eps, coarse_target, options);
  if (coarse.feasible()) return coarse;

  const auto& certificate = std::get<LinfInfeasible>(coarse.outcome);
  const double target_sq = target * target;
  const double needed = (1.0 - eps) * (1.0 - eps) * target_sq;
  if (certificate.energy_lb >= needed) return coarse;

  // With ‖r₀‖₁ = 1 and every update adding M² of energy per unit of ‖r‖₁,
  // E(r)/‖r‖₁ >= (E₀ + M²(‖r‖₁ − 1))/‖r‖₁ reaches (1−ε)²M² once
  // ‖r‖₁ >= (1 − E₀/M²) / (1 − (1−ε)²).
  const double budget = (1.0 - certificate.energy_lb / target_sq) /
                        (1.0 - (1.0 - eps) * (1.0 - eps));
  DecideOptions fine = plain;
  fine.warm_start = certificate.r_simplex;
  fine.budget = std::max(budget, 1.0 + 1e-12);
  fine.averaging_threshold = PhaseAveragingThreshold(eps, a.cols());
  DecisionResult result = Decide(a, b, Norm::kLinf, eps, target, fine);

  IterationTrace trace = std::move(coarse.trace);
  trace.Append(result.trace, coarse.calls);
  result.trace = std::move(trace);
  result.calls += coarse.calls;
  return result;
}

DecisionResult PhasedL1(const Matrix& a, const Vector& b, double eps,
                        double target, const PhaseOptions& options) {
  DecideOptions plain;
  plain.step_mode = options.step_mode;
  plain.linalg = options.linalg;
  if (eps >= 0.5) return Decide(a, b, Norm::kL1, eps, target, plain);

  // A dual certificate returned by the coarse call proves (1−ε)·M.
  const double coarse_eps = std::min(0.5, 2.0 * eps);
  const double coarse_target = (1.0 - eps) * target / (1.0 - coarse_eps);
  DecisionResult coarse = PhasedL1(a, b, coarse_eps, coarse_target, options);
  if (!coarse.feasible()) return coarse;

  const auto& feasible = std::get<L1Feasible>(coarse.outcome);
  if (feasible.l1_norm <= (1.0 + eps) * target) return coarse;

  // With ‖c₀‖₁ = 1 and 1/E rising by 1/M² per unit of ‖c‖₁, the bound
  // ‖x‖₁² <= ‖c‖₁·E(c) drops to (1+ε)²M² once
  // ‖c‖₁ >= (1+ε)²(1 − M²/E₀) / ((1+ε)² − 1).
  const double energy0 = ElectricalEnergy(
      a, b, WeightVector::Resistances(feasible.c_simplex.AsResistances()),
      options.linalg);
  const double grow = (1.0 + eps) * (1.0 + eps);
  const double budget =
      grow * (1.0 - target * target / energy0) / (grow - 1.0);
  DecideOptions fine = plain;
  fine.warm_start = feasible.c_simplex;
  fine.budget = std::max(budget, 1.0 + 1e-12);
  fine.averaging_threshold = PhaseAveragingThreshold(eps, a.cols());
  DecisionResult result = Decide(a, b, Norm::kL1, eps, target, fine);

  IterationTrace trace = std::move(coarse.trace);
  trace.Append(result.trace, coarse.calls);
  result.trace = std::move(trace);
  result.calls += coarse.calls;
  return result;
}

}  // namespace

bool IsFeasible(const DecisionOutcome& outcome) {
  return std::holds_alternative<LinfFeasible>(outcome) ||
         std::holds_alternative<L1Feasible>(outcome);
}

const Vector* FeasiblePoint(const DecisionOutcome& outcome) {
  return std::visit(Overloaded{
                        [](const LinfFeasible& f) -> const Vector* { return &f.x; },
                        [](const L1Feasible& f) -> const Vector* { return &f.x; },
                        [](const auto&) -> const Vector* { return nullptr; },
                    },
                    outcome);
}

double ObjectiveValue(const DecisionOutcome& outcome) {
  return std::visit(Overloaded{
                        [](const LinfFeasible& f) { return f.linf_norm; },
                        [](const L1Feasible& f) { return f.l1_norm; },
                        [](const auto&) { return kNaN; },
                    },
                    outcome);
}

double CertifiedLowerBound(const DecisionOutcome& outcome) {
  return std::visit(
      Overloaded{
          [](const LinfInfeasible& c) { return std::sqrt(c.energy_lb); },
          [](const L1Infeasible& c) { return c.dual_value; },
          [](const auto&) { return kNaN; },
      },
      outcome);
}

DecisionResult Decide(const Matrix& a, const Vector& b, Norm norm, double eps,
                      double target, const DecideOptions& options) {
  DecisionResult result;
  if (norm == Norm::kLinf) {
    LinfConfig config;
    config.eps = eps;
    config.target = target;
    config.step_mode = options.step_mode;
    config.averaging_threshold = options.averaging_threshold;
    config.resistance_budget = options.budget;
    config.max_iterations = options.max_iterations;
    config.warm_start = options.warm_start;
    config.linalg = options.linalg;
    LinfResult solved = LinfDecide(a, b, config);
    std::visit([&](auto&& o) { result.outcome = std::move(o); },
               std::move(solved.outcome));
    result.trace = std::move(solved.trace);
  } else {
    L1Config config;
    config.eps = eps;
    config.target = target;
    config.step_mode = options.step_mode;
    config.averaging_threshold = options.averaging_threshold;
    config.conductance_budget = options.budget;
    config.max_iterations = options.max_iterations;
    config.warm_start = options.warm_start;
    config.linalg = options.linalg;
    L1Result solved = L1Decide(a, b, config);
    std::visit([&](auto&& o) { result.outcome = std::move(o); },
               std::move(solved.outcome));
    result.trace = std::move(solved.trace);
  }
  return result;
}

DecisionResult PhasedDecide(const Matrix& a, const Vector& b, Norm norm,
                            double eps, double target,
                            const PhaseOptions& options) {
  CheckEps(eps);
  if (!(target > 0.0)) throw InvalidArgument("target must be positive");
  return norm == Norm::kLinf ? PhasedLinf(a, b, eps, target, options)
                             : PhasedL1(a, b, eps, target, options);
}

SearchState InitialSearchInterval(const Matrix& a, const Vector& b, Norm norm,
                                  const LinalgOptions& options) {
  CheckSystem(a, b);
  const Index m = a.cols();
  const Vector x0 =
      WeightedLeastSquares(a, b,
                           WeightVector::Uniform(m, WeightRole::kResistances),
                           options)
          .flow;
  SearchState state;
  if (norm == Norm::kLinf) {
    // ‖x₀‖₂²/m is the energy of the uniform simplex point, a lower bound on
    // the squared optimum.
    state.lower = x0.norm() / std::sqrt(static_cast<double>(m));
    state.upper = x0.lpNorm<Eigen::Infinity>();
  } else {
    // x₀ is the min-ℓ2 feasible point, so ‖x₀‖₂ <= ‖x*‖₂ <= ‖x*‖₁.
    state.lower = x0.norm();
    state.upper = x0.lpNorm<1>();
  }
  return state;
}

OptimizeResult Optimize(const Matrix& a, const Vector& b, double eps,
                        Norm norm, const OptimizeOptions& options) {
  CheckEps(eps);
  CheckSystem(a, b);
  if (b.isZero(0.0)) {
    throw InvalidArgument("optimize needs a nonzero right-hand side");
  }

  auto decide = [&](double target, double accuracy) {
    if (options.phased) {
      PhaseOptions phase;
      phase.step_mode = options.step_mode;
      phase.linalg = options.linalg;
      return PhasedDecide(a, b, norm, accuracy, target, phase);
    }
    DecideOptions plain;
    plain.step_mode = options.step_mode;
    plain.linalg = options.linalg;
    return Decide(a, b, norm, accuracy, target, plain);
  };

  OptimizeResult result;
  result.search = InitialSearchInterval(a, b, norm, options.linalg);
  SearchState& search = result.search;
  const double stop_ratio = 1.0 + eps / 4.0;

  int steps = 0;
  while (search.upper / search.lower > stop_ratio) {
    if (++steps > options.max_search_steps) {
      throw NonConvergence("search interval did not shrink within " +
                           std::to_string(options.max_search_steps) +
                           " steps");
    }
    const double ratio = search.upper / search.lower;
    const double target = std::sqrt(search.lower * search.upper);
    const double accuracy = std::min(0.5, std::pow(ratio, 1.0 / 6.0) - 1.0);
    DecisionResult decision = decide(target, accuracy);
    result.trace.Append(decision.trace, result.decision_calls);
    result.decision_calls += decision.calls;
    search.history.push_back({target, accuracy, decision.feasible()});

    // Both updates may use the tighter value actually witnessed; either one
    // keeps lower <= OPT <= upper.
    if (decision.feasible()) {
      search.upper = std::min((1.0 + accuracy) * target,
                              ObjectiveValue(decision.outcome));
    } else {
      search.lower = std::max((1.0 - accuracy) * target,
                              CertifiedLowerBound(decision.outcome));
    }
    search.lower = std::min(search.lower, search.upper);
  }

  result.final_target = search.upper * stop_ratio;
  result.final_eps = (eps / 4.0) / stop_ratio;
  DecisionResult closing = decide(result.final_target, result.final_eps);
  result.trace.Append(closing.trace, result.decision_calls);
  result.decision_calls += closing.calls;
  search.history.push_back(
      {result.final_target, result.final_eps, closing.feasible()});
  if (!closing.feasible()) {
    throw InvariantViolation(
        "closing decision returned a certificate although the upper end of "
        "the search interval is attainable");
  }
  result.x = *FeasiblePoint(closing.outcome);
  result.value = ObjectiveValue(closing.outcome);
  result.lower_bound = search.lower;
  return result;
}

}  // namespace irls
