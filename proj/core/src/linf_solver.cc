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

#include "irls/linf_solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "irls/electrical.h"
#include "irls/errors.h"
#include "long_step.h"

namespace irls {
namespace {

ElectricalSolution SolveWithResistances(const Matrix& a, const Vector& b,
                                        const Vector& resistances,
                                        const LinalgOptions& options) {
  return SolveWithConductances(a, b, resistances.cwiseInverse(), options);
}

internal::LongStep LinfLongStep(const Vector& resistances, const Vector& flow,
                                const Vector& alpha, double target,
                                double budget, const Matrix& a,
                                const Vector& b,
                                const LinalgOptions& options) {
  const double target_sq = target * target;
  return internal::DoubleStep(
      resistances, alpha, budget,
      [&](const Vector& candidate) {
        return SolveWithResistances(a, b, candidate, options);
      },
      [&](const Vector& candidate, const ElectricalSolution& solution) {
        const double added = (candidate - resistances).sum();
        const double gain =
            EnergyDifference(resistances, flow, candidate, solution.flow);
        return gain >= target_sq * added;
      });
}

}  // namespace

void LinfConfig::Validate() const {
  if (!(eps > 0.0 && eps <= 0.5)) {
    throw InvalidArgument("eps must lie in (0, 1/2], got " +
                          std::to_string(eps));
  }
  if (!(target > 0.0) || !std::isfinite(target)) {
    throw InvalidArgument("target must be positive and finite");
  }
  if (averaging_threshold && !(*averaging_threshold >= 1.0)) {
    throw InvalidArgument("averaging threshold must be at least 1");
  }
  if (resistance_budget && !(*resistance_budget > 1.0)) {
    throw InvalidArgument("resistance budget must exceed 1");
  }
  if (max_iterations && *max_iterations < 1) {
    throw InvalidArgument("max_iterations must be positive");
  }
  if (warm_start && warm_start->role() != WeightRole::kResistances) {
    throw InvalidArgument("warm start for the linf solver must be resistances");
  }
}

long DefaultMaxIterations(Index m, double eps) {
  const double md = static_cast<double>(std::max<Index>(m, 2));
  const double bound = std::cbrt(md) * std::log(1.0 / eps) /
                           std::pow(eps, 2.0 / 3.0) +
                       std::log(md) / (eps * eps);
  const double cap = 100.0 * bound + 1e4;
  return cap >= static_cast<double>(std::numeric_limits<long>::max())
             ? std::numeric_limits<long>::max()
             : static_cast<long>(cap);
}

Vector LinfUpdateFactors(const Vector& x, double target, double eps) {
  if (!(target > 0.0)) throw InvalidArgument("target must be positive");
  const double threshold = (1.0 + eps) * target;
  Vector alpha(x.size());
  for (Index i = 0; i < x.size(); ++i) {
    alpha[i] = std::abs(x[i]) < threshold ? 1.0
                                           : (x[i] * x[i]) / (target * target);
  }
  return alpha;
}

LinfResult LinfDecide(const Matrix& a, const Vector& b,
                      const LinfConfig& config) {
  config.Validate();
  CheckSystem(a, b);
  CheckFinite(a, "constraint matrix");
  CheckFinite(b, "right-hand side");

  const Index m = a.cols();
  const double eps = config.eps;
  const double target = config.target;
  LinfResult result;

  if (b.isZero(0.0)) {
    result.outcome = LinfFeasible{Vector::Zero(m), 0.0};
    return result;
  }

  const double rho =
      config.averaging_threshold.value_or(std::cbrt(static_cast<double>(m)));
  const double budget = config.resistance_budget.value_or(1.0 / eps);
  const long max_iterations =
      config.max_iterations.value_or(DefaultMaxIterations(m, eps));
  if (config.warm_start && config.warm_start->size() != m) {
    throw DimensionMismatch("warm start has the wrong length");
  }

  Vector r = config.warm_start
                 ? config.warm_start->Normalized().values()
                 : WeightVector::Uniform(m, WeightRole::kResistances).values();
  ElectricalSolution solution =
      SolveWithResistances(a, b, r, config.linalg);

  Vector running_sum = Vector::Zero(m);
  long averaged_count = 0;
  const double feasible_bound = (1.0 + eps) * target;

  for (long t = 0; r.sum() <= budget; ++t) {
    if (t >= max_iterations) {
      throw IterationCapExceeded("linf solver exceeded " +
                                 std::to_string(max_iterations) +
                                 " iterations");
    }
    IterationRecord record;
    record.iteration = static_cast<int>(t);
    record.weight_l1 = r.sum();
    record.energy = solution.energy;

    const Vector& x = solution.flow;
    if (x.lpNorm<Eigen::Infinity>() <= rho * target) {
      ++averaged_count;
      running_sum += x;
      record.averaged = true;
      const double average_norm = running_sum.lpNorm<Eigen::Infinity>() /
                                  static_cast<double>(averaged_count);
      if (average_norm <= feasible_bound) {
        result.trace.records.push_back(record);
        result.outcome = LinfFeasible{
            running_sum / static_cast<double>(averaged_count), average_norm};
        return result;
      }
    }

    const Vector alpha = LinfUpdateFactors(x, target, eps);
    record.num_increased = static_cast<int>((alpha.array() > 1.0).count());
    record.max_alpha = alpha.maxCoeff();
    if (record.num_increased == 0) {
      result.trace.records.push_back(record);
      result.outcome = LinfFeasible{x, x.lpNorm<Eigen::Infinity>()};
      return result;
    }

    Vector r_next;
    ElectricalSolution next;
    if (config.step_mode == StepMode::kLong) {
      internal::LongStep step = LinfLongStep(r, x, alpha, target, budget, a, b,
                                             config.linalg);
      record.step_doublings = step.doublings;
      r_next = std::move(step.weights);
      next = step.solution ? std::move(*step.solution)
                           : SolveWithResistances(a, b, r_next, config.linalg);
    } else {
      r_next = r.cwiseProduct(alpha);
      next = SolveWithResistances(a, b, r_next, config.linalg);
    }

    const double added = (r_next - r).sum();
    record.invariant_ratio =
        EnergyDifference(r, x, r_next, next.flow) / added;
    record.invariant_ratio_by_difference =
        (next.energy - solution.energy) / added;
    result.trace.records.push_back(record);

    r = std::move(r_next);
    solution = std::move(next);
  }

  const double l1 = r.sum();
  result.outcome = LinfInfeasible{WeightVector::Resistances(r / l1),
                                  solution.energy / l1};
  return result;
}

bool VerifyLinfCertificate(const Matrix& a, const Vector& b,
                           const WeightVector& r_simplex, double target,
                           double eps, const LinalgOptions& options) {
  const double energy = ElectricalEnergy(a, b, r_simplex, options);
  const double bound = (1.0 - eps) * target;
  return energy >= bound * bound;
}

WeightVector LongStepUpdate(const WeightVector& resistances, const Vector& flow,
                            double target, double eps, const Matrix& a,
                            const Vector& b, const LinalgOptions& options) {
  CheckSystem(a, b);
  const Vector r = resistances.AsResistances();
  const Vector alpha = LinfUpdateFactors(flow, target, eps);
  internal::LongStep step =
      LinfLongStep(r, flow, alpha, target,
                   std::numeric_limits<double>::infinity(), a, b, options);
  return WeightVector::Resistances(std::move(step.weights));
}

}  // namespace irls
