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

#include "irls/l1_solver.h"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "irls/electrical.h"
#include "irls/errors.h"
#include "irls/linf_solver.h"
#include "long_step.h"

namespace irls {
namespace {

// Δ(1/E) for conductances c -> c_next, computed without cancellation.
double InverseEnergyGain(const Vector& c, const ElectricalSolution& current,
                         const Vector& c_next, const ElectricalSolution& next) {
  const double energy_drop =
      -EnergyDifference(c.cwiseInverse(), current.flow, c_next.cwiseInverse(),
                        next.flow);
  return energy_drop / (current.energy * next.energy);
}

Vector DualDirection(const Matrix& a, const ElectricalSolution& solution) {
  return a.transpose() * (solution.potentials / solution.energy);
}

internal::LongStep L1LongStep(const Vector& c,
                              const ElectricalSolution& current,
                              const Vector& alpha, double target,
                              double budget, const Matrix& a, const Vector& b,
                              const LinalgOptions& options) {
  const double inv_target_sq = 1.0 / (target * target);
  return internal::DoubleStep(
      c, alpha, budget,
      [&](const Vector& candidate) {
        return SolveWithConductances(a, b, candidate, options);
      },
      [&](const Vector& candidate, const ElectricalSolution& solution) {
        const double added = (candidate - c).sum();
        return InverseEnergyGain(c, current, candidate, solution) >=
               inv_target_sq * added;
      });
}

void CheckPositiveEnergy(double energy) {
  // b != 0 in the span of A and c > 0 force bᵀφ = E > 0.
  if (!(energy > 0.0)) {
    throw InvariantViolation("electrical energy bᵀφ is not positive");
  }
}

}  // namespace

void L1Config::Validate() const {
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
  if (conductance_budget && !(*conductance_budget > 1.0)) {
    throw InvalidArgument("conductance budget must exceed 1");
  }
  if (max_iterations && *max_iterations < 1) {
    throw InvalidArgument("max_iterations must be positive");
  }
  if (warm_start && warm_start->role() != WeightRole::kConductances) {
    throw InvalidArgument("warm start for the l1 solver must be conductances");
  }
}

Vector L1UpdateFactors(const Vector& g, double target, double eps) {
  if (!(target > 0.0)) throw InvalidArgument("target must be positive");
  const double threshold = 1.0 / ((1.0 - eps) * target);
  Vector alpha(g.size());
  for (Index i = 0; i < g.size(); ++i) {
    alpha[i] = std::abs(g[i]) <= threshold ? 1.0
                                            : g[i] * g[i] * target * target;
  }
  return alpha;
}

L1Result L1Decide(const Matrix& a, const Vector& b, const L1Config& config) {
  config.Validate();
  CheckSystem(a, b);
  CheckFinite(a, "constraint matrix");
  CheckFinite(b, "right-hand side");

  const Index m = a.cols();
  const Index n = a.rows();
  const double eps = config.eps;
  const double target = config.target;
  L1Result result;

  if (b.isZero(0.0)) {
    result.outcome = L1Feasible{Vector::Zero(m), 0.0,
                                WeightVector::Uniform(m, WeightRole::kConductances)};
    return result;
  }

  const double rho =
      config.averaging_threshold.value_or(std::cbrt(static_cast<double>(m)));
  const double budget = config.conductance_budget.value_or(
      1.0 + 1.0 / ((1.0 + eps) * (1.0 + eps) - 1.0));
  const long max_iterations =
      config.max_iterations.value_or(DefaultMaxIterations(m, eps));
  if (config.warm_start && config.warm_start->size() != m) {
    throw DimensionMismatch("warm start has the wrong length");
  }

  Vector c = config.warm_start
                 ? config.warm_start->Normalized().values()
                 : WeightVector::Uniform(m, WeightRole::kConductances).values();
  ElectricalSolution solution = SolveWithConductances(a, b, c, config.linalg);

  Vector abs_sum = Vector::Zero(m);
  Vector potential_sum = Vector::Zero(n);
  long averaged_count = 0;
  const double dual_bound = 1.0 / ((1.0 - eps) * target);

  for (long t = 0; c.sum() <= budget; ++t) {
    if (t >= max_iterations) {
      throw IterationCapExceeded("l1 solver exceeded " +
                                 std::to_string(max_iterations) +
                                 " iterations");
    }
    CheckPositiveEnergy(solution.energy);
    IterationRecord record;
    record.iteration = static_cast<int>(t);
    record.weight_l1 = c.sum();
    record.energy = solution.energy;

    const Vector g = DualDirection(a, solution);
    if (g.lpNorm<Eigen::Infinity>() <= rho / target) {
      ++averaged_count;
      abs_sum += g.cwiseAbs();
      potential_sum += solution.potentials / solution.energy;
      record.averaged = true;
      if (abs_sum.maxCoeff() / static_cast<double>(averaged_count) <=
          dual_bound) {
        result.trace.records.push_back(record);
        Vector phi = potential_sum / static_cast<double>(averaged_count);
        const double value = L1DualValue(a, b, phi);
        result.outcome = L1Infeasible{std::move(phi), value};
        return result;
      }
    }

    const Vector alpha = L1UpdateFactors(g, target, eps);
    record.num_increased = static_cast<int>((alpha.array() > 1.0).count());
    record.max_alpha = alpha.maxCoeff();
    if (record.num_increased == 0) {
      // Every |gᵢ| is within the dual bound, so g's potentials φ/bᵀφ are a
      // certificate with the same normalization as the averaged one.
      result.trace.records.push_back(record);
      Vector phi = solution.potentials / solution.energy;
      const double value = L1DualValue(a, b, phi);
      result.outcome = L1Infeasible{std::move(phi), value};
      return result;
    }

    Vector c_next;
    ElectricalSolution next;
    if (config.step_mode == StepMode::kLong) {
      internal::LongStep step = L1LongStep(c, solution, alpha, target, budget,
                                           a, b, config.linalg);
      record.step_doublings = step.doublings;
      c_next = std::move(step.weights);
      next = step.solution
                 ? std::move(*step.solution)
                 : SolveWithConductances(a, b, c_next, config.linalg);
    } else {
      c_next = c.cwiseProduct(alpha);
      next = SolveWithConductances(a, b, c_next, config.linalg);
    }
    CheckPositiveEnergy(next.energy);

    const double added = (c_next - c).sum();
    record.invariant_ratio = InverseEnergyGain(c, solution, c_next, next) / added;
    record.invariant_ratio_by_difference =
        (1.0 / next.energy - 1.0 / solution.energy) / added;
    result.trace.records.push_back(record);

    c = std::move(c_next);
    solution = std::move(next);
  }

  // `solution` belongs to the final conductances, so its flow is exactly
  // diag(c)·Aᵀ·(A·diag(c)·Aᵀ)⁺·b.
  const double l1 = solution.flow.lpNorm<1>();
  result.outcome =
      L1Feasible{solution.flow, l1, WeightVector::Conductances(c / c.sum())};
  return result;
}

Vector ExtractFeasible(const WeightVector& conductances, const Matrix& a,
                       const Vector& b, const LinalgOptions& options) {
  return SolveWithConductances(a, b, conductances.AsConductances(), options)
      .flow;
}

double L1DualValue(const Matrix& a, const Vector& b, const Vector& phi) {
  CheckSystem(a, b);
  if (phi.size() != a.rows()) {
    throw DimensionMismatch("potentials have the wrong length");
  }
  const double numerator = b.dot(phi);
  const double denominator = (a.transpose() * phi).lpNorm<Eigen::Infinity>();
  if (denominator == 0.0) {
    if (numerator != 0.0) {
      throw DegenerateCertificate(
          "Aᵀφ = 0 while bᵀφ != 0: b is outside the column span of A");
    }
    return 0.0;
  }
  return numerator / denominator;
}

bool VerifyL1Dual(const Matrix& a, const Vector& b, const Vector& phi,
                  double target, double eps) {
  return L1DualValue(a, b, phi) >= (1.0 - eps) * target;
}

WeightVector L1LongStepUpdate(const WeightVector& conductances,
                              const Vector& phi, double target, double eps,
                              const Matrix& a, const Vector& b,
                              const LinalgOptions& options) {
  CheckSystem(a, b);
  const Vector c = conductances.AsConductances();
  ElectricalSolution current;
  current.potentials = phi;
  current.flow = c.cwiseProduct(a.transpose() * phi);
  current.energy = b.dot(phi);
  CheckPositiveEnergy(current.energy);
  const Vector alpha = L1UpdateFactors(DualDirection(a, current), target, eps);
  internal::LongStep step =
      L1LongStep(c, current, alpha, target,
                 std::numeric_limits<double>::infinity(), a, b, options);
  return WeightVector::Conductances(std::move(step.weights));
}

}  // namespace irls
