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

#include <cmath>

#include "gtest/gtest.h"
#include "irls/electrical.h"
#include "irls/errors.h"
#include "test_util.h"

namespace irls {
namespace {

const Matrix kPair = Matrix::Ones(1, 2);
const Vector kUnit = Vector::Ones(1);

LinfConfig Config(double eps, double target,
                  StepMode step = StepMode::kShort) {
  LinfConfig config;
  config.eps = eps;
  config.target = target;
  config.step_mode = step;
  return config;
}

TEST(LinfUpdateFactorsTest, Examples) {
  const Vector alpha =
      LinfUpdateFactors((Vector(3) << 2, 0.5, 1.05).finished(), 1.0, 0.1);
  EXPECT_TRUE(alpha.isApprox((Vector(3) << 4, 1, 1).finished()));
  EXPECT_TRUE(LinfUpdateFactors(Vector::Zero(4), 1.0, 0.1).isOnes());
  EXPECT_NEAR(LinfUpdateFactors(Vector::Constant(1, 1.2), 1.0, 0.1)[0], 1.44,
              1e-14);
}

TEST(LinfUpdateFactorsTest, FactorsAreOneOrAtLeastThresholdSquared) {
  Pcg32 rng(1, 0);
  const double eps = 0.2;
  const Vector alpha = LinfUpdateFactors(3.0 * testing::RandomNormal(rng, 500), 1.0, eps);
  for (Index i = 0; i < alpha.size(); ++i) {
    EXPECT_TRUE(alpha[i] == 1.0 || alpha[i] >= (1 + eps) * (1 + eps));
  }
}

TEST(LinfConfigTest, Validation) {
  EXPECT_THROW(Config(0.0, 1.0).Validate(), InvalidArgument);
  EXPECT_THROW(Config(0.6, 1.0).Validate(), InvalidArgument);
  EXPECT_THROW(Config(0.1, -1.0).Validate(), InvalidArgument);
  LinfConfig config = Config(0.1, 1.0);
  config.averaging_threshold = 0.5;
  EXPECT_THROW(config.Validate(), InvalidArgument);
  config = Config(0.1, 1.0);
  config.resistance_budget = 1.0;
  EXPECT_THROW(config.Validate(), InvalidArgument);
  config = Config(0.1, 1.0);
  config.warm_start = WeightVector::Uniform(2, WeightRole::kConductances);
  EXPECT_THROW(config.Validate(), InvalidArgument);
  EXPECT_NO_THROW(Config(0.5, 1.0).Validate());
}

TEST(LinfDecideTest, TwoVariableFeasible) {
  const LinfResult result = LinfDecide(kPair, kUnit, Config(0.1, 0.6));
  ASSERT_TRUE(result.feasible());
  const auto& feasible = std::get<LinfFeasible>(result.outcome);
  EXPECT_LE(feasible.linf_norm, 0.66);
  EXPECT_NEAR((kPair * feasible.x - kUnit).norm(), 0.0, 1e-12);
}

TEST(LinfDecideTest, TwoVariableInfeasible) {
  const LinfResult result = LinfDecide(kPair, kUnit, Config(0.1, 0.4));
  ASSERT_FALSE(result.feasible());
  const auto& certificate = std::get<LinfInfeasible>(result.outcome);
  EXPECT_NEAR(certificate.r_simplex.L1Norm(), 1.0, 1e-12);
  EXPECT_GE(certificate.energy_lb, 0.9 * 0.9 * 0.4 * 0.4);
  EXPECT_TRUE(VerifyLinfCertificate(kPair, kUnit, certificate.r_simplex, 0.4, 0.1));
}

TEST(LinfDecideTest, ZeroRightHandSide) {
  const LinfResult result = LinfDecide(kPair, Vector::Zero(1), Config(0.1, 0.1));
  ASSERT_TRUE(result.feasible());
  EXPECT_TRUE(std::get<LinfFeasible>(result.outcome).x.isZero());
}

TEST(LinfDecideTest, IterationCap) {
  LinfConfig config = Config(0.01, 0.3);
  config.max_iterations = 1;
  EXPECT_THROW(LinfDecide(kPair, kUnit, config), IterationCapExceeded);
}

TEST(LinfDecideTest, WarmStartOfWrongLength) {
  LinfConfig config = Config(0.1, 0.6);
  config.warm_start = WeightVector::Uniform(3, WeightRole::kResistances);
  EXPECT_THROW(LinfDecide(kPair, kUnit, config), DimensionMismatch);
}

TEST(VerifyLinfCertificateTest, Examples) {
  const WeightVector half = WeightVector::Uniform(2, WeightRole::kResistances);
  EXPECT_TRUE(VerifyLinfCertificate(kPair, kUnit, half, 0.4, 0.1));
  EXPECT_FALSE(VerifyLinfCertificate(kPair, kUnit, half, 0.6, 0.1));
}

TEST(LongStepUpdateTest, AllOnesLeavesWeightsUnchanged) {
  const WeightVector r = WeightVector::Uniform(2, WeightRole::kResistances);
  const WeightVector updated =
      LongStepUpdate(r, Vector::Constant(2, 0.5), 1.0, 0.1, kPair, kUnit);
  EXPECT_EQ(updated.values(), r.values());
}

TEST(LongStepUpdateTest, GuardRatioHoldsOnRandomInstances) {
  Pcg32 rng(41, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const RegressionInstance inst = RandomOrthogonalInstance(5, 20, 3, 41, trial);
    const WeightVector r = WeightVector::Resistances(testing::RandomPositive(rng, 20));
    const ElectricalSolution s = WeightedLeastSquares(inst.a, inst.b, r);
    const double target = 0.5 * s.flow.lpNorm<Eigen::Infinity>();
    const WeightVector updated =
        LongStepUpdate(r, s.flow, target, 0.1, inst.a, inst.b);
    const double added = updated.L1Norm() - r.L1Norm();
    ASSERT_GT(added, 0.0);
    // The short step itself satisfies the guard, so the long step is at
    // least as large coordinate-wise.
    const Vector short_step =
        r.values().cwiseProduct(LinfUpdateFactors(s.flow, target, 0.1));
    EXPECT_TRUE((updated.values().array() >= short_step.array() * (1 - 1e-15)).all());
    const ElectricalSolution next = WeightedLeastSquares(inst.a, inst.b, updated);
    EXPECT_GE(EnergyDifference(r.values(), s.flow, updated.values(), next.flow),
              target * target * added * (1 - 1e-9));
  }
}

// Checks every documented property of a run: invariant ratios, monotone
// weights and energy, and the validity of whichever outcome was returned.
void CheckRun(const RegressionInstance& inst, const LinfConfig& config) {
  const LinfResult result = LinfDecide(inst.a, inst.b, config);
  const double target_sq = config.target * config.target;
  double previous_l1 = 0.0;
  double previous_energy = 0.0;
  for (const IterationRecord& record : result.trace.records) {
    EXPECT_GE(record.weight_l1, previous_l1);
    EXPECT_GE(record.energy, previous_energy * (1 - 1e-10));
    previous_l1 = record.weight_l1;
    previous_energy = record.energy;
    if (!std::isnan(record.invariant_ratio)) {
      EXPECT_GE(record.invariant_ratio, target_sq * (1 - 1e-9));
    }
  }
  if (result.feasible()) {
    const auto& feasible = std::get<LinfFeasible>(result.outcome);
    EXPECT_LE((inst.a * feasible.x - inst.b).norm(), 1e-7 * inst.b.norm());
    EXPECT_LE(feasible.x.lpNorm<Eigen::Infinity>(),
              (1 + config.eps) * config.target * (1 + 1e-9));
  } else {
    const auto& certificate = std::get<LinfInfeasible>(result.outcome);
    EXPECT_NEAR(certificate.r_simplex.L1Norm(), 1.0, 1e-12);
    EXPECT_TRUE(VerifyLinfCertificate(inst.a, inst.b, certificate.r_simplex,
                                      config.target, config.eps));
  }
}

TEST(LinfDecideTest, RunPropertiesAcrossTargets) {
  for (int trial = 0; trial < 12; ++trial) {
    const RegressionInstance inst = RandomOrthogonalInstance(4, 10, 3, 43, trial);
    const double opt = LpOracle(inst.a, inst.b, Norm::kLinf);
    for (double scale : {0.7, 0.95, 1.05, 1.4}) {
      for (StepMode step : {StepMode::kShort, StepMode::kLong}) {
        CheckRun(inst, Config(0.1, scale * opt, step));
      }
    }
  }
}

TEST(LinfDecideTest, DichotomyAgainstExactOptimum) {
  for (const testing::OracleCase& c : testing::OracleSuite(40, 47)) {
    const auto& inst = c.instance;
    EXPECT_FALSE(LinfDecide(inst.a, inst.b, Config(0.05, 0.9 * c.linf_opt)).feasible());
    EXPECT_TRUE(LinfDecide(inst.a, inst.b, Config(0.05, 1.1 * c.linf_opt)).feasible());
  }
}

TEST(LinfDecideTest, IterationCountWithinCountingBound) {
  for (int trial = 0; trial < 5; ++trial) {
    const RegressionInstance inst = RandomOrthogonalInstance(10, 60, 5, 53, trial);
    const double eps = 0.1;
    const double md = 60.0;
    const double rho = std::cbrt(md);
    const double bound =
        10.0 * (rho * std::log(1 / eps) / eps + std::log(md / eps) / (eps * eps) +
                md / (rho * rho) * std::log(1 / eps));
    // The bound holds for every target; pick one below the uniform-weight
    // flow so that the weights actually move.
    const double target =
        0.7 * WeightedLeastSquares(inst.a, inst.b,
                                   WeightVector::Uniform(60, WeightRole::kResistances))
                  .flow.lpNorm<Eigen::Infinity>();
    const LinfResult result = LinfDecide(inst.a, inst.b, Config(eps, target));
    EXPECT_LE(result.trace.iterations(), bound);
  }
}

}  // namespace
}  // namespace irls
