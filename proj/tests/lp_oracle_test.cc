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

#include "gtest/gtest.h"
#include "irls/errors.h"
#include "irls/instances.h"
#include "test_util.h"

namespace irls {
namespace {

// Projected subgradient descent for min ‖x‖_p on {x : A·x = b}, keeping
// the best iterate. Independent of the basic-solution enumeration.
double ProjectedSubgradient(const Matrix& a, const Vector& b, Norm norm,
                            int iterations) {
  const Matrix pinv = a.completeOrthogonalDecomposition().pseudoInverse();
  const Matrix projector = Matrix::Identity(a.cols(), a.cols()) - pinv * a;
  Vector x = pinv * b;
  auto value = [&](const Vector& v) {
    return norm == Norm::kLinf ? v.lpNorm<Eigen::Infinity>() : v.lpNorm<1>();
  };
  double best = value(x);
  const double scale = x.norm();
  for (int t = 0; t < iterations; ++t) {
    Vector g = Vector::Zero(x.size());
    if (norm == Norm::kLinf) {
      Index i = 0;
      x.cwiseAbs().maxCoeff(&i);
      g[i] = x[i] >= 0 ? 1.0 : -1.0;
    } else {
      g = x.array().sign().matrix();
    }
    const Vector direction = projector * g;
    const double length = direction.norm();
    if (length == 0.0) break;
    x -= (scale / std::sqrt(t + 1.0)) * direction / length;
    best = std::min(best, value(x));
  }
  return best;
}

TEST(LpOracleTest, TwoVariableExamples) {
  const Matrix a = Matrix::Ones(1, 2);
  const Vector b = Vector::Ones(1);
  EXPECT_NEAR(LpOracle(a, b, Norm::kLinf), 0.5, 1e-12);
  EXPECT_NEAR(LpOracle(a, b, Norm::kL1), 1.0, 1e-12);
}

TEST(LpOracleTest, PathGraphHasUniqueFlow) {
  const Matrix a = IncidenceMatrix(PathGraph(3));
  const Vector b = (Vector(3) << 1, 0, -1).finished();
  const LpOptimum linf = LpOracleSolve(a, b, Norm::kLinf);
  EXPECT_NEAR(linf.value, 1.0, 1e-12);
  EXPECT_TRUE(linf.x.isApprox(Vector::Ones(2)));
  EXPECT_NEAR(LpOracle(a, b, Norm::kL1), 2.0, 1e-12);
}

TEST(LpOracleTest, MinimizerIsFeasibleAndAttainsValue) {
  for (const testing::OracleCase& c : testing::OracleSuite(30, 107)) {
    const auto& inst = c.instance;
    for (Norm norm : {Norm::kLinf, Norm::kL1}) {
      const LpOptimum opt = LpOracleSolve(inst.a, inst.b, norm);
      EXPECT_LE((inst.a * opt.x - inst.b).norm(), 1e-8 * (1 + inst.b.norm()));
      const double attained = norm == Norm::kLinf ? opt.x.lpNorm<Eigen::Infinity>()
                                                  : opt.x.lpNorm<1>();
      EXPECT_NEAR(attained, opt.value, 1e-12 * opt.value);
    }
    EXPECT_GE(c.l1_opt, c.linf_opt * (1 - 1e-12));
  }
}

TEST(LpOracleTest, AgreesWithProjectedSubgradient) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const RegressionInstance inst = RandomGaussianInstance(3, 6, 113, seed);
    for (Norm norm : {Norm::kLinf, Norm::kL1}) {
      const double exact = LpOracle(inst.a, inst.b, norm);
      const double descent = ProjectedSubgradient(inst.a, inst.b, norm, 400000);
      EXPECT_NEAR(descent, exact, 1e-3 * exact) << "seed " << seed;
      EXPECT_GE(descent, exact * (1 - 1e-9));
    }
  }
}

TEST(LpOracleTest, Errors) {
  EXPECT_THROW(LpOracle(Matrix::Ones(1, 13), Vector::Ones(1), Norm::kL1), TooLarge);
  EXPECT_THROW(LpOracle(Matrix::Zero(1, 3), Vector::Ones(1), Norm::kLinf), Infeasible);
  Matrix rank_one(2, 2);
  rank_one << 1, 2, 2, 4;
  EXPECT_THROW(LpOracle(rank_one, (Vector(2) << 1, 0).finished(), Norm::kL1),
               Infeasible);
  EXPECT_EQ(LpOracle(Matrix::Ones(2, 3), Vector::Zero(2), Norm::kL1), 0.0);
}

}  // namespace
}  // namespace irls
