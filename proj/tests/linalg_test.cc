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

#include "irls/linalg.h"

#include <limits>

#include "gtest/gtest.h"
#include "irls/errors.h"
#include "test_util.h"

namespace irls {
namespace {

Matrix M(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(static_cast<Index>(rows.size()),
           static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Vector V(std::initializer_list<double> values) {
  Vector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

LinalgOptions WithBackend(PseudoSolveBackend backend) {
  LinalgOptions options;
  options.backend = backend;
  return options;
}

TEST(WeightVectorTest, RejectsNonPositiveOrNonFinite) {
  EXPECT_THROW(WeightVector::Resistances(V({1.0, 0.0})), InvalidArgument);
  EXPECT_THROW(WeightVector::Conductances(V({-1.0})), InvalidArgument);
  EXPECT_THROW(
      WeightVector::Resistances(V({std::numeric_limits<double>::infinity()})),
      InvalidArgument);
  EXPECT_THROW(WeightVector::Resistances(Vector()), InvalidArgument);
}

TEST(WeightVectorTest, UniformNormalizedAndRoles) {
  const WeightVector u = WeightVector::Uniform(4, WeightRole::kResistances);
  EXPECT_DOUBLE_EQ(u.L1Norm(), 1.0);
  EXPECT_DOUBLE_EQ(u[2], 0.25);

  const WeightVector r = WeightVector::Resistances(V({1.0, 3.0}));
  EXPECT_DOUBLE_EQ(r.Normalized()[1], 0.75);
  EXPECT_DOUBLE_EQ(r.Scaled(2.0)[0], 2.0);
  EXPECT_DOUBLE_EQ(r.AsConductances()[1], 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.Multiplied(V({4.0, 1.0}))[0], 4.0);
  EXPECT_EQ(r.Multiplied(V({4.0, 1.0})).role(), WeightRole::kResistances);
  EXPECT_THROW(r.Multiplied(V({1.0})), DimensionMismatch);
}

TEST(GramTest, Examples) {
  EXPECT_TRUE(Gram(M({{1, 1}}), V({1, 1})).isApprox(M({{2}})));
  EXPECT_TRUE(Gram(M({{1, 0}, {0, 1}}), V({2, 3})).isApprox(M({{2, 0}, {0, 3}})));
  EXPECT_TRUE(Gram(M({{1, -1}}), V({1, 1})).isApprox(M({{2}})));
}

TEST(GramTest, MatchesExplicitProductAndIsSymmetric) {
  Pcg32 rng(3, 1);
  const Matrix a = Matrix::NullaryExpr(5, 9, [&] { return rng.Normal(); });
  const Vector w = testing::RandomPositive(rng, 9);
  const Matrix g = Gram(a, w);
  EXPECT_TRUE(g.isApprox(a * w.asDiagonal() * a.transpose(), 1e-12));
  EXPECT_EQ(g, g.transpose());
}

TEST(GramTest, DimensionMismatch) {
  EXPECT_THROW(Gram(M({{1, 1}}), V({1})), DimensionMismatch);
}

class PseudoSolveTest : public ::testing::TestWithParam<PseudoSolveBackend> {};

TEST_P(PseudoSolveTest, Examples) {
  const LinalgOptions options = WithBackend(GetParam());
  EXPECT_TRUE(PseudoSolve(M({{2}}), V({1}), options).isApprox(V({0.5})));
  const Matrix laplacian = M({{1, -1}, {-1, 1}});
  EXPECT_TRUE(
      PseudoSolve(laplacian, V({1, -1}), options).isApprox(V({0.5, -0.5}), 1e-9));
  EXPECT_THROW(PseudoSolve(laplacian, V({1, 1}), options), RangeError);
}

TEST_P(PseudoSolveTest, ReproducesRangeVectors) {
  const LinalgOptions options = WithBackend(GetParam());
  Pcg32 rng(11, 2);
  for (int trial = 0; trial < 20; ++trial) {
    // Rank-deficient PSD matrix: B·Bᵀ with B of size 6×4.
    const Matrix b = Matrix::NullaryExpr(6, 4, [&] { return rng.Normal(); });
    const Matrix l = b * b.transpose();
    const Vector rhs = l * testing::RandomNormal(rng, 6);
    const Vector phi = PseudoSolve(l, rhs, options);
    EXPECT_LE((l * phi - rhs).norm(), 1e-8 * rhs.norm());
  }
}

TEST_P(PseudoSolveTest, ZeroRightHandSide) {
  const Vector phi =
      PseudoSolve(M({{1, -1}, {-1, 1}}), Vector::Zero(2), WithBackend(GetParam()));
  EXPECT_TRUE(phi.isZero());
}

INSTANTIATE_TEST_SUITE_P(Backends, PseudoSolveTest,
                         ::testing::Values(PseudoSolveBackend::kDirect,
                                           PseudoSolveBackend::kConjugateGradient,
                                           PseudoSolveBackend::kAuto));

TEST(PseudoSolveTest, DirectReturnsMinimumNormSolution) {
  const Vector phi = PseudoSolve(M({{1, -1}, {-1, 1}}), V({2, -2}));
  EXPECT_NEAR(phi.sum(), 0.0, 1e-12);
}

TEST(PseudoSolveTest, ConjugateGradientIterationCap) {
  Pcg32 rng(5, 0);
  const Matrix b = Matrix::NullaryExpr(40, 40, [&] { return rng.Normal(); });
  Matrix l = b * b.transpose();
  l.diagonal().array() += 1e-6;
  LinalgOptions options = WithBackend(PseudoSolveBackend::kConjugateGradient);
  options.cg_iteration_factor = 0;
  EXPECT_THROW(PseudoSolve(l, testing::RandomNormal(rng, 40), options),
               NonConvergence);
}

TEST(PseudoSolveTest, RejectsNonSquare) {
  EXPECT_THROW(PseudoSolve(Matrix::Ones(2, 3), V({1, 1})), DimensionMismatch);
}

TEST(WeightedLeastSquaresTest, Examples) {
  const Matrix a = M({{1, 1}});
  ElectricalSolution s =
      WeightedLeastSquares(a, V({1}), WeightVector::Resistances(V({1, 1})));
  EXPECT_TRUE(s.flow.isApprox(V({0.5, 0.5})));
  EXPECT_NEAR(s.energy, 0.5, 1e-14);

  s = WeightedLeastSquares(a, V({1}), WeightVector::Resistances(V({1, 3})));
  EXPECT_TRUE(s.flow.isApprox(V({0.75, 0.25})));
  EXPECT_NEAR(s.energy, 0.75, 1e-14);

  for (const Vector& r : {V({1, 1}), V({0.1, 7})}) {
    s = WeightedLeastSquares(Matrix::Identity(2, 2), V({3, 4}),
                             WeightVector::Resistances(r));
    EXPECT_TRUE(s.flow.isApprox(V({3, 4})));
  }
}

TEST(WeightedLeastSquaresTest, AcceptsConductances) {
  const ElectricalSolution s = WeightedLeastSquares(
      M({{1, 1}}), V({1}), WeightVector::Conductances(V({1, 1.0 / 3.0})));
  EXPECT_TRUE(s.flow.isApprox(V({0.75, 0.25})));
}

TEST(WeightedLeastSquaresTest, ScaleInvariantFlowAndLinearEnergy) {
  Pcg32 rng(8, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const RegressionInstance inst = RandomGaussianInstance(4, 9, 8, trial);
    const WeightVector r =
        WeightVector::Resistances(testing::RandomPositive(rng, 9));
    const ElectricalSolution base = WeightedLeastSquares(inst.a, inst.b, r);
    const double gamma = 0.01 + 50.0 * rng.Uniform01();
    const ElectricalSolution scaled =
        WeightedLeastSquares(inst.a, inst.b, r.Scaled(gamma));
    EXPECT_LE((scaled.flow - base.flow).norm(), 1e-10 * base.flow.norm());
    EXPECT_LT(testing::RelativeError(scaled.energy, gamma * base.energy), 1e-10);
  }
}

TEST(WeightedLeastSquaresTest, FeasibleAndOptimalityConditions) {
  Pcg32 rng(21, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const RegressionInstance inst = RandomGaussianInstance(3, 7, 21, trial);
    const Vector r = testing::RandomPositive(rng, 7);
    const ElectricalSolution s =
        WeightedLeastSquares(inst.a, inst.b, WeightVector::Resistances(r));
    EXPECT_LE((inst.a * s.flow - inst.b).norm(), 1e-10 * inst.b.norm());
    // x = diag(1/r)·Aᵀφ.
    const Vector coupled = (inst.a.transpose() * s.potentials).cwiseQuotient(r);
    EXPECT_LE((coupled - s.flow).norm(), 1e-10 * s.flow.norm());
  }
}

TEST(WeightedLeastSquaresTest, RankDeficientSystem) {
  // Duplicate rows: A has rank 1.
  const Matrix a = M({{1, 2, 3}, {1, 2, 3}});
  const ElectricalSolution s = WeightedLeastSquares(
      a, V({2, 2}), WeightVector::Uniform(3, WeightRole::kResistances));
  EXPECT_LE((a * s.flow - V({2, 2})).norm(), 1e-10);
}

TEST(WeightedLeastSquaresTest, RejectsOutOfSpan) {
  EXPECT_THROW(WeightedLeastSquares(M({{1, 2}, {2, 4}}), V({1, 0}),
                                    WeightVector::Uniform(2, WeightRole::kResistances)),
               RangeError);
}

TEST(CheckSystemTest, DimensionsAndFiniteness) {
  EXPECT_THROW(CheckSystem(M({{1, 1}}), V({1, 2})), DimensionMismatch);
  EXPECT_NO_THROW(CheckSystem(M({{1, 1}}), V({1})));
  EXPECT_THROW(CheckFinite(V({1, std::nan("")}), "v"), InvalidArgument);
}

}  // namespace
}  // namespace irls
