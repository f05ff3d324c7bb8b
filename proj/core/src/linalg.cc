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

#include <cmath>
#include <string>
#include <utility>

#include "irls/errors.h"

namespace irls {
namespace {

std::string Shape(Index rows, Index cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

Vector DirectPseudoSolve(const Matrix& l, const Vector& b,
                         const LinalgOptions& options) {
  Eigen::LDLT<Matrix> ldlt(l);
  if (ldlt.info() == Eigen::Success) {
    const Vector d = ldlt.vectorD();
    const double max_pivot = d.cwiseAbs().maxCoeff();
    if (max_pivot > 0.0 && d.minCoeff() > options.rank_threshold * max_pivot) {
      return ldlt.solve(b);
    }
  }
  // Singular (or numerically so): fall back to the spectral pseudo-inverse,
  // which zeroes the null-space component and so yields the min-norm φ.
  Eigen::SelfAdjointEigenSolver<Matrix> eig(l);
  if (eig.info() != Eigen::Success) {
    throw NonConvergence("eigendecomposition failed");
  }
  const Vector& lambda = eig.eigenvalues();
  const double cutoff =
      options.rank_threshold * lambda.cwiseAbs().maxCoeff();
  const Vector coeffs = eig.eigenvectors().transpose() * b;
  Vector scaled = Vector::Zero(lambda.size());
  for (Index i = 0; i < lambda.size(); ++i) {
    if (lambda[i] > cutoff) scaled[i] = coeffs[i] / lambda[i];
  }
  return eig.eigenvectors() * scaled;
}

Vector ConjugateGradientPseudoSolve(const Matrix& l, const Vector& b,
                                    const LinalgOptions& options) {
  const Index n = b.size();
  const double b_norm = b.norm();
  const long max_iterations =
      static_cast<long>(options.cg_iteration_factor) * static_cast<long>(n);

  // Starting from zero keeps every iterate inside the Krylov space of b, so
  // when b is in the range of L the limit is the minimum-norm solution.
  Vector x = Vector::Zero(n);
  Vector r = b;
  Vector p = r;
  double rr = r.squaredNorm();
  bool breakdown = false;
  long it = 0;
  for (; it < max_iterations; ++it) {
    if (std::sqrt(rr) <= options.cg_tolerance * b_norm) break;
    const Vector lp = l * p;
    const double curvature = p.dot(lp);
    if (!(curvature > 0.0)) {
      breakdown = true;
      break;
    }
    const double step = rr / curvature;
    x += step * p;
    r -= step * lp;
    const double rr_next = r.squaredNorm();
    p = r + (rr_next / rr) * p;
    rr = rr_next;
  }

  const Vector residual = b - l * x;
  if (residual.norm() <= options.range_tolerance * b_norm) return x;
  // A residual that L (nearly) annihilates is a null-space component of b.
  const double annihilated =
      (l * residual).norm() / (l.norm() * residual.norm());
  if (breakdown || annihilated < 1e-6) {
    throw RangeError("right-hand side is not in the range of the matrix");
  }
  throw NonConvergence("conjugate gradient hit its iteration cap (" +
                       std::to_string(it) + " iterations)");
}

}  // namespace

std::string_view NormName(Norm norm) {
  return norm == Norm::kLinf ? "linf" : "l1";
}

WeightVector::WeightVector(Vector values, WeightRole role)
    : values_(std::move(values)), role_(role) {
  if (values_.size() == 0) throw InvalidArgument("empty weight vector");
  for (Index i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || !(values_[i] > 0.0)) {
      throw InvalidArgument("weight " + std::to_string(i) +
                            " is not a positive finite number");
    }
  }
}

WeightVector WeightVector::Resistances(Vector values) {
  return WeightVector(std::move(values), WeightRole::kResistances);
}

WeightVector WeightVector::Conductances(Vector values) {
  return WeightVector(std::move(values), WeightRole::kConductances);
}

WeightVector WeightVector::Uniform(Index m, WeightRole role) {
  if (m < 1) throw InvalidArgument("weight vector length must be positive");
  return WeightVector(Vector::Constant(m, 1.0 / static_cast<double>(m)), role);
}

WeightVector WeightVector::Normalized() const {
  return WeightVector(values_ / L1Norm(), role_);
}

WeightVector WeightVector::Scaled(double gamma) const {
  return WeightVector(values_ * gamma, role_);
}

WeightVector WeightVector::Multiplied(const Vector& factors) const {
  if (factors.size() != values_.size()) {
    throw DimensionMismatch("factor vector has wrong length");
  }
  return WeightVector(values_.cwiseProduct(factors), role_);
}

Vector WeightVector::AsResistances() const {
  return role_ == WeightRole::kResistances ? values_ : values_.cwiseInverse();
}

Vector WeightVector::AsConductances() const {
  return role_ == WeightRole::kConductances ? values_ : values_.cwiseInverse();
}

void CheckFinite(const Matrix& matrix, std::string_view what) {
  if (!matrix.allFinite()) {
    throw InvalidArgument(std::string(what) + " has non-finite entries");
  }
}

void CheckFinite(const Vector& vector, std::string_view what) {
  if (!vector.allFinite()) {
    throw InvalidArgument(std::string(what) + " has non-finite entries");
  }
}

void CheckSystem(const Matrix& a, const Vector& b) {
  if (a.rows() < 1 || a.cols() < 1) {
    throw InvalidArgument("constraint matrix must be at least 1x1, got " +
                          Shape(a.rows(), a.cols()));
  }
  if (b.size() != a.rows()) {
    throw DimensionMismatch("matrix is " + Shape(a.rows(), a.cols()) +
                            " but right-hand side has length " +
                            std::to_string(b.size()));
  }
}

Matrix Gram(const Matrix& a, const Vector& w) {
  if (w.size() != a.cols()) {
    throw DimensionMismatch("weights have length " + std::to_string(w.size()) +
                            " for a matrix with " + std::to_string(a.cols()) +
                            " columns");
  }
  const Matrix scaled = a * w.cwiseSqrt().asDiagonal();
  Matrix l = Matrix::Zero(a.rows(), a.rows());
  l.selfadjointView<Eigen::Lower>().rankUpdate(scaled);
  return l.selfadjointView<Eigen::Lower>();
}

Matrix Gram(const Matrix& a, const WeightVector& w) {
  return Gram(a, w.values());
}

Vector PseudoSolve(const Matrix& l, const Vector& b,
                   const LinalgOptions& options) {
  if (l.rows() != l.cols()) {
    throw DimensionMismatch("pseudo-solve needs a square matrix, got " +
                            Shape(l.rows(), l.cols()));
  }
  if (b.size() != l.rows()) {
    throw DimensionMismatch("right-hand side length does not match matrix");
  }
  const double b_norm = b.norm();
  if (b_norm == 0.0) return Vector::Zero(b.size());

  const bool direct =
      options.backend == PseudoSolveBackend::kDirect ||
      (options.backend == PseudoSolveBackend::kAuto &&
       l.rows() <= options.direct_max_dim);
  if (!direct) return ConjugateGradientPseudoSolve(l, b, options);

  Vector phi = DirectPseudoSolve(l, b, options);
  if ((l * phi - b).norm() > options.range_tolerance * b_norm) {
    throw RangeError("right-hand side is not in the range of the matrix");
  }
  return phi;
}

ElectricalSolution SolveWithConductances(const Matrix& a, const Vector& b,
                                         const Vector& conductances,
                                         const LinalgOptions& options) {
  CheckSystem(a, b);
  ElectricalSolution solution;
  solution.potentials = PseudoSolve(Gram(a, conductances), b, options);
  solution.flow = conductances.cwiseProduct(a.transpose() * solution.potentials);
  solution.energy = b.dot(solution.potentials);
  return solution;
}

ElectricalSolution WeightedLeastSquares(const Matrix& a, const Vector& b,
                                        const WeightVector& weights,
                                        const LinalgOptions& options) {
  return SolveWithConductances(a, b, weights.AsConductances(), options);
}

}  // namespace irls
