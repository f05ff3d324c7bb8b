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

// Dense linear algebra used by every solver iteration: weight vectors, the
// weighted Gram matrix A·diag(w)·Aᵀ, the pseudo-inverse solve L·φ = b and
// the weighted least-squares (electrical flow) primitive built on top of it.

#ifndef IRLS_LINALG_H_
#define IRLS_LINALG_H_

#include <Eigen/Dense>

#include <string_view>

namespace irls {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class Norm { kLinf, kL1 };

std::string_view NormName(Norm norm);

// Whether the entries of a WeightVector are read as resistances r or as
// conductances c = 1/r.
enum class WeightRole { kResistances, kConductances };

// Strictly positive, finite per-column weights. Immutable after
// construction; every transformation returns a new vector.
class WeightVector {
 public:
  static WeightVector Resistances(Vector values);
  static WeightVector Conductances(Vector values);
  // All entries equal to 1/m.
  static WeightVector Uniform(Index m, WeightRole role);

  WeightRole role() const { return role_; }
  const Vector& values() const { return values_; }
  Index size() const { return values_.size(); }
  double operator[](Index i) const { return values_[i]; }

  double L1Norm() const { return values_.sum(); }
  // The same weights scaled onto the simplex (entries sum to one).
  WeightVector Normalized() const;
  WeightVector Scaled(double gamma) const;
  // Coordinate-wise product with `factors` (all >= 1 in the solvers).
  WeightVector Multiplied(const Vector& factors) const;

  Vector AsResistances() const;
  Vector AsConductances() const;

 private:
  WeightVector(Vector values, WeightRole role);

  Vector values_;
  WeightRole role_;
};

// The energy-minimizing flow x for resistances r together with the
// potentials φ that induce it: x = diag(1/r)·Aᵀφ and energy = bᵀφ = ⟨r, x²⟩.
struct ElectricalSolution {
  Vector flow;
  Vector potentials;
  double energy = 0.0;
};

enum class PseudoSolveBackend {
  // Direct for dimensions up to `direct_max_dim`, conjugate gradient above.
  kAuto,
  // Pivoted LDLᵀ when numerically nonsingular, eigendecomposition otherwise.
  kDirect,
  kConjugateGradient,
};

struct LinalgOptions {
  PseudoSolveBackend backend = PseudoSolveBackend::kAuto;
  Index direct_max_dim = 2000;
  // Eigenvalues (or LDLᵀ pivots) below rank_threshold·max are treated as 0.
  double rank_threshold = 1e-12;
  // ‖Lφ − b‖ above range_tolerance·‖b‖ after a solve raises RangeError.
  double range_tolerance = 1e-8;
  double cg_tolerance = 1e-10;
  // Conjugate gradient stops after cg_iteration_factor·n iterations.
  int cg_iteration_factor = 20;
};

// Throws InvalidArgument if any entry is NaN or infinite.
void CheckFinite(const Matrix& matrix, std::string_view what);
void CheckFinite(const Vector& vector, std::string_view what);

// A·diag(w)·Aᵀ. Throws DimensionMismatch when w.size() != A.cols().
Matrix Gram(const Matrix& a, const Vector& w);
Matrix Gram(const Matrix& a, const WeightVector& w);

// Minimum-norm solution of L·φ = b for symmetric positive semidefinite L.
// Throws RangeError when b is not in the range of L and NonConvergence when
// the iterative backend runs out of iterations.
Vector PseudoSolve(const Matrix& l, const Vector& b,
                   const LinalgOptions& options = {});

// argmin ⟨r, x²⟩ subject to A·x = b. `weights` may carry either role; it is
// converted to conductances internally.
ElectricalSolution WeightedLeastSquares(const Matrix& a, const Vector& b,
                                        const WeightVector& weights,
                                        const LinalgOptions& options = {});

// Same as WeightedLeastSquares with raw conductances c (x = c ⊙ Aᵀφ).
ElectricalSolution SolveWithConductances(const Matrix& a, const Vector& b,
                                         const Vector& conductances,
                                         const LinalgOptions& options = {});

// Throws DimensionMismatch unless a is n×m with b of length n.
void CheckSystem(const Matrix& a, const Vector& b);

}  // namespace irls

#endif  // IRLS_LINALG_H_
