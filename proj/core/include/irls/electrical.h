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

// Electrical-energy quantities. With resistances r on the columns of A the
// electrical energy of a demand b is
//
//   E_r(b) = min { ⟨r, x²⟩ : A·x = b } = bᵀ(A·diag(1/r)·Aᵀ)⁺b
//          = max_φ 2·bᵀφ − Σᵢ (Aᵀφ)ᵢ² / rᵢ
//          = 1 / min { Σᵢ (Aᵀφ)ᵢ² / rᵢ : bᵀφ = 1 }.
//
// The perturbation bounds below lower-bound the energy (or inverse energy)
// after weights increase, using only the solution for the old weights.

#ifndef IRLS_ELECTRICAL_H_
#define IRLS_ELECTRICAL_H_

#include "irls/linalg.h"

namespace irls {

// ⟨r, x²⟩.
double EnergyOfFlow(const WeightVector& resistances, const Vector& flow);

// bᵀ(A·diag(1/r)·Aᵀ)⁺b.
double ElectricalEnergy(const Matrix& a, const Vector& b,
                        const WeightVector& resistances,
                        const LinalgOptions& options = {});

// 2·bᵀφ − Σᵢ (Aᵀφ)ᵢ² / rᵢ. Never exceeds ElectricalEnergy; equal at the
// optimal potentials.
double DualEnergyValue(const Matrix& a, const Vector& b,
                       const WeightVector& resistances, const Vector& phi);

// Σᵢ (Aᵀψ)ᵢ² / rᵢ at ψ = φ / bᵀφ, the objective of the inverse-energy
// characterization. Its reciprocal never exceeds ElectricalEnergy.
// Requires bᵀφ != 0.
double InverseFormValue(const Matrix& a, const Vector& b,
                        const WeightVector& resistances, const Vector& phi);

struct PerturbationBound {
  // E_r(b) for the energy bound, 1/E for the inverse-energy bound.
  double old_value = 0.0;
  double lower_bound = 0.0;
};

// E_{r'}(b) >= ⟨r, x²⟩ + Σᵢ rᵢ·xᵢ²·(1 − rᵢ/r'ᵢ), for x the optimal flow for r.
// Throws NonMonotone if some r'ᵢ < rᵢ.
PerturbationBound EnergyIncreaseLowerBound(const WeightVector& resistances,
                                           const WeightVector& new_resistances,
                                           const Vector& flow);

// 1/E_{1/c'}(b) >= 1/E + (1/E²)·Σᵢ cᵢ·(Aᵀφ)ᵢ²·(1 − cᵢ/c'ᵢ), where φ are the
// optimal potentials for conductances c (so that x = c ⊙ Aᵀφ) and
// E = E_{1/c}(b) = bᵀφ. Throws NonMonotone if some c'ᵢ < cᵢ and
// InvalidArgument if energy <= 0.
PerturbationBound InverseEnergyIncreaseLowerBound(
    const Matrix& a, const WeightVector& conductances,
    const WeightVector& new_conductances, const Vector& phi, double energy);

// E_{r'}(b) − E_r(b) from the two optimal flows, via the identity
// E_{r'} − E_r = Σᵢ (r'ᵢ − rᵢ)·xᵢ·x'ᵢ. Unlike subtracting the two energies
// this does not lose precision when the change is small.
double EnergyDifference(const Vector& resistances, const Vector& flow,
                        const Vector& new_resistances, const Vector& new_flow);

}  // namespace irls

#endif  // IRLS_ELECTRICAL_H_
