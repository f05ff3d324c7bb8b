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

#include "irls/electrical.h"

#include <string>

#include "irls/errors.h"

namespace irls {
namespace {

void CheckSameLength(Index expected, Index actual, const char* what) {
  if (expected != actual) {
    throw DimensionMismatch(std::string(what) + " has length " +
                            std::to_string(actual) + ", expected " +
                            std::to_string(expected));
  }
}

void CheckMonotone(const Vector& old_values, const Vector& new_values) {
  for (Index i = 0; i < old_values.size(); ++i) {
    if (new_values[i] < old_values[i]) {
      throw NonMonotone("weight " + std::to_string(i) + " decreased");
    }
  }
}

}  // namespace

double EnergyOfFlow(const WeightVector& resistances, const Vector& flow) {
  CheckSameLength(resistances.size(), flow.size(), "flow");
  return resistances.AsResistances().dot(flow.cwiseAbs2());
}

double ElectricalEnergy(const Matrix& a, const Vector& b,
                        const WeightVector& resistances,
                        const LinalgOptions& options) {
  return WeightedLeastSquares(a, b, resistances, options).energy;
}

double DualEnergyValue(const Matrix& a, const Vector& b,
                       const WeightVector& resistances, const Vector& phi) {
  CheckSystem(a, b);
  CheckSameLength(a.cols(), resistances.size(), "resistances");
  CheckSameLength(a.rows(), phi.size(), "potentials");
  const Vector tension = a.transpose() * phi;
  return 2.0 * b.dot(phi) -
         tension.cwiseAbs2().cwiseProduct(resistances.AsConductances()).sum();
}

double InverseFormValue(const Matrix& a, const Vector& b,
                        const WeightVector& resistances, const Vector& phi) {
  CheckSystem(a, b);
  CheckSameLength(a.cols(), resistances.size(), "resistances");
  CheckSameLength(a.rows(), phi.size(), "potentials");
  const double scale = b.dot(phi);
  if (scale == 0.0) throw InvalidArgument("potentials satisfy bᵀφ = 0");
  const Vector tension = a.transpose() * (phi / scale);
  return tension.cwiseAbs2().cwiseProduct(resistances.AsConductances()).sum();
}

PerturbationBound EnergyIncreaseLowerBound(const WeightVector& resistances,
                                           const WeightVector& new_resistances,
                                           const Vector& flow) {
  CheckSameLength(resistances.size(), new_resistances.size(),
                  "new resistances");
  CheckSameLength(resistances.size(), flow.size(), "flow");
  const Vector r = resistances.AsResistances();
  const Vector r_new = new_resistances.AsResistances();
  CheckMonotone(r, r_new);

  const Vector contribution = r.cwiseProduct(flow.cwiseAbs2());
  PerturbationBound bound;
  bound.old_value = contribution.sum();
  bound.lower_bound =
      bound.old_value +
      contribution
          .cwiseProduct((Vector::Ones(r.size()) - r.cwiseQuotient(r_new)))
          .sum();
  return bound;
}

PerturbationBound InverseEnergyIncreaseLowerBound(
    const Matrix& a, const WeightVector& conductances,
    const WeightVector& new_conductances, const Vector& phi, double energy) {
  CheckSameLength(a.cols(), conductances.size(), "conductances");
  CheckSameLength(a.cols(), new_conductances.size(), "new conductances");
  CheckSameLength(a.rows(), phi.size(), "potentials");
  if (!(energy > 0.0)) throw InvalidArgument("energy must be positive");
  const Vector c = conductances.AsConductances();
  const Vector c_new = new_conductances.AsConductances();
  CheckMonotone(c, c_new);

  const Vector tension = a.transpose() * phi;
  const double gain =
      c.cwiseProduct(tension.cwiseAbs2())
          .cwiseProduct(Vector::Ones(c.size()) - c.cwiseQuotient(c_new))
          .sum();
  PerturbationBound bound;
  bound.old_value = 1.0 / energy;
  bound.lower_bound = bound.old_value + gain / (energy * energy);
  return bound;
}

double EnergyDifference(const Vector& resistances, const Vector& flow,
                        const Vector& new_resistances, const Vector& new_flow) {
  CheckSameLength(resistances.size(), flow.size(), "flow");
  CheckSameLength(resistances.size(), new_resistances.size(),
                  "new resistances");
  CheckSameLength(resistances.size(), new_flow.size(), "new flow");
  return (new_resistances - resistances)
      .cwiseProduct(flow)
      .cwiseProduct(new_flow)
      .sum();
}

}  // namespace irls
