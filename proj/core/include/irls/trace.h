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

#ifndef IRLS_TRACE_H_
#define IRLS_TRACE_H_

#include <limits>
#include <string_view>
#include <vector>

namespace irls {

enum class StepMode { kShort, kLong };

std::string_view StepModeName(StepMode mode);

// Diagnostics for one iteration of a decision solver.
struct IterationRecord {
  static constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

  // Index of the decision call this record belongs to (optimize and phased
  // runs issue several calls).
  int call = 0;
  int iteration = 0;
  // ‖r‖₁ (ℓ∞ solver) or ‖c‖₁ (ℓ1 solver) when the iteration started.
  double weight_l1 = 0.0;
  // Electrical energy of the current weights.
  double energy = 0.0;
  // Certified progress of the update made this iteration:
  // ΔE / Δ‖r‖₁ for ℓ∞ and Δ(1/E) / Δ‖c‖₁ for ℓ1. Unset if no update.
  double invariant_ratio = kUnset;
  // The same ratio from subtracting the two energies directly.
  double invariant_ratio_by_difference = kUnset;
  int num_increased = 0;
  double max_alpha = 1.0;
  bool averaged = false;
  // Long step: how many times the update exponent was doubled.
  int step_doublings = 0;
};

struct IterationTrace {
  std::vector<IterationRecord> records;

  int iterations() const { return static_cast<int>(records.size()); }
  // Appends `other`, relabelling its records with call index `call`.
  void Append(const IterationTrace& other, int call);
};

}  // namespace irls

#endif  // IRLS_TRACE_H_
