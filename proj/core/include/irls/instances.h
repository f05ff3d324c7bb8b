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

// Problem instances: the random orthonormal-row family used in the
// experiments, Gaussian instances for test suites, and vertex-edge
// incidence matrices of directed graphs.

#ifndef IRLS_INSTANCES_H_
#define IRLS_INSTANCES_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "irls/linalg.h"

namespace irls {

struct RegressionInstance {
  Matrix a;
  Vector b;
  std::optional<Vector> truth;
  std::uint64_t seed = 0;

  Index rows() const { return a.rows(); }
  Index cols() const { return a.cols(); }
};

// A with orthonormal rows (Gaussian draws orthonormalized by QR) and
// b = A·x* for an x* with exactly `sparsity` entries equal to ±1. Draws
// whose Gaussian block has numerical rank below n are discarded and redrawn
// (at most 16 times). Deterministic in (n, m, sparsity, seed, stream).
RegressionInstance RandomOrthogonalInstance(Index n, Index m, Index sparsity,
                                            std::uint64_t seed,
                                            std::uint64_t stream = 0);

// A with independent standard normal entries and b = A·z for standard
// normal z (stored as truth).
RegressionInstance RandomGaussianInstance(Index n, Index m, std::uint64_t seed,
                                          std::uint64_t stream = 0);

// Vertices are 0-based; every edge is an ordered (tail, head) pair.
struct DirectedGraph {
  Index n_vertices = 0;
  std::vector<std::pair<Index, Index>> edges;

  // Throws InvalidArgument on out-of-range endpoints, self-loops, or an
  // empty edge list.
  void Validate() const;
};

// 0 → 1 → ... → n−1.
DirectedGraph PathGraph(Index n_vertices);

// n×m with +1 where edge e leaves v, −1 where it enters v, 0 elsewhere.
Matrix IncidenceMatrix(const DirectedGraph& graph);

}  // namespace irls

#endif  // IRLS_INSTANCES_H_
