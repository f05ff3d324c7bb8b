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

#include "irls/instances.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "irls/errors.h"
#include "irls/rng.h"

namespace irls {
namespace {

constexpr int kMaxRedraws = 16;
constexpr double kRankTolerance = 1e-10;

Matrix GaussianMatrix(Index rows, Index cols, Pcg32& rng) {
  Matrix g(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) g(i, j) = rng.Normal();
  }
  return g;
}

// Orthonormal basis of the row space of `g` (n×m, n <= m) as the rows of
// the result, with signs fixed so that the triangular factor has a positive
// diagonal. Returns false if `g` is numerically rank deficient.
bool OrthonormalRows(const Matrix& g, Matrix& rows) {
  const Index n = g.rows();
  const Index m = g.cols();
  Eigen::HouseholderQR<Matrix> qr(g.transpose());
  const Matrix r = qr.matrixQR().topLeftCorner(n, n);
  const Vector diag = r.diagonal();
  const double largest = diag.cwiseAbs().maxCoeff();
  if (!(largest > 0.0) || diag.cwiseAbs().minCoeff() < kRankTolerance * largest) {
    return false;
  }
  Matrix q = qr.householderQ() * Matrix::Identity(m, n);
  for (Index j = 0; j < n; ++j) {
    if (diag[j] < 0.0) q.col(j) *= -1.0;
  }
  rows = q.transpose();
  return true;
}

}  // namespace

RegressionInstance RandomOrthogonalInstance(Index n, Index m, Index sparsity,
                                            std::uint64_t seed,
                                            std::uint64_t stream) {
  if (n < 1 || m < 1 || n > m) {
    throw InvalidArgument("need 1 <= n <= m, got n=" + std::to_string(n) +
                          " m=" + std::to_string(m));
  }
  if (sparsity < 1 || sparsity > m) {
    throw InvalidArgument("sparsity must lie in [1, m]");
  }
  Pcg32 rng(seed, stream);
  RegressionInstance instance;
  instance.seed = seed;

  bool ok = false;
  for (int attempt = 0; attempt < kMaxRedraws && !ok; ++attempt) {
    ok = OrthonormalRows(GaussianMatrix(n, m, rng), instance.a);
  }
  if (!ok) throw Error("could not draw a full-rank Gaussian block");

  // Partial Fisher–Yates picks the support; one bit per entry picks the sign.
  std::vector<Index> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), Index{0});
  Vector truth = Vector::Zero(m);
  for (Index i = 0; i < sparsity; ++i) {
    const Index j =
        i + static_cast<Index>(rng.Bounded(static_cast<std::uint32_t>(m - i)));
    std::swap(order[i], order[j]);
    truth[order[i]] = (rng.Next() & 1u) ? 1.0 : -1.0;
  }
  instance.b = instance.a * truth;
  instance.truth = std::move(truth);
  return instance;
}

RegressionInstance RandomGaussianInstance(Index n, Index m, std::uint64_t seed,
                                          std::uint64_t stream) {
  if (n < 1 || m < 1) throw InvalidArgument("need n >= 1 and m >= 1");
  Pcg32 rng(seed, stream);
  RegressionInstance instance;
  instance.seed = seed;
  instance.a = GaussianMatrix(n, m, rng);
  Vector z(m);
  for (Index j = 0; j < m; ++j) z[j] = rng.Normal();
  instance.b = instance.a * z;
  instance.truth = std::move(z);
  return instance;
}

void DirectedGraph::Validate() const {
  if (n_vertices < 1) throw InvalidArgument("graph needs at least one vertex");
  if (edges.empty()) throw InvalidArgument("graph needs at least one edge");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [tail, head] = edges[e];
    if (tail < 0 || tail >= n_vertices || head < 0 || head >= n_vertices) {
      throw InvalidArgument("edge " + std::to_string(e) +
                            " has an endpoint outside the vertex range");
    }
    if (tail == head) {
      throw InvalidArgument("edge " + std::to_string(e) + " is a self-loop");
    }
  }
}

DirectedGraph PathGraph(Index n_vertices) {
  DirectedGraph graph;
  graph.n_vertices = n_vertices;
  for (Index v = 0; v + 1 < n_vertices; ++v) graph.edges.emplace_back(v, v + 1);
  return graph;
}

Matrix IncidenceMatrix(const DirectedGraph& graph) {
  graph.Validate();
  Matrix a = Matrix::Zero(graph.n_vertices,
                          static_cast<Index>(graph.edges.size()));
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto col = static_cast<Index>(e);
    a(graph.edges[e].first, col) = 1.0;
    a(graph.edges[e].second, col) = -1.0;
  }
  return a;
}

}  // namespace irls
