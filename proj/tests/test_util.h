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

// Shared fixtures for the test binaries: small seeded instance suites and
// tolerance helpers.

#ifndef IRLS_TESTS_TEST_UTIL_H_
#define IRLS_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "irls/instances.h"
#include "irls/linalg.h"
#include "irls/lp_oracle.h"
#include "irls/rng.h"

namespace irls::testing {

// A small Gaussian instance together with its exact optima.
struct OracleCase {
  RegressionInstance instance;
  double linf_opt = 0.0;
  double l1_opt = 0.0;
};

// `count` instances with m in [2, 8] and n in [1, min(4, m)], b = A·z.
inline std::vector<OracleCase> OracleSuite(int count, std::uint64_t seed) {
  std::vector<OracleCase> suite;
  suite.reserve(static_cast<std::size_t>(count));
  Pcg32 shape(seed, /*stream=*/99);
  for (int i = 0; i < count; ++i) {
    const Index m = 2 + static_cast<Index>(shape.Bounded(7));
    const Index n =
        1 + static_cast<Index>(shape.Bounded(static_cast<std::uint32_t>(
                std::min<Index>(4, m))));
    OracleCase c;
    c.instance = RandomGaussianInstance(n, m, seed, static_cast<std::uint64_t>(i));
    c.linf_opt = LpOracle(c.instance.a, c.instance.b, Norm::kLinf);
    c.l1_opt = LpOracle(c.instance.a, c.instance.b, Norm::kL1);
    suite.push_back(std::move(c));
  }
  return suite;
}

// Positive weights in [0.1, 10), log-uniform.
inline Vector RandomPositive(Pcg32& rng, Index size) {
  Vector v(size);
  for (Index i = 0; i < size; ++i) {
    v[i] = std::exp(std::log(0.1) + rng.Uniform01() * std::log(100.0));
  }
  return v;
}

inline Vector RandomNormal(Pcg32& rng, Index size) {
  Vector v(size);
  for (Index i = 0; i < size; ++i) v[i] = rng.Normal();
  return v;
}

inline double RelativeError(double actual, double expected) {
  return std::abs(actual - expected) /
         std::max(std::abs(expected), 1e-300);
}

}  // namespace irls::testing

#endif  // IRLS_TESTS_TEST_UTIL_H_
