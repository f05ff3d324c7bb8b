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

// Seeded random source used for instance generation.
//
// PCG32 (PCG-XSH-RR with 64-bit state and a selectable stream) plus fixed
// transforms for uniform, normal and bounded integer draws. Every transform
// is spelled out here rather than delegated to <random> distributions, whose
// output is implementation-defined, so a given (seed, stream) produces the
// same instance on every platform and in every language port.

#ifndef IRLS_RNG_H_
#define IRLS_RNG_H_

#include <cstdint>
#include <limits>

namespace irls {

class Pcg32 {
 public:
  using result_type = std::uint32_t;

  explicit Pcg32(std::uint64_t seed, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return Next(); }

  std::uint32_t Next();
  // 53-bit uniform in [0, 1) from two draws.
  double Uniform01();
  // Standard normal by Box–Muller (cosine branch only; two uniforms each).
  double Normal();
  // Uniform integer in [0, bound) by rejection; bound must be positive.
  std::uint32_t Bounded(std::uint32_t bound);

 private:
  std::uint64_t state_ = 0;
  std::uint64_t increment_ = 0;
};

}  // namespace irls

#endif  // IRLS_RNG_H_
