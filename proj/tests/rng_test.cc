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

#include "irls/rng.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"

namespace irls {
namespace {

TEST(Pcg32Test, ReferenceOutputs) {
  Pcg32 rng(42, 54);
  EXPECT_EQ(rng.Next(), 0xa15c02b7u);
  EXPECT_EQ(rng.Next(), 0x7b47f409u);
  EXPECT_EQ(rng.Next(), 0xba1d3330u);
}

TEST(Pcg32Test, StreamsDiffer) {
  Pcg32 a(7, 0);
  Pcg32 b(7, 1);
  int equal = 0;
  for (int i = 0; i < 100; ++i) equal += a.Next() == b.Next();
  EXPECT_LT(equal, 3);
}

TEST(Pcg32Test, Uniform01RangeAndMean) {
  Pcg32 rng(1, 0);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.Uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.01);
}

TEST(Pcg32Test, NormalMoments) {
  Pcg32 rng(2, 0);
  double sum = 0.0;
  double sum_sq = 0.0;
  const int draws = 200000;
  for (int i = 0; i < draws; ++i) {
    const double z = rng.Normal();
    ASSERT_TRUE(std::isfinite(z));
    sum += z;
    sum_sq += z * z;
  }
  EXPECT_NEAR(sum / draws, 0.0, 0.01);
  EXPECT_NEAR(sum_sq / draws, 1.0, 0.02);
}

TEST(Pcg32Test, BoundedIsInRangeAndCoversIt) {
  Pcg32 rng(3, 0);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const std::uint32_t v = rng.Bounded(7);
    ASSERT_LT(v, 7u);
    ++counts[v];
  }
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
  EXPECT_EQ(rng.Bounded(1), 0u);
}

}  // namespace
}  // namespace irls
