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

// Plain-text instance files:
//
//   n m
//   <n lines of m reals: the rows of A>
//   <1 line of n reals: b>
//   truth: <m reals>          (optional)
//
// Reals are written with 17 significant digits so that a write/read cycle
// reproduces every double exactly.

#ifndef IRLS_INSTANCE_IO_H_
#define IRLS_INSTANCE_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "irls/instances.h"

namespace irls {

// Throws ParseError (with a 1-based line number) on malformed input and
// SpanError if b is not in the column span of A.
RegressionInstance ParseInstance(std::istream& in);
RegressionInstance ReadInstance(const std::filesystem::path& path);

void FormatInstance(std::ostream& out, const RegressionInstance& instance);
void WriteInstance(const std::filesystem::path& path,
                   const RegressionInstance& instance);

// Shortest-round-trip-safe decimal form with 17 significant digits.
std::string FormatReal(double value);

// Throws SpanError unless min ‖A·x − b‖ <= tolerance·‖b‖.
void CheckInColumnSpan(const Matrix& a, const Vector& b,
                       double tolerance = 1e-8);

}  // namespace irls

#endif  // IRLS_INSTANCE_IO_H_
