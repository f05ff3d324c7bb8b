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

#ifndef IRLS_ERRORS_H_
#define IRLS_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace irls {

// Root of every exception thrown by the library. Callers that only need to
// distinguish "solver failed" from "bad input" can catch `Error` and
// `InvalidArgument` respectively.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// The right-hand side of a pseudo-solve is not in the range of the matrix,
// i.e. b lies outside the column span of A.
class RangeError : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

// A weight update decreased some coordinate.
class NonMonotone : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class IterationCapExceeded : public Error {
 public:
  using Error::Error;
};

class DegenerateCertificate : public Error {
 public:
  using Error::Error;
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class SpanError : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

// No feasible point exists (used by the exact oracle).
class Infeasible : public Error {
 public:
  using Error::Error;
};

}  // namespace irls

#endif  // IRLS_ERRORS_H_
