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

#include "irls/instance_io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "irls/errors.h"

namespace irls {
namespace {

constexpr std::string_view kTruthTag = "truth:";

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const std::size_t start = line.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) break;
    std::size_t end = line.find_first_of(" \t\r", start);
    if (end == std::string_view::npos) end = line.size();
    tokens.push_back(line.substr(start, end - start));
    pos = end;
  }
  return tokens;
}

template <typename T>
T ParseNumber(std::string_view token, std::size_t line) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "cannot parse '" + std::string(token) + "'");
  }
  return value;
}

Vector ParseReals(const std::vector<std::string_view>& tokens,
                  std::size_t first, Index expected, std::size_t line) {
  if (static_cast<Index>(tokens.size() - first) != expected) {
    throw ParseError(line, "expected " + std::to_string(expected) +
                               " values, found " +
                               std::to_string(tokens.size() - first));
  }
  Vector values(expected);
  for (Index i = 0; i < expected; ++i) {
    values[i] = ParseNumber<double>(tokens[first + static_cast<std::size_t>(i)],
                                    line);
    if (!std::isfinite(values[i])) {
      throw ParseError(line, "non-finite value");
    }
  }
  return values;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line; false at end of input.
  bool Next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  }
  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

void WriteReals(std::ostream& out, const Vector& values) {
  for (Index i = 0; i < values.size(); ++i) {
    if (i > 0) out << ' ';
    out << FormatReal(values[i]);
  }
  out << '\n';
}

}  // namespace

std::string FormatReal(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                       std::chars_format::general, 17);
  if (ec != std::errc()) throw Error("failed to format a real");
  return std::string(buffer, ptr);
}

void CheckInColumnSpan(const Matrix& a, const Vector& b, double tolerance) {
  CheckSystem(a, b);
  const double b_norm = b.norm();
  if (b_norm == 0.0) return;
  const Vector x = a.completeOrthogonalDecomposition().solve(b);
  const double residual = (a * x - b).norm();
  if (!(residual <= tolerance * b_norm)) {
    throw SpanError("b is not in the column span of A (relative residual " +
                    FormatReal(residual / b_norm) + ")");
  }
}

RegressionInstance ParseInstance(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.Next(line)) throw ParseError(1, "empty instance file");

  auto header = Tokens(line);
  if (header.size() != 2) {
    throw ParseError(reader.number(), "expected 'n m' dimension line");
  }
  const auto n = ParseNumber<long>(header[0], reader.number());
  const auto m = ParseNumber<long>(header[1], reader.number());
  if (n < 1 || m < 1) {
    throw ParseError(reader.number(), "dimensions must be positive");
  }

  RegressionInstance instance;
  instance.a.resize(n, m);
  for (long i = 0; i < n; ++i) {
    if (!reader.Next(line)) {
      throw ParseError(reader.number() + 1, "missing row " + std::to_string(i + 1));
    }
    instance.a.row(i) = ParseReals(Tokens(line), 0, m, reader.number());
  }
  if (!reader.Next(line)) {
    throw ParseError(reader.number() + 1, "missing right-hand side");
  }
  instance.b = ParseReals(Tokens(line), 0, n, reader.number());

  if (reader.Next(line)) {
    const auto tokens = Tokens(line);
    if (tokens.empty() || tokens[0] != kTruthTag) {
      throw ParseError(reader.number(), "unexpected trailing content");
    }
    instance.truth = ParseReals(tokens, 1, m, reader.number());
    if (reader.Next(line)) {
      throw ParseError(reader.number(), "unexpected trailing content");
    }
  }

  CheckInColumnSpan(instance.a, instance.b);
  return instance;
}

RegressionInstance ReadInstance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return ParseInstance(in);
}

void FormatInstance(std::ostream& out, const RegressionInstance& instance) {
  CheckSystem(instance.a, instance.b);
  out << instance.a.rows() << ' ' << instance.a.cols() << '\n';
  for (Index i = 0; i < instance.a.rows(); ++i) {
    WriteReals(out, instance.a.row(i).transpose());
  }
  WriteReals(out, instance.b);
  if (instance.truth) {
    out << kTruthTag << ' ';
    WriteReals(out, *instance.truth);
  }
}

void WriteInstance(const std::filesystem::path& path,
                   const RegressionInstance& instance) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  FormatInstance(out, instance);
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace irls
