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

#include "irls/trace.h"

namespace irls {

std::string_view StepModeName(StepMode mode) {
  return mode == StepMode::kShort ? "short" : "long";
}

void IterationTrace::Append(const IterationTrace& other, int call) {
  records.reserve(records.size() + other.records.size());
  for (IterationRecord record : other.records) {
    record.call += call;
    records.push_back(record);
  }
}

}  // namespace irls
