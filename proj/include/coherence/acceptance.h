// Copyright 2026 The Coherence Forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COHERENCE_ACCEPTANCE_H_
#define COHERENCE_ACCEPTANCE_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace coherence {

struct CriterionResult {
  std::string id;  // "1", "8a", ...
  std::string title;
  bool pass = false;
  bool counted = true;  // supplementary lines do not decide the exit status
  std::string detail;
  double seconds = 0.0;
};

std::vector<CriterionResult> run_acceptance_suite(std::uint64_t seed);

// One "PASS [id] title: detail" or "FAIL ..." line per result; returns
// true iff every counted result passed.
bool print_acceptance(const std::vector<CriterionResult>& results,
                      std::ostream& out);

}  // namespace coherence

#endif  // COHERENCE_ACCEPTANCE_H_
