// Copyright 2026 The numproj Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace numproj {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::string detail;  // first failure, empty on success
};

/// Runs the self-check suites up to `max_n` qubits: exact Kravchuk
/// agreement and identities, and the dense-oracle comparisons (capped at the
/// sizes where brute force stays cheap).
std::vector<SuiteResult> run_verification(int max_n, std::uint64_t seed = 20240601);

}  // namespace numproj
