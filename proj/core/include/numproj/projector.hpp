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
#include <vector>

#include "numproj/exact.hpp"
#include "numproj/pauli.hpp"

namespace numproj {

/// Largest n for which build_projector materializes all 2^n Z strings.
inline constexpr int kMaxProjectorQubits = 24;

/// Upper bound on the terms a single project_string call may generate.
inline constexpr std::uint64_t kMaxGeneratedTerms = std::uint64_t{1} << 26;

/// Target subspace: n qubits with exactly k of them in |1>.
class ProjectorSpec {
 public:
  ProjectorSpec(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }

 private:
  int n_;
  int k_;
};

/// Exact coefficient C(n, k, m) / 2^n of every m-fold Z string, m = 0..n.
std::vector<Dyadic> projector_coefficients(const ProjectorSpec& spec);

/// Number of nonzero terms in build_projector(spec):
/// sum over m of binomial(n, m) when C(n, k, m) != 0.
std::uint64_t projector_term_count(const ProjectorSpec& spec);

/// Pauli expansion of the projector onto Hamming weight k. Zero coefficients
/// are never emitted. Throws ResourceError above kMaxProjectorQubits.
PauliSum build_projector(const ProjectorSpec& spec);

/// (n - sum_i Z_i) / 2, for 1 <= n <= 24.
PauliSum build_number_operator(int n);

/// Number of nonzero terms project_string(spec, s, .) will emit, before any
/// pruning. Zero when the projection vanishes.
std::uint64_t projected_term_count(const ProjectorSpec& spec, const PauliString& s);

/// coeff * P s P without materializing P.
///
/// A string with an odd number of X/Y factors always changes the Hamming
/// weight by an odd amount and projects to zero. Otherwise, with S the X
/// support (|S| = w even), P s P = s D where D is the diagonal projector onto
/// basis states holding w/2 ones inside S and k - w/2 ones outside. D
/// factorizes into a weight-w/2 projector on S times a weight-(k - w/2)
/// projector on the complement, so every output term keeps the X mask of s.
///
/// Throws ResourceError when more than kMaxGeneratedTerms terms would be
/// produced.
PauliSum project_string(const ProjectorSpec& spec, const PauliString& s,
                        Complex coeff = 1.0);

struct ProjectOptions {
  double tolerance = kDefaultTolerance;
  /// Worker threads for per-term projection; 0 picks the hardware count.
  /// The result does not depend on this value.
  unsigned threads = 1;
};

/// P M P, term by term, merged in input order and pruned at
/// options.tolerance.
PauliSum project_operator(const ProjectorSpec& spec, const PauliSum& op,
                          const ProjectOptions& options = {});

}  // namespace numproj
