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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numproj/pauli.hpp"

namespace numproj {

enum class Relation { kGeneral, kQubitwise };

enum class Ordering {
  kMagnitude,      // descending |coefficient|, ties by (z, x) masks
  kInput,          // term order of the sum
  kLexicographic,  // ascending (z, x) masks
};

std::string_view to_string(Relation relation);
std::string_view to_string(Ordering ordering);
/// Accepts "general" / "qubitwise" and "magnitude" / "input" / "lex".
Relation parse_relation(std::string_view text);
Ordering parse_ordering(std::string_view text);

bool related(Relation relation, const PauliKey& a, const PauliKey& b);

struct CliquePartition {
  Relation relation = Relation::kGeneral;
  Ordering ordering = Ordering::kMagnitude;
  std::vector<std::vector<PauliKey>> cliques;
  std::size_t source_term_count = 0;

  std::size_t size() const noexcept { return cliques.size(); }
};

/// First-fit greedy grouping: terms are visited in `ordering` and each joins
/// the first clique whose every member it is related to, otherwise opens a
/// new clique. The count is an upper bound on the optimal cover.
/// Throws DomainError for an empty operator.
CliquePartition partition(const PauliSum& op, Relation relation = Relation::kGeneral,
                          Ordering ordering = Ordering::kMagnitude);

struct ValidationReport {
  bool valid = true;
  std::string message;
  std::optional<std::size_t> clique;
  std::optional<std::pair<PauliKey, PauliKey>> violating_pair;
};

/// Re-checks disjointness, coverage of every term of `op`, and the declared
/// relation on every pair inside every clique. Reports the first violation.
ValidationReport validate(const CliquePartition& p, const PauliSum& op);

}  // namespace numproj
