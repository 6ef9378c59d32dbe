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

// Qubit Hamiltonian term lists.
//
// Text format, one term per line:
//
//   # qubits: 4          optional; pads shorter strings with identities
//   # name: H2 STO-3G     optional
//   -0.0971 IIII
//   0.1714 0.0 IIIZ      <re> [<im>] <PAULI_STRING>
//
// Other '#' lines are kept as comments, blank lines are ignored and repeated
// strings are summed (with a warning). The rightmost character is qubit 0.
//
// JSON mirror: {"qubits": n, "terms": [{"string": s, "re": x, "im": y}, ...]}.
// CSV mirror: a "string,re,im" header followed by one row per term.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numproj/pauli.hpp"

namespace numproj {

enum class Format { kText, kJson, kCsv };

std::string_view to_string(Format format);
Format parse_format(std::string_view text);

struct HamiltonianEntry {
  Complex coefficient;
  PauliKey key;
};

struct HamiltonianDocument {
  int n = 0;
  std::vector<HamiltonianEntry> entries;
  std::optional<std::string> name;
  std::vector<std::string> comments;

  PauliSum to_sum() const;
  static HamiltonianDocument from_sum(const PauliSum& sum);
};

struct ParsedDocument {
  HamiltonianDocument document;
  std::vector<std::string> warnings;
};

/// Throws ParseError (with the offending line where there is one).
ParsedDocument parse(std::string_view text, Format format = Format::kText);

/// Guesses the format from the first meaningful character/line.
Format detect_format(std::string_view text);

/// Deterministic emission: descending |coefficient|, ties broken by masks.
/// Coefficients are written in shortest round-trip form.
std::string emit(const HamiltonianDocument& doc, Format format = Format::kText);
std::string emit(const PauliSum& sum, Format format = Format::kText);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace numproj
