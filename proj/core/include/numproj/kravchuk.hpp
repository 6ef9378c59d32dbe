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
#include <span>
#include <string_view>
#include <vector>

#include "numproj/exact.hpp"

namespace numproj {

/// Largest qubit count handled by the exact coefficient routines.
inline constexpr int kMaxKravchukQubits = 64;

/// binomial(a, b), with the convention binomial(a, b) = 0 for b < 0 or b > a.
/// Requires 0 <= a <= 64.
Int128 binomial(int a, int b);

/// Generalised binomial (Kravchuk) coefficient C(n, k, m): the weight that
/// every m-fold Z string carries in 2^n times the projector onto Hamming
/// weight k. Evaluated from the alternating sum
///
///   C(n, k, m) = sum_{l=0}^{m} (-1)^l binomial(n - m, k - l) binomial(m, l).
///
/// Throws DomainError naming the argument when n is outside [1, 64] or k, m
/// are outside [0, n].
Int128 coefficient(int n, int k, int m);

/// The (n+1) x (n+1) matrix of C(n, k, m), rows k and columns m.
class KravchukTable {
 public:
  /// Wraps externally supplied entries (row-major, k-major). Mainly useful for
  /// feeding deliberately corrupted tables to verify_identities.
  static KravchukTable from_entries(int n, std::vector<Int128> entries);

  int n() const noexcept { return n_; }
  int dimension() const noexcept { return n_ + 1; }

  Int128 operator()(int k, int m) const {
    return entries_[static_cast<std::size_t>(k) * dimension() + m];
  }
  /// Bounds-checked access.
  Int128 at(int k, int m) const;

  std::span<const Int128> row(int k) const;
  std::vector<Int128> column(int m) const;

  friend bool operator==(const KravchukTable&, const KravchukTable&) = default;

 private:
  KravchukTable(int n, std::vector<Int128> entries)
      : n_(n), entries_(std::move(entries)) {}

  int n_ = 0;
  std::vector<Int128> entries_;

  friend KravchukTable table(int n);
  friend KravchukTable closed_form_table(int n);
};

/// Builds the table for n by the addition recursion
/// C(n,k,m) = C(n-1,k,m) + C(n-1,k-1,m) for m < n, and the subtraction
/// recursion C(n,k,n) = C(n-1,k,n-1) - C(n-1,k-1,n-1) for the last column,
/// starting from the one-qubit table [[1, 1], [1, -1]].
KravchukTable table(int n);

/// Same table, every entry evaluated independently by coefficient().
KravchukTable closed_form_table(int n);

/// Coefficients of (1 - x)^m (1 + x)^(n - m) in ascending powers of x,
/// obtained by repeated exact polynomial multiplication.
std::vector<Int128> generating_row(int n, int m);

enum class Identity {
  kColumnSum,         // sum_k C(n,k,m) = 2^n [m == 0]
  // sum_m binom(n,m) C(n,k,m) C(n,k',m) = 2^n binom(n,k) [k == k']. The
  // binom(n,k) factor is the identity coefficient of P(n,k) itself; it is 1
  // only on the k = 0 and k = n rows.
  kRowOrthogonality,
  kRowSum,            // sum_m binom(n,m) C(n,k,m) = 2^n [k == 0]
  kNumberOperator,    // sum_k k C(n,k,m) = n 2^(n-1), -2^(n-1), 0
};

std::string_view to_string(Identity identity);

/// Coordinates of the first index combination where an identity fails.
struct Counterexample {
  std::optional<int> k;
  std::optional<int> k_prime;
  std::optional<int> m;
  Int128 expected = 0;
  Int128 actual = 0;
};

struct IdentityCheck {
  Identity identity;
  bool passed = true;
  std::optional<Counterexample> counterexample;
};

struct IdentityReport {
  int n = 0;
  std::vector<IdentityCheck> checks;

  bool all_passed() const;
};

IdentityReport verify_identities(int n);
IdentityReport verify_identities(const KravchukTable& table);

}  // namespace numproj
