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

// Brute-force dense references. Nothing here goes through the bitmask
// algebra, to_dense() or the Kravchuk routines: strings are built as
// Kronecker products of 2x2 matrices and projectors by enumerating basis
// states, so the results can check those code paths.

#pragma once

#include "numproj/pauli.hpp"

namespace numproj::oracle {

/// Kronecker product of the single-qubit matrices, qubit n-1 leftmost,
/// times the string's phase.
DenseOperator kronecker_dense(const PauliString& s);
DenseOperator kronecker_dense(const PauliSum& sum);

/// diag(popcount(b) == k).
DenseOperator weight_projector_dense(int n, int k);

/// diag(popcount(b)).
DenseOperator number_operator_dense(int n);

/// Coefficients Tr(P^dagger M) / 2^n over all 4^n strings, dropping
/// |c| <= tol.
PauliSum pauli_decompose(const DenseOperator& m, double tol = 1e-14);

/// max |a_ij - b_ij|.
double max_abs_diff(const DenseOperator& a, const DenseOperator& b);

}  // namespace numproj::oracle
