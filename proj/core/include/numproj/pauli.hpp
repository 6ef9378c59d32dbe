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

#include <Eigen/Dense>
#include <complex>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace numproj {

using Complex = std::complex<double>;

inline constexpr int kMaxPauliQubits = 64;

/// Pruning threshold applied by operations that finish with simplify().
inline constexpr double kDefaultTolerance = 1e-12;

/// Phase-free identity of a Pauli string. Bit i of `x` is set when qubit i
/// carries X or Y, bit i of `z` when it carries Z or Y.
struct PauliKey {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  friend bool operator==(const PauliKey&, const PauliKey&) = default;
};

/// Lexicographic (z, x) order, the tie-break used for every canonical sort.
inline bool lex_less(const PauliKey& a, const PauliKey& b) {
  return a.z != b.z ? a.z < b.z : a.x < b.x;
}

struct PauliKeyHash {
  std::size_t operator()(const PauliKey& k) const noexcept {
    std::uint64_t h = k.x * 0x9E3779B97F4A7C15ULL;
    h ^= k.z + 0xC2B2AE3D27D4EB4FULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// i^phase_exp times a tensor product of I/X/Y/Z on n qubits. Qubit 0 is the
/// rightmost printed character and the least significant basis-index bit.
class PauliString {
 public:
  PauliString() = default;
  PauliString(int n, std::uint64_t x_mask, std::uint64_t z_mask, int phase_exp = 0);

  static PauliString identity(int n) { return PauliString(n, 0, 0); }

  int n() const noexcept { return n_; }
  std::uint64_t x_mask() const noexcept { return key_.x; }
  std::uint64_t z_mask() const noexcept { return key_.z; }
  int phase_exp() const noexcept { return phase_exp_; }
  const PauliKey& key() const noexcept { return key_; }

  /// 'I', 'X', 'Y' or 'Z' on the given qubit.
  char at(int qubit) const;

  Complex phase() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  int n_ = 0;
  PauliKey key_;
  int phase_exp_ = 0;
};

/// Mask with the low n bits set.
std::uint64_t qubit_mask(int n);

PauliString multiply(const PauliString& a, const PauliString& b);
bool commutes(const PauliString& a, const PauliString& b);
bool qubitwise_commutes(const PauliString& a, const PauliString& b);

// Same relations on bare keys; the caller guarantees matching qubit counts.
bool commutes(const PauliKey& a, const PauliKey& b);
bool qubitwise_commutes(const PauliKey& a, const PauliKey& b);

/// Parses characters from {I, X, Y, Z}, leftmost = qubit n-1. The result has
/// phase_exp 0. Throws ParseError listing every invalid position.
PauliString parse_string(std::string_view text);
std::string format_string(const PauliString& s);
std::string format_key(int n, const PauliKey& key);

struct PauliTerm {
  PauliKey key;
  Complex coefficient;
};

/// Sum of phase-free Pauli strings with complex coefficients. Terms keep the
/// order in which their keys were first inserted, which makes every
/// operation on a sum deterministic.
class PauliSum {
 public:
  explicit PauliSum(int n);

  static PauliSum identity(int n, Complex coefficient = 1.0);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Accumulates `coefficient` onto `key`. Never removes terms.
  void add_term(const PauliKey& key, Complex coefficient);
  /// Folds the string's phase into the coefficient.
  void add_term(const PauliString& s, Complex coefficient = 1.0);

  bool contains(const PauliKey& key) const;
  /// Zero for absent keys.
  Complex coefficient(const PauliKey& key) const;

  std::span<const PauliTerm> terms() const noexcept { return terms_; }

  /// Descending |coefficient|, ties broken by lex_less on the key.
  std::vector<PauliTerm> sorted_terms() const;

  void reserve(std::size_t count);

 private:
  int n_;
  std::vector<PauliTerm> terms_;
  std::unordered_map<PauliKey, std::size_t, PauliKeyHash> index_;
};

PauliSum add(const PauliSum& a, const PauliSum& b);
PauliSum scale(const PauliSum& a, Complex factor);
/// Drops every term with |coefficient| <= tol.
PauliSum simplify(const PauliSum& a, double tol = kDefaultTolerance);

/// Same term set and coefficients within `tol`, treating absent keys as zero.
bool approx_equal(const PauliSum& a, const PauliSum& b, double tol);

/// Every coefficient real to within `tol` (the phase-free keys are Hermitian).
bool is_hermitian(const PauliSum& a, double tol = kDefaultTolerance);

inline constexpr int kMaxDenseQubits = 12;

/// 2^n x 2^n matrix of an operator; row and column index are the basis
/// bitstrings read as integers. Verification use only.
class DenseOperator {
 public:
  explicit DenseOperator(int n);
  DenseOperator(int n, Eigen::MatrixXcd matrix);

  int n() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return std::size_t{1} << n_; }
  const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }
  Eigen::MatrixXcd& matrix() noexcept { return matrix_; }

  Complex operator()(std::size_t row, std::size_t col) const {
    return matrix_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

 private:
  int n_;
  Eigen::MatrixXcd matrix_;
};

/// Throws ResourceError for n > kMaxDenseQubits.
DenseOperator to_dense(const PauliSum& sum);
DenseOperator to_dense(const PauliString& s);

}  // namespace numproj
