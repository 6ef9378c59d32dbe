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

#include "numproj/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "numproj/errors.hpp"

namespace numproj {
namespace {

void check_qubits(int n) {
  if (n < 1 || n > kMaxPauliQubits) {
    throw DomainError("qubit count " + std::to_string(n) + " is outside [1, " +
                      std::to_string(kMaxPauliQubits) + "]");
  }
}

void check_same_size(int a, int b) {
  if (a != b) {
    throw DimensionError("qubit count mismatch: " + std::to_string(a) + " vs " +
                         std::to_string(b));
  }
}

int popcount(std::uint64_t v) { return std::popcount(v); }

Complex i_power(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

}  // namespace

std::uint64_t qubit_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

PauliString::PauliString(int n, std::uint64_t x_mask, std::uint64_t z_mask,
                         int phase_exp)
    : n_(n), key_{x_mask, z_mask}, phase_exp_(((phase_exp % 4) + 4) % 4) {
  check_qubits(n);
  if (((x_mask | z_mask) & ~qubit_mask(n)) != 0) {
    throw DimensionError("Pauli masks do not fit in " + std::to_string(n) +
                         " qubits");
  }
}

char PauliString::at(int qubit) const {
  if (qubit < 0 || qubit >= n_) {
    throw DomainError("qubit index " + std::to_string(qubit) + " out of range");
  }
  const bool x = (key_.x >> qubit) & 1U;
  const bool z = (key_.z >> qubit) & 1U;
  return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

Complex PauliString::phase() const { return i_power(phase_exp_); }

// Writing each factor as i^(x.z) X^x Z^z (so Y = iXZ), the product of the
// bare X/Z parts picks up (-1)^(z_a . x_b) from moving Z_a past X_b.
PauliString multiply(const PauliString& a, const PauliString& b) {
  check_same_size(a.n(), b.n());
  const std::uint64_t x = a.x_mask() ^ b.x_mask();
  const std::uint64_t z = a.z_mask() ^ b.z_mask();
  const int exp = a.phase_exp() + b.phase_exp() +
                  popcount(a.x_mask() & a.z_mask()) +
                  popcount(b.x_mask() & b.z_mask()) +
                  2 * popcount(a.z_mask() & b.x_mask()) - popcount(x & z);
  return PauliString(a.n(), x, z, exp);
}

bool commutes(const PauliKey& a, const PauliKey& b) {
  return popcount((a.x & b.z) ^ (a.z & b.x)) % 2 == 0;
}

bool qubitwise_commutes(const PauliKey& a, const PauliKey& b) {
  const std::uint64_t support_a = a.x | a.z;
  const std::uint64_t support_b = b.x | b.z;
  const std::uint64_t differ = (a.x ^ b.x) | (a.z ^ b.z);
  return (support_a & support_b & differ) == 0;
}

bool commutes(const PauliString& a, const PauliString& b) {
  check_same_size(a.n(), b.n());
  return commutes(a.key(), b.key());
}

bool qubitwise_commutes(const PauliString& a, const PauliString& b) {
  check_same_size(a.n(), b.n());
  return qubitwise_commutes(a.key(), b.key());
}

PauliString parse_string(std::string_view text) {
  if (text.empty()) throw ParseError("empty Pauli string");
  if (text.size() > static_cast<std::size_t>(kMaxPauliQubits)) {
    throw ParseError("Pauli string longer than " +
                     std::to_string(kMaxPauliQubits) + " qubits");
  }
  const int n = static_cast<int>(text.size());
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  std::string bad;
  for (int pos = 0; pos < n; ++pos) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - pos);
    switch (text[pos]) {
      case 'I':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      default:
        if (!bad.empty()) bad += ", ";
        bad += "'" + std::string(1, text[pos]) + "' at position " +
               std::to_string(pos);
    }
  }
  if (!bad.empty()) throw ParseError("invalid Pauli character " + bad);
  return PauliString(n, x, z);
}

std::string format_key(int n, const PauliKey& key) {
  std::string out(static_cast<std::size_t>(n), 'I');
  for (int q = 0; q < n; ++q) {
    const bool x = (key.x >> q) & 1U;
    const bool z = (key.z >> q) & 1U;
    out[n - 1 - q] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return out;
}

std::string format_string(const PauliString& s) { return format_key(s.n(), s.key()); }

PauliSum::PauliSum(int n) : n_(n) { check_qubits(n); }

PauliSum PauliSum::identity(int n, Complex coefficient) {
  PauliSum out(n);
  out.add_term(PauliKey{}, coefficient);
  return out;
}

void PauliSum::add_term(const PauliKey& key, Complex coefficient) {
  if (((key.x | key.z) & ~qubit_mask(n_)) != 0) {
    throw DimensionError("term does not fit in " + std::to_string(n_) + " qubits");
  }
  auto [it, inserted] = index_.try_emplace(key, terms_.size());
  if (inserted) {
    terms_.push_back({key, coefficient});
  } else {
    terms_[it->second].coefficient += coefficient;
  }
}

void PauliSum::add_term(const PauliString& s, Complex coefficient) {
  check_same_size(n_, s.n());
  add_term(s.key(), coefficient * s.phase());
}

bool PauliSum::contains(const PauliKey& key) const { return index_.contains(key); }

Complex PauliSum::coefficient(const PauliKey& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? Complex{} : terms_[it->second].coefficient;
}

std::vector<PauliTerm> PauliSum::sorted_terms() const {
  std::vector<PauliTerm> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const PauliTerm& a, const PauliTerm& b) {
    const double ma = std::abs(a.coefficient);
    const double mb = std::abs(b.coefficient);
    if (ma != mb) return ma > mb;
    return lex_less(a.key, b.key);
  });
  return out;
}

void PauliSum::reserve(std::size_t count) {
  terms_.reserve(count);
  index_.reserve(count);
}

PauliSum add(const PauliSum& a, const PauliSum& b) {
  check_same_size(a.n(), b.n());
  PauliSum out = a;
  out.reserve(a.size() + b.size());
  for (const auto& t : b.terms()) out.add_term(t.key, t.coefficient);
  return out;
}

PauliSum scale(const PauliSum& a, Complex factor) {
  PauliSum out(a.n());
  out.reserve(a.size());
  for (const auto& t : a.terms()) out.add_term(t.key, t.coefficient * factor);
  return out;
}

PauliSum simplify(const PauliSum& a, double tol) {
  if (!(tol >= 0.0)) throw DomainError("tolerance must be nonnegative");
  PauliSum out(a.n());
  for (const auto& t : a.terms()) {
    if (std::abs(t.coefficient) > tol) out.add_term(t.key, t.coefficient);
  }
  return out;
}

bool approx_equal(const PauliSum& a, const PauliSum& b, double tol) {
  if (a.n() != b.n()) return false;
  for (const auto& t : a.terms()) {
    if (std::abs(t.coefficient - b.coefficient(t.key)) > tol) return false;
  }
  for (const auto& t : b.terms()) {
    if (!a.contains(t.key) && std::abs(t.coefficient) > tol) return false;
  }
  return true;
}

bool is_hermitian(const PauliSum& a, double tol) {
  return std::all_of(a.terms().begin(), a.terms().end(), [tol](const PauliTerm& t) {
    return std::abs(t.coefficient.imag()) <= tol;
  });
}

DenseOperator::DenseOperator(int n) : n_(n) {
  check_qubits(n);
  if (n > kMaxDenseQubits) {
    throw ResourceError("dense operators are limited to " +
                        std::to_string(kMaxDenseQubits) + " qubits, got " +
                        std::to_string(n));
  }
  const auto dim = static_cast<Eigen::Index>(dimension());
  matrix_ = Eigen::MatrixXcd::Zero(dim, dim);
}

DenseOperator::DenseOperator(int n, Eigen::MatrixXcd matrix) : DenseOperator(n) {
  if (matrix.rows() != matrix_.rows() || matrix.cols() != matrix_.cols()) {
    throw DimensionError("matrix shape does not match 2^" + std::to_string(n));
  }
  matrix_ = std::move(matrix);
}

// X^x Z^z |b> = (-1)^(z.b) |b ^ x>, and each Y contributes an extra i.
DenseOperator to_dense(const PauliSum& sum) {
  DenseOperator out(sum.n());
  const std::uint64_t dim = out.dimension();
  auto& m = out.matrix();
  for (const auto& t : sum.terms()) {
    const Complex base = t.coefficient * i_power(popcount(t.key.x & t.key.z));
    for (std::uint64_t col = 0; col < dim; ++col) {
      const std::uint64_t row = col ^ t.key.x;
      const bool negate = popcount(t.key.z & col) % 2 == 1;
      m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
          negate ? -base : base;
    }
  }
  return out;
}

DenseOperator to_dense(const PauliString& s) {
  PauliSum sum(s.n());
  sum.add_term(s, 1.0);
  return to_dense(sum);
}

}  // namespace numproj
