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

#include "numproj/oracle.hpp"

#include "numproj/errors.hpp"

namespace numproj::oracle {
namespace {

Eigen::Matrix2cd single_qubit(char c) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd m;
  switch (c) {
    case 'X':
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case 'Y':
      m << 0.0, -1.0i, 1.0i, 0.0;
      break;
    case 'Z':
      m << 1.0, 0.0, 0.0, -1.0;
      break;
    default:
      m << 1.0, 0.0, 0.0, 1.0;
  }
  return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

DenseOperator kronecker_dense(const PauliString& s) {
  const std::string text = format_string(s);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (char c : text) m = kron(m, single_qubit(c));
  return DenseOperator(s.n(), s.phase() * m);
}

DenseOperator kronecker_dense(const PauliSum& sum) {
  DenseOperator out(sum.n());
  for (const auto& t : sum.terms()) {
    out.matrix() +=
        t.coefficient * kronecker_dense(PauliString(sum.n(), t.key.x, t.key.z)).matrix();
  }
  return out;
}

DenseOperator weight_projector_dense(int n, int k) {
  DenseOperator out(n);
  for (std::size_t b = 0; b < out.dimension(); ++b) {
    int ones = 0;
    for (int q = 0; q < n; ++q) ones += static_cast<int>((b >> q) & 1U);
    if (ones == k) out.matrix()(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) = 1.0;
  }
  return out;
}

DenseOperator number_operator_dense(int n) {
  DenseOperator out(n);
  for (std::size_t b = 0; b < out.dimension(); ++b) {
    int ones = 0;
    for (int q = 0; q < n; ++q) ones += static_cast<int>((b >> q) & 1U);
    out.matrix()(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) = ones;
  }
  return out;
}

PauliSum pauli_decompose(const DenseOperator& m, double tol) {
  const int n = m.n();
  if (n > 8) throw ResourceError("pauli_decompose is limited to 8 qubits");
  PauliSum out(n);
  const std::uint64_t strings = std::uint64_t{1} << (2 * n);
  const double norm = static_cast<double>(m.dimension());
  for (std::uint64_t code = 0; code < strings; ++code) {
    const PauliString p(n, code & qubit_mask(n), code >> n);
    // Pauli strings are Hermitian, so Tr(P^dagger M) = sum_ij conj(P_ij) M_ij.
    const Complex c = kronecker_dense(p).matrix().cwiseProduct(m.matrix().conjugate()).sum();
    const Complex coeff = std::conj(c) / norm;
    if (std::abs(coeff) > tol) out.add_term(p.key(), coeff);
  }
  return out;
}

double max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
  if (a.n() != b.n()) throw DimensionError("dense operators differ in size");
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

}  // namespace numproj::oracle
