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

#include "numproj/verify.hpp"

#include <algorithm>
#include <random>

#include "numproj/cliques.hpp"
#include "numproj/errors.hpp"
#include "numproj/kravchuk.hpp"
#include "numproj/oracle.hpp"
#include "numproj/projector.hpp"

namespace numproj {
namespace {

constexpr double kDenseTol = 1e-13;

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  // Records one check; keeps the first failure message.
  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what;
    }
  }

  SuiteResult finish() { return std::move(result_); }

 private:
  SuiteResult result_;
};

PauliString random_string(int n, std::mt19937_64& rng) {
  const std::uint64_t mask = qubit_mask(n);
  return PauliString(n, rng() & mask, rng() & mask);
}

SuiteResult kravchuk_agreement(int max_n) {
  Suite s("kravchuk closed form / recursion / generating function");
  for (int n = 1; n <= std::min(max_n, kMaxKravchukQubits); ++n) {
    const auto rec = table(n);
    const auto closed = closed_form_table(n);
    for (int m = 0; m <= n; ++m) {
      const auto gen = generating_row(n, m);
      for (int k = 0; k <= n; ++k) {
        s.check(rec(k, m) == closed(k, m) && closed(k, m) == gen[k],
                "C(" + std::to_string(n) + "," + std::to_string(k) + "," +
                    std::to_string(m) + ") disagrees between routes");
      }
    }
  }
  return s.finish();
}

SuiteResult kravchuk_identities(int max_n) {
  Suite s("kravchuk identities");
  for (int n = 1; n <= std::min(max_n, kMaxKravchukQubits); ++n) {
    const auto report = verify_identities(n);
    for (const auto& c : report.checks) {
      s.check(c.passed, std::string(to_string(c.identity)) + " fails at n = " +
                            std::to_string(n));
    }
  }
  return s.finish();
}

SuiteResult pauli_products(int max_n, std::mt19937_64& rng) {
  Suite s("pauli products and commutation vs Kronecker oracle");
  const int n = std::min(max_n, 4);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_string(n, rng);
    const auto b = random_string(n, rng);
    const auto da = oracle::kronecker_dense(a);
    const auto db = oracle::kronecker_dense(b);
    const DenseOperator expected(n, da.matrix() * db.matrix());
    s.check(oracle::max_abs_diff(oracle::kronecker_dense(multiply(a, b)), expected) == 0.0,
            "product " + format_string(a) + " * " + format_string(b));
    const bool dense_commute =
        (da.matrix() * db.matrix() - db.matrix() * da.matrix()).cwiseAbs().maxCoeff() == 0.0;
    s.check(commutes(a, b) == dense_commute,
            "commutation of " + format_string(a) + ", " + format_string(b));
  }
  const int small = std::min(max_n, 2);
  const std::uint64_t count = std::uint64_t{1} << (2 * small);
  for (std::uint64_t i = 0; i < count; ++i) {
    for (std::uint64_t j = 0; j < count; ++j) {
      const PauliString a(small, i & qubit_mask(small), i >> small);
      const PauliString b(small, j & qubit_mask(small), j >> small);
      const auto da = oracle::kronecker_dense(a).matrix();
      const auto db = oracle::kronecker_dense(b).matrix();
      const bool dense_commute = (da * db - db * da).cwiseAbs().maxCoeff() == 0.0;
      s.check(commutes(a, b) == dense_commute, "exhaustive commutation");
      s.check(!qubitwise_commutes(a, b) || commutes(a, b),
              "qubit-wise commuting pair that does not commute");
    }
  }
  return s.finish();
}

SuiteResult projector_laws(int max_n) {
  Suite s("projector operator laws vs basis enumeration");
  for (int n = 1; n <= std::min(max_n, 8); ++n) {
    std::vector<DenseOperator> projectors;
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(1 << n, 1 << n);
    for (int k = 0; k <= n; ++k) {
      const auto p = to_dense(build_projector(ProjectorSpec(n, k)));
      const std::string tag = "P(" + std::to_string(n) + "," + std::to_string(k) + ")";
      s.check(oracle::max_abs_diff(p, oracle::weight_projector_dense(n, k)) <= kDenseTol,
              tag + " is not the weight-k diagonal");
      s.check((p.matrix() * p.matrix() - p.matrix()).cwiseAbs().maxCoeff() <= kDenseTol,
              tag + " is not idempotent");
      total += p.matrix();
      projectors.push_back(p);
    }
    s.check((total - Eigen::MatrixXcd::Identity(1 << n, 1 << n)).cwiseAbs().maxCoeff() <=
                kDenseTol,
            "projectors for n = " + std::to_string(n) + " do not sum to identity");
    if (n <= 6) {
      for (int k = 0; k <= n; ++k) {
        for (int kp = 0; kp <= n; ++kp) {
          if (k == kp) continue;
          s.check((projectors[k].matrix() * projectors[kp].matrix()).cwiseAbs().maxCoeff() <=
                      kDenseTol,
                  "P(n,k) P(n,k') != 0 at n = " + std::to_string(n));
        }
      }
    }
  }
  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    s.check(oracle::max_abs_diff(to_dense(build_number_operator(n)),
                                 oracle::number_operator_dense(n)) <= kDenseTol,
            "number operator mismatch at n = " + std::to_string(n));
  }
  return s.finish();
}

SuiteResult projection_exhaustive(int max_n) {
  Suite s("string projection vs dense conjugation (all strings)");
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    const std::uint64_t count = std::uint64_t{1} << (2 * n);
    for (int k = 0; k <= n; ++k) {
      const ProjectorSpec spec(n, k);
      const auto p = oracle::weight_projector_dense(n, k).matrix();
      for (std::uint64_t code = 0; code < count; ++code) {
        const PauliString str(n, code & qubit_mask(n), code >> n);
        const auto projected = project_string(spec, str);
        const DenseOperator expected(n, p * oracle::kronecker_dense(str).matrix() * p);
        s.check(oracle::max_abs_diff(oracle::kronecker_dense(projected), expected) <= kDenseTol,
                "projection of " + format_string(str) + " at k = " + std::to_string(k));
        const bool keeps_x = std::all_of(
            projected.terms().begin(), projected.terms().end(),
            [&](const PauliTerm& t) { return t.key.x == str.x_mask(); });
        s.check(keeps_x, "X mask changed projecting " + format_string(str));
      }
    }
  }
  return s.finish();
}

SuiteResult clique_validity(int max_n, std::mt19937_64& rng) {
  Suite s("clique partitions validate");
  const int n = std::min(max_n, 6);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    PauliSum op(n);
    for (int t = 0; t < 30; ++t) op.add_term(random_string(n, rng).key(), coeff(rng));
    op = simplify(op);
    if (op.empty()) continue;
    for (auto relation : {Relation::kGeneral, Relation::kQubitwise}) {
      for (auto ordering : {Ordering::kMagnitude, Ordering::kInput, Ordering::kLexicographic}) {
        const auto report = validate(partition(op, relation, ordering), op);
        s.check(report.valid, report.message);
      }
    }
  }
  return s.finish();
}

}  // namespace

std::vector<SuiteResult> run_verification(int max_n, std::uint64_t seed) {
  if (max_n < 1) throw DomainError("max-n must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<SuiteResult> out;
  out.push_back(kravchuk_agreement(max_n));
  out.push_back(kravchuk_identities(max_n));
  out.push_back(pauli_products(max_n, rng));
  out.push_back(projector_laws(max_n));
  out.push_back(projection_exhaustive(max_n));
  out.push_back(clique_validity(max_n, rng));
  return out;
}

}  // namespace numproj
