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

#include "numproj/kravchuk.hpp"

#include <array>
#include <string>

#include "numproj/errors.hpp"

namespace numproj {
namespace {

using PascalRows =
    std::array<std::array<Int128, kMaxKravchukQubits + 1>, kMaxKravchukQubits + 1>;

const PascalRows& pascal() {
  static const PascalRows rows = [] {
    PascalRows p{};
    for (int a = 0; a <= kMaxKravchukQubits; ++a) {
      p[a][0] = 1;
      for (int b = 1; b <= a; ++b) {
        p[a][b] = checked_add(p[a - 1][b - 1], b <= a - 1 ? p[a - 1][b] : 0);
      }
    }
    return p;
  }();
  return rows;
}

void check_n(int n) {
  if (n < 1 || n > kMaxKravchukQubits) {
    throw DomainError("n = " + std::to_string(n) + " is outside [1, " +
                      std::to_string(kMaxKravchukQubits) + "]");
  }
}

void check_index(const char* name, int value, int n) {
  if (value < 0 || value > n) {
    throw DomainError(std::string(name) + " = " + std::to_string(value) +
                      " is outside [0, " + std::to_string(n) + "]");
  }
}

// Entry (k, m) of a table of size n, zero for k outside [0, n].
Int128 entry_or_zero(const KravchukTable& t, int k, int m) {
  if (k < 0 || k > t.n()) return 0;
  return t(k, m);
}

}  // namespace

Int128 binomial(int a, int b) {
  if (a < 0 || a > kMaxKravchukQubits) {
    throw DomainError("binomial: a = " + std::to_string(a) + " is outside [0, " +
                      std::to_string(kMaxKravchukQubits) + "]");
  }
  if (b < 0 || b > a) return 0;
  return pascal()[a][b];
}

Int128 coefficient(int n, int k, int m) {
  check_n(n);
  check_index("k", k, n);
  check_index("m", m, n);
  Int128 sum = 0;
  for (int l = 0; l <= m; ++l) {
    const Int128 term = checked_mul(binomial(n - m, k - l), binomial(m, l));
    sum = (l % 2 == 0) ? checked_add(sum, term) : checked_sub(sum, term);
  }
  return sum;
}

KravchukTable KravchukTable::from_entries(int n, std::vector<Int128> entries) {
  check_n(n);
  const auto dim = static_cast<std::size_t>(n + 1);
  if (entries.size() != dim * dim) {
    throw DimensionError("table for n = " + std::to_string(n) + " needs " +
                         std::to_string(dim * dim) + " entries, got " +
                         std::to_string(entries.size()));
  }
  return KravchukTable(n, std::move(entries));
}

Int128 KravchukTable::at(int k, int m) const {
  check_index("k", k, n_);
  check_index("m", m, n_);
  return (*this)(k, m);
}

std::span<const Int128> KravchukTable::row(int k) const {
  check_index("k", k, n_);
  return std::span<const Int128>(entries_).subspan(
      static_cast<std::size_t>(k) * dimension(), dimension());
}

std::vector<Int128> KravchukTable::column(int m) const {
  check_index("m", m, n_);
  std::vector<Int128> out;
  out.reserve(dimension());
  for (int k = 0; k <= n_; ++k) out.push_back((*this)(k, m));
  return out;
}

KravchukTable table(int n) {
  check_n(n);
  KravchukTable current(1, {1, 1, 1, -1});
  for (int size = 2; size <= n; ++size) {
    const int dim = size + 1;
    std::vector<Int128> next(static_cast<std::size_t>(dim) * dim);
    for (int k = 0; k <= size; ++k) {
      for (int m = 0; m <= size; ++m) {
        Int128 value;
        if (m < size) {
          value = checked_add(entry_or_zero(current, k, m),
                              entry_or_zero(current, k - 1, m));
        } else {
          value = checked_sub(entry_or_zero(current, k, m - 1),
                              entry_or_zero(current, k - 1, m - 1));
        }
        next[static_cast<std::size_t>(k) * dim + m] = value;
      }
    }
    current = KravchukTable(size, std::move(next));
  }
  return current;
}

KravchukTable closed_form_table(int n) {
  check_n(n);
  const int dim = n + 1;
  std::vector<Int128> entries(static_cast<std::size_t>(dim) * dim);
  for (int k = 0; k <= n; ++k) {
    for (int m = 0; m <= n; ++m) {
      entries[static_cast<std::size_t>(k) * dim + m] = coefficient(n, k, m);
    }
  }
  return KravchukTable(n, std::move(entries));
}

std::vector<Int128> generating_row(int n, int m) {
  check_n(n);
  check_index("m", m, n);
  std::vector<Int128> poly{1};
  auto multiply_linear = [&poly](int sign) {
    // poly *= (1 + sign * x)
    poly.push_back(0);
    for (std::size_t i = poly.size() - 1; i > 0; --i) {
      poly[i] = sign > 0 ? checked_add(poly[i], poly[i - 1])
                         : checked_sub(poly[i], poly[i - 1]);
    }
  };
  for (int i = 0; i < m; ++i) multiply_linear(-1);
  for (int i = 0; i < n - m; ++i) multiply_linear(+1);
  return poly;
}

std::string_view to_string(Identity identity) {
  switch (identity) {
    case Identity::kColumnSum:
      return "column-sum";
    case Identity::kRowOrthogonality:
      return "row-orthogonality";
    case Identity::kRowSum:
      return "row-sum";
    case Identity::kNumberOperator:
      return "number-operator-sum";
  }
  return "unknown";
}

bool IdentityReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

IdentityReport verify_identities(int n) { return verify_identities(table(n)); }

IdentityReport verify_identities(const KravchukTable& t) {
  const int n = t.n();
  const Int128 full = pow2(n);
  const Int128 half = pow2(n - 1);
  IdentityReport report{n, {}};

  auto record = [&report](Identity id, std::optional<Counterexample> failure) {
    report.checks.push_back({id, !failure.has_value(), failure});
  };

  {
    std::optional<Counterexample> failure;
    for (int m = 0; m <= n && !failure; ++m) {
      Int128 sum = 0;
      for (int k = 0; k <= n; ++k) sum = checked_add(sum, t(k, m));
      const Int128 expected = m == 0 ? full : 0;
      if (sum != expected) failure = Counterexample{{}, {}, m, expected, sum};
    }
    record(Identity::kColumnSum, failure);
  }

  {
    std::optional<Counterexample> failure;
    for (int k = 0; k <= n && !failure; ++k) {
      for (int kp = k; kp <= n && !failure; ++kp) {
        Int128 sum = 0;
        for (int m = 0; m <= n; ++m) {
          sum = checked_add(
              sum, checked_mul(checked_mul(binomial(n, m), t(k, m)), t(kp, m)));
        }
        const Int128 expected = k == kp ? checked_mul(full, binomial(n, k)) : 0;
        if (sum != expected) failure = Counterexample{k, kp, {}, expected, sum};
      }
    }
    record(Identity::kRowOrthogonality, failure);
  }

  {
    std::optional<Counterexample> failure;
    for (int k = 0; k <= n && !failure; ++k) {
      Int128 sum = 0;
      for (int m = 0; m <= n; ++m) {
        sum = checked_add(sum, checked_mul(binomial(n, m), t(k, m)));
      }
      const Int128 expected = k == 0 ? full : 0;
      if (sum != expected) failure = Counterexample{k, {}, {}, expected, sum};
    }
    record(Identity::kRowSum, failure);
  }

  {
    std::optional<Counterexample> failure;
    for (int m = 0; m <= n && !failure; ++m) {
      Int128 sum = 0;
      for (int k = 0; k <= n; ++k) sum = checked_add(sum, checked_mul(k, t(k, m)));
      Int128 expected = 0;
      if (m == 0) expected = checked_mul(n, half);
      if (m == 1) expected = -half;
      if (sum != expected) failure = Counterexample{{}, {}, m, expected, sum};
    }
    record(Identity::kNumberOperator, failure);
  }

  return report;
}

}  // namespace numproj
