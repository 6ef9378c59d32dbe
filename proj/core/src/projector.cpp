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

#include "numproj/projector.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <limits>
#include <optional>
#include <thread>

#include "numproj/errors.hpp"
#include "numproj/kravchuk.hpp"

namespace numproj {
namespace {

// C(size, weight, a) for a = 0..size, with the empty register (size 0)
// contributing the single factor 1.
std::vector<Int128> subset_weights(int size, int weight) {
  if (size == 0) return {1};
  std::vector<Int128> out(static_cast<std::size_t>(size) + 1);
  for (int a = 0; a <= size; ++a) out[a] = coefficient(size, weight, a);
  return out;
}

Int128 nonzero_term_count(const std::vector<Int128>& weights) {
  const int size = static_cast<int>(weights.size()) - 1;
  Int128 count = 0;
  for (int a = 0; a <= size; ++a) {
    if (weights[a] != 0) count = checked_add(count, binomial(size, a));
  }
  return count;
}

std::uint64_t saturate(Int128 v) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  return v > static_cast<Int128>(kMax) ? kMax : static_cast<std::uint64_t>(v);
}

// All submasks of `mask` whose popcount has a nonzero weight, with that weight.
std::vector<std::pair<std::uint64_t, Int128>> weighted_submasks(
    std::uint64_t mask, const std::vector<Int128>& weights) {
  std::vector<std::pair<std::uint64_t, Int128>> out;
  std::uint64_t sub = mask;
  while (true) {
    const Int128 w = weights[std::popcount(sub)];
    if (w != 0) out.emplace_back(sub, w);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
  return out;
}

struct Factorization {
  std::vector<Int128> support;     // indexed by Z count inside the X support
  std::vector<Int128> complement;  // indexed by Z count outside it
};

// Empty when the projection of any string with this X mask vanishes.
std::optional<Factorization> factorize(const ProjectorSpec& spec,
                                       std::uint64_t x_mask) {
  const int w = std::popcount(x_mask);
  if (w % 2 == 1) return std::nullopt;
  const int inside = w / 2;
  const int outside = spec.k() - inside;
  const int rest = spec.n() - w;
  if (outside < 0 || outside > rest) return std::nullopt;
  return Factorization{subset_weights(w, inside), subset_weights(rest, outside)};
}

}  // namespace

ProjectorSpec::ProjectorSpec(int n, int k) : n_(n), k_(k) {
  if (n < 1 || n > kMaxPauliQubits) {
    throw DomainError("n = " + std::to_string(n) + " is outside [1, " +
                      std::to_string(kMaxPauliQubits) + "]");
  }
  if (k < 0 || k > n) {
    throw DomainError("k = " + std::to_string(k) + " is outside [0, " +
                      std::to_string(n) + "]");
  }
}

std::vector<Dyadic> projector_coefficients(const ProjectorSpec& spec) {
  std::vector<Dyadic> out;
  out.reserve(static_cast<std::size_t>(spec.n()) + 1);
  for (int m = 0; m <= spec.n(); ++m) {
    out.emplace_back(coefficient(spec.n(), spec.k(), m), spec.n());
  }
  return out;
}

std::uint64_t projector_term_count(const ProjectorSpec& spec) {
  return saturate(nonzero_term_count(subset_weights(spec.n(), spec.k())));
}

PauliSum build_projector(const ProjectorSpec& spec) {
  const int n = spec.n();
  if (n > kMaxProjectorQubits) {
    throw ResourceError("projector expansion on " + std::to_string(n) +
                        " qubits exceeds the " +
                        std::to_string(kMaxProjectorQubits) +
                        "-qubit limit; use project_string/project_operator, "
                        "which never materialize the projector");
  }
  std::vector<double> by_weight;
  for (const auto& c : projector_coefficients(spec)) by_weight.push_back(c.to_double());

  PauliSum out(n);
  out.reserve(projector_term_count(spec));
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t z = 0; z < end; ++z) {
    const double c = by_weight[std::popcount(z)];
    if (c != 0.0) out.add_term(PauliKey{0, z}, c);
  }
  return out;
}

PauliSum build_number_operator(int n) {
  if (n < 1 || n > kMaxProjectorQubits) {
    throw DomainError("number operator needs 1 <= n <= " +
                      std::to_string(kMaxProjectorQubits) + ", got " +
                      std::to_string(n));
  }
  PauliSum out = PauliSum::identity(n, 0.5 * n);
  for (int q = 0; q < n; ++q) out.add_term(PauliKey{0, std::uint64_t{1} << q}, -0.5);
  return out;
}

std::uint64_t projected_term_count(const ProjectorSpec& spec, const PauliString& s) {
  if (s.n() != spec.n()) {
    throw DimensionError("string has " + std::to_string(s.n()) +
                         " qubits, projector has " + std::to_string(spec.n()));
  }
  const auto f = factorize(spec, s.x_mask());
  if (!f) return 0;
  return saturate(
      checked_mul(nonzero_term_count(f->support), nonzero_term_count(f->complement)));
}

PauliSum project_string(const ProjectorSpec& spec, const PauliString& s,
                        Complex coeff) {
  const std::uint64_t count = projected_term_count(spec, s);
  const int n = spec.n();
  PauliSum out(n);
  if (count == 0) return out;
  if (count > kMaxGeneratedTerms) {
    throw ResourceError("projecting " + format_string(s) + " would generate " +
                        std::to_string(count) + " terms (limit " +
                        std::to_string(kMaxGeneratedTerms) +
                        "); for small n use the dense route");
  }

  const auto f = factorize(spec, s.x_mask());
  const std::uint64_t support = s.x_mask();
  const std::uint64_t complement = qubit_mask(n) & ~support;
  const auto inner = weighted_submasks(support, f->support);
  const auto outer = weighted_submasks(complement, f->complement);

  out.reserve(count);
  for (const auto& [t, wt] : inner) {
    for (const auto& [u, wu] : outer) {
      const PauliString product = multiply(s, PauliString(n, 0, t | u));
      const double value = (Dyadic(wt, 0) * Dyadic(wu, n)).to_double();
      out.add_term(product, coeff * value);
    }
  }
  return out;
}

PauliSum project_operator(const ProjectorSpec& spec, const PauliSum& op,
                          const ProjectOptions& options) {
  if (op.n() != spec.n()) {
    throw DimensionError("operator has " + std::to_string(op.n()) +
                         " qubits, projector has " + std::to_string(spec.n()));
  }
  if (!(options.tolerance >= 0.0)) throw DomainError("tolerance must be nonnegative");

  const int n = spec.n();
  const auto terms = op.terms();
  auto project_term = [&](std::size_t i) {
    const auto& t = terms[i];
    return project_string(spec, PauliString(n, t.key.x, t.key.z), t.coefficient);
  };

  PauliSum merged(n);
  auto merge = [&merged](const PauliSum& part) {
    for (const auto& t : part.terms()) merged.add_term(t.key, t.coefficient);
  };

  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency()
                                          : options.threads;
  threads = std::max(1U, std::min<unsigned>(threads, terms.size()));

  if (threads == 1) {
    for (std::size_t i = 0; i < terms.size(); ++i) merge(project_term(i));
    return simplify(merged, options.tolerance);
  }

  // Workers fill one batch at a time; the batch is merged in input order so
  // the result is independent of scheduling and thread count.
  const std::size_t batch = static_cast<std::size_t>(threads) * 8;
  for (std::size_t begin = 0; begin < terms.size(); begin += batch) {
    const std::size_t end = std::min(terms.size(), begin + batch);
    std::vector<std::optional<PauliSum>> parts(end - begin);
    std::vector<std::exception_ptr> errors(threads);
    std::atomic<std::size_t> next{begin};
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = next++; i < end; i = next++) {
              parts[i - begin] = project_term(i);
            }
          } catch (...) {
            errors[w] = std::current_exception();
            next = end;
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (const auto& p : parts) merge(*p);
  }
  return simplify(merged, options.tolerance);
}

}  // namespace numproj
