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

#include "numproj/cliques.hpp"

#include <algorithm>
#include <unordered_map>

#include "numproj/errors.hpp"

namespace numproj {

std::string_view to_string(Relation relation) {
  return relation == Relation::kGeneral ? "general" : "qubitwise";
}

std::string_view to_string(Ordering ordering) {
  switch (ordering) {
    case Ordering::kMagnitude:
      return "magnitude";
    case Ordering::kInput:
      return "input";
    case Ordering::kLexicographic:
      return "lex";
  }
  return "unknown";
}

Relation parse_relation(std::string_view text) {
  if (text == "general") return Relation::kGeneral;
  if (text == "qubitwise") return Relation::kQubitwise;
  throw DomainError("unknown commutation relation '" + std::string(text) + "'");
}

Ordering parse_ordering(std::string_view text) {
  if (text == "magnitude") return Ordering::kMagnitude;
  if (text == "input") return Ordering::kInput;
  if (text == "lex") return Ordering::kLexicographic;
  throw DomainError("unknown ordering policy '" + std::string(text) + "'");
}

bool related(Relation relation, const PauliKey& a, const PauliKey& b) {
  return relation == Relation::kGeneral ? commutes(a, b) : qubitwise_commutes(a, b);
}

CliquePartition partition(const PauliSum& op, Relation relation, Ordering ordering) {
  if (op.empty()) throw DomainError("cannot partition an empty operator");

  std::vector<PauliTerm> order;
  switch (ordering) {
    case Ordering::kMagnitude:
      order = op.sorted_terms();
      break;
    case Ordering::kInput:
      order.assign(op.terms().begin(), op.terms().end());
      break;
    case Ordering::kLexicographic:
      order.assign(op.terms().begin(), op.terms().end());
      std::sort(order.begin(), order.end(),
                [](const PauliTerm& a, const PauliTerm& b) { return lex_less(a.key, b.key); });
      break;
  }

  CliquePartition out{relation, ordering, {}, op.size()};
  for (const auto& term : order) {
    auto fits = [&](const std::vector<PauliKey>& clique) {
      return std::all_of(clique.begin(), clique.end(), [&](const PauliKey& member) {
        return related(relation, term.key, member);
      });
    };
    auto it = std::find_if(out.cliques.begin(), out.cliques.end(), fits);
    if (it == out.cliques.end()) {
      out.cliques.push_back({term.key});
    } else {
      it->push_back(term.key);
    }
  }
  return out;
}

ValidationReport validate(const CliquePartition& p, const PauliSum& op) {
  const int n = op.n();
  auto fail = [](std::string message) {
    ValidationReport r;
    r.valid = false;
    r.message = std::move(message);
    return r;
  };

  std::unordered_map<PauliKey, std::size_t, PauliKeyHash> owner;
  for (std::size_t c = 0; c < p.cliques.size(); ++c) {
    if (p.cliques[c].empty()) {
      auto r = fail("clique " + std::to_string(c) + " is empty");
      r.clique = c;
      return r;
    }
    for (const auto& key : p.cliques[c]) {
      if (!op.contains(key)) {
        auto r = fail("term " + format_key(n, key) + " in clique " +
                      std::to_string(c) + " is not in the operator");
        r.clique = c;
        return r;
      }
      auto [it, inserted] = owner.try_emplace(key, c);
      if (!inserted) {
        auto r = fail("term " + format_key(n, key) + " appears in cliques " +
                      std::to_string(it->second) + " and " + std::to_string(c));
        r.clique = c;
        return r;
      }
    }
  }
  for (const auto& t : op.terms()) {
    if (!owner.contains(t.key)) {
      return fail("term " + format_key(n, t.key) + " is not covered");
    }
  }
  if (p.source_term_count != op.size()) {
    return fail("source term count " + std::to_string(p.source_term_count) +
                " does not match operator size " + std::to_string(op.size()));
  }
  for (std::size_t c = 0; c < p.cliques.size(); ++c) {
    const auto& clique = p.cliques[c];
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        if (!related(p.relation, clique[i], clique[j])) {
          auto r = fail(format_key(n, clique[i]) + " and " + format_key(n, clique[j]) +
                        " in clique " + std::to_string(c) + " violate " +
                        std::string(to_string(p.relation)) + " commutation");
          r.clique = c;
          r.violating_pair = std::make_pair(clique[i], clique[j]);
          return r;
        }
      }
    }
  }
  return {};
}

}  // namespace numproj
