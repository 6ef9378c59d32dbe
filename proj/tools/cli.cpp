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

#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "numproj/numproj.hpp"
#include "numproj/verify.hpp"

namespace numproj::cli {
namespace {

using json = nlohmann::json;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open input file '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file '" + path + "'");
  file << text;
}

PauliSum load_operator(const std::string& path, std::ostream& err) {
  const std::string text = read_input(path);
  auto parsed = parse(text, detect_format(text));
  for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
  return parsed.document.to_sum();
}

std::int64_t narrow(Int128 v) { return static_cast<std::int64_t>(v); }

std::string format_table(const KravchukTable& t, Format format) {
  std::ostringstream os;
  const int n = t.n();
  switch (format) {
    case Format::kText: {
      std::size_t width = 1;
      for (int k = 0; k <= n; ++k) {
        for (int m = 0; m <= n; ++m) width = std::max(width, to_string(t(k, m)).size());
      }
      for (int k = 0; k <= n; ++k) {
        for (int m = 0; m <= n; ++m) {
          if (m > 0) os << ' ';
          os << std::setw(static_cast<int>(width)) << to_string(t(k, m));
        }
        os << '\n';
      }
      break;
    }
    case Format::kCsv:
      for (int k = 0; k <= n; ++k) {
        for (int m = 0; m <= n; ++m) os << (m > 0 ? "," : "") << to_string(t(k, m));
        os << '\n';
      }
      break;
    case Format::kJson: {
      json rows = json::array();
      for (int k = 0; k <= n; ++k) {
        json row = json::array();
        for (int m = 0; m <= n; ++m) row.push_back(narrow(t(k, m)));
        rows.push_back(row);
      }
      os << json{{"n", n}, {"rows", rows}}.dump() << '\n';
      break;
    }
  }
  return os.str();
}

std::string describe(const Counterexample& c) {
  std::ostringstream os;
  if (c.k) os << " k=" << *c.k;
  if (c.k_prime) os << " k'=" << *c.k_prime;
  if (c.m) os << " m=" << *c.m;
  os << " expected " << to_string(c.expected) << " got " << to_string(c.actual);
  return os.str();
}

std::string format_identities(const IdentityReport& report, Format format) {
  std::ostringstream os;
  if (format == Format::kJson) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      json entry{{"identity", std::string(to_string(c.identity))}, {"passed", c.passed}};
      if (c.counterexample) {
        const auto& ce = *c.counterexample;
        json coords;
        if (ce.k) coords["k"] = *ce.k;
        if (ce.k_prime) coords["k_prime"] = *ce.k_prime;
        if (ce.m) coords["m"] = *ce.m;
        coords["expected"] = to_string(ce.expected);
        coords["actual"] = to_string(ce.actual);
        entry["counterexample"] = coords;
      }
      checks.push_back(entry);
    }
    os << json{{"n", report.n}, {"checks", checks}}.dump() << '\n';
    return os.str();
  }
  for (const auto& c : report.checks) {
    os << to_string(c.identity) << ": " << (c.passed ? "pass" : "FAIL");
    if (c.counterexample) os << describe(*c.counterexample);
    os << '\n';
  }
  return os.str();
}

std::string format_partition(const CliquePartition& p, int n, Format format) {
  std::ostringstream os;
  if (format == Format::kJson) {
    json cliques = json::array();
    for (const auto& c : p.cliques) {
      json terms = json::array();
      for (const auto& key : c) terms.push_back(format_key(n, key));
      cliques.push_back(terms);
    }
    os << json{{"relation", std::string(to_string(p.relation))},
               {"policy", std::string(to_string(p.ordering))},
               {"clique_count", p.size()},
               {"source_term_count", p.source_term_count},
               {"cliques", cliques}}
              .dump(2)
       << '\n';
    return os.str();
  }
  os << "# relation: " << to_string(p.relation) << '\n'
     << "# order: " << to_string(p.ordering) << '\n'
     << "# terms: " << p.source_term_count << '\n'
     << "# cliques: " << p.size() << '\n';
  for (std::size_t i = 0; i < p.cliques.size(); ++i) {
    os << "clique " << i << " (" << p.cliques[i].size() << "):";
    for (const auto& key : p.cliques[i]) os << ' ' << format_key(n, key);
    os << '\n';
  }
  return os.str();
}

std::string format_all_policies(const PauliSum& op, Format format) {
  std::ostringstream os;
  json rows = json::array();
  if (format != Format::kJson) {
    os << "# terms: " << op.size() << '\n' << "relation  order      cliques\n";
  }
  for (auto relation : {Relation::kGeneral, Relation::kQubitwise}) {
    for (auto ordering : {Ordering::kMagnitude, Ordering::kInput, Ordering::kLexicographic}) {
      const auto p = partition(op, relation, ordering);
      if (format == Format::kJson) {
        rows.push_back({{"relation", std::string(to_string(relation))},
                        {"policy", std::string(to_string(ordering))},
                        {"clique_count", p.size()}});
      } else {
        os << std::left << std::setw(10) << to_string(relation) << std::setw(11)
           << to_string(ordering) << p.size() << '\n';
      }
    }
  }
  if (format == Format::kJson) {
    os << json{{"source_term_count", op.size()}, {"partitions", rows}}.dump(2) << '\n';
  }
  return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Particle-number projection operators, Kravchuk coefficients and "
               "commuting-clique grouping for qubit operators",
               "numproj"};
  app.require_subcommand(1);

  std::function<int()> action;
  const std::vector<std::string> all_formats{"text", "csv", "json"};

  int n = 0;
  int k = 0;
  int m = 0;
  std::string format = "text";
  std::string input;
  std::string output;

  auto* coeff_cmd = app.add_subcommand("coeff", "Print C(n, k, m)");
  coeff_cmd->add_option("n", n)->required();
  coeff_cmd->add_option("k", k)->required();
  coeff_cmd->add_option("m", m)->required();
  coeff_cmd->callback([&] {
    action = [&] {
      out << to_string(coefficient(n, k, m)) << '\n';
      return kOk;
    };
  });

  auto* table_cmd = app.add_subcommand("table", "Print the C(n, k, m) grid (rows k, columns m)");
  table_cmd->add_option("n", n)->required();
  table_cmd->add_option("--format", format)->check(CLI::IsMember(all_formats));
  table_cmd->callback([&] {
    action = [&] {
      out << format_table(table(n), parse_format(format));
      return kOk;
    };
  });

  auto* identities_cmd =
      app.add_subcommand("identities", "Check the column/row sum and orthogonality identities");
  identities_cmd->add_option("n", n)->required();
  identities_cmd->add_option("--format", format)
      ->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));
  identities_cmd->callback([&] {
    action = [&] {
      const auto report = verify_identities(n);
      out << format_identities(report, parse_format(format));
      return report.all_passed() ? kOk : kFailure;
    };
  });

  auto* projector_cmd =
      app.add_subcommand("projector", "Pauli expansion of the weight-k projector on n qubits");
  projector_cmd->add_option("n", n)->required();
  projector_cmd->add_option("k", k)->required();
  projector_cmd->add_option("--format", format)->check(CLI::IsMember(all_formats));
  projector_cmd->add_option("--output", output, "Write to FILE instead of stdout");
  projector_cmd->callback([&] {
    action = [&] {
      write_output(output, emit(build_projector(ProjectorSpec(n, k)), parse_format(format)), out);
      return kOk;
    };
  });

  double tol = kDefaultTolerance;
  unsigned threads = 1;
  auto* project_cmd =
      app.add_subcommand("project", "Project an operator file onto a fixed particle number");
  project_cmd->add_option("--input", input, "Operator file ('-' for stdin)")->required();
  project_cmd->add_option("--particles", k, "Particle number K")->required();
  project_cmd->add_option("--tol", tol, "Pruning tolerance")->check(CLI::NonNegativeNumber);
  project_cmd->add_option("--output", output, "Write to FILE instead of stdout");
  project_cmd->add_option("--format", format)->check(CLI::IsMember(all_formats));
  project_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
  project_cmd->callback([&] {
    action = [&] {
      const PauliSum op = load_operator(input, err);
      ProjectOptions options;
      options.tolerance = tol;
      options.threads = threads;
      const auto projected = project_operator(ProjectorSpec(op.n(), k), op, options);
      write_output(output, emit(projected, parse_format(format)), out);
      return kOk;
    };
  });

  std::string relation = "general";
  std::string order = "magnitude";
  bool all_policies = false;
  auto* partition_cmd =
      app.add_subcommand("partition", "Greedy commuting-clique partition of an operator file");
  partition_cmd->add_option("--input", input, "Operator file ('-' for stdin)")->required();
  partition_cmd->add_option("--relation", relation)
      ->check(CLI::IsMember(std::vector<std::string>{"general", "qubitwise"}));
  partition_cmd->add_option("--order", order)
      ->check(CLI::IsMember(std::vector<std::string>{"magnitude", "input", "lex"}));
  partition_cmd->add_flag("--all", all_policies, "Report clique counts for every policy");
  partition_cmd->add_option("--format", format)
      ->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));
  partition_cmd->add_option("--output", output, "Write to FILE instead of stdout");
  partition_cmd->callback([&] {
    action = [&] {
      const PauliSum op = simplify(load_operator(input, err));
      const Format fmt = parse_format(format);
      if (all_policies) {
        write_output(output, format_all_policies(op, fmt), out);
      } else {
        const auto p = partition(op, parse_relation(relation), parse_ordering(order));
        write_output(output, format_partition(p, op.n(), fmt), out);
      }
      return kOk;
    };
  });

  int max_n = 4;
  auto* verify_cmd = app.add_subcommand("verify", "Run the exact and dense-oracle self checks");
  verify_cmd->add_option("--max-n", max_n, "Largest qubit count to check")->required();
  verify_cmd->callback([&] {
    action = [&] {
      bool ok = true;
      for (const auto& suite : run_verification(max_n)) {
        out << (suite.passed ? "PASS " : "FAIL ") << suite.name << " (" << suite.checks
            << " checks)";
        if (!suite.passed) out << ": " << suite.detail;
        out << '\n';
        ok = ok && suite.passed;
      }
      return ok ? kOk : kFailure;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kFailure;
  }

  try {
    return action();
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"numproj"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace numproj::cli
