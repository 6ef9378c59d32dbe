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

#include "numproj/hamio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <nlohmann/json.hpp>
#include <sstream>
#include <unordered_map>

#include "numproj/errors.hpp"

namespace numproj {
namespace {

using json = nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

double parse_number(std::string_view token, std::size_t line) {
  std::string_view body = token;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (body.empty() || ec != std::errc{} || ptr != body.data() + body.size() ||
      !std::isfinite(value)) {
    throw ParseError("malformed number '" + std::string(token) + "'", line);
  }
  return value;
}

// Header lines recognized inside '#' comments: "qubits: N", "name: X",
// "terms: N" (informational, recomputed on emit).
struct Header {
  std::optional<int> qubits;
  std::optional<std::string> name;
  std::vector<std::string> comments;
};

void read_comment(std::string_view line, std::size_t line_no, Header& header) {
  std::string_view body = trim(line.substr(1));
  auto value_after = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (body.substr(0, prefix.size()) == prefix) return trim(body.substr(prefix.size()));
    return std::nullopt;
  };
  if (auto v = value_after("qubits:")) {
    int n = 0;
    const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), n);
    if (ec != std::errc{} || ptr != v->data() + v->size() || n < 1 ||
        n > kMaxPauliQubits) {
      throw ParseError("invalid qubit count '" + std::string(*v) + "'", line_no);
    }
    header.qubits = n;
  } else if (auto v = value_after("name:")) {
    header.name = std::string(*v);
  } else if (value_after("terms:")) {
    // recomputed
  } else {
    header.comments.emplace_back(body);
  }
}

// Collects raw (line, string, coefficient) records and enforces the shared
// rules: consistent lengths, optional padding, duplicate merging.
class DocumentBuilder {
 public:
  void add(std::size_t line, std::string_view pauli, Complex coeff) {
    PauliString s;
    try {
      s = parse_string(pauli);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line);
    }
    if (!first_length_) {
      first_length_ = s.n();
    } else if (!header_.qubits && s.n() != *first_length_) {
      throw ParseError("string " + std::string(pauli) + " has length " +
                           std::to_string(s.n()) + ", expected " +
                           std::to_string(*first_length_),
                       line);
    }
    if (header_.qubits && s.n() > *header_.qubits) {
      throw ParseError("string " + std::string(pauli) + " is longer than the declared " +
                           std::to_string(*header_.qubits) + " qubits",
                       line);
    }
    auto [it, inserted] = seen_.try_emplace(s.key(), Seen{line, entries_.size()});
    if (inserted) {
      entries_.push_back({coeff, s.key()});
    } else {
      entries_[it->second.index].coefficient += coeff;
      warnings_.push_back("line " + std::to_string(line) + ": duplicate term " +
                          std::string(pauli) + " merged with line " +
                          std::to_string(it->second.line));
    }
  }

  Header& header() { return header_; }

  ParsedDocument finish() {
    if (entries_.empty() && !header_.qubits) throw ParseError("empty document");
    if (header_.qubits && first_length_ && *first_length_ > *header_.qubits) {
      throw ParseError("terms are longer than the declared " +
                       std::to_string(*header_.qubits) + " qubits");
    }
    ParsedDocument out;
    out.document.n = header_.qubits ? *header_.qubits : *first_length_;
    out.document.entries = std::move(entries_);
    out.document.name = std::move(header_.name);
    out.document.comments = std::move(header_.comments);
    out.warnings = std::move(warnings_);
    return out;
  }

 private:
  struct Seen {
    std::size_t line;
    std::size_t index;
  };
  Header header_;
  std::optional<int> first_length_;
  std::vector<HamiltonianEntry> entries_;
  std::unordered_map<PauliKey, Seen, PauliKeyHash> seen_;
  std::vector<std::string> warnings_;
};

ParsedDocument parse_text(std::string_view text) {
  DocumentBuilder builder;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto line = trim(lines[i]);
    if (line.empty()) continue;
    if (line.front() == '#') {
      read_comment(line, line_no, builder.header());
      continue;
    }
    const auto tokens = split_whitespace(line);
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError("expected '<re> [<im>] <PAULI_STRING>', got " +
                           std::to_string(tokens.size()) + " fields",
                       line_no);
    }
    const double re = parse_number(tokens[0], line_no);
    const double im = tokens.size() == 3 ? parse_number(tokens[1], line_no) : 0.0;
    builder.add(line_no, tokens.back(), {re, im});
  }
  return builder.finish();
}

ParsedDocument parse_csv(std::string_view text) {
  DocumentBuilder builder;
  const auto lines = split_lines(text);
  bool header_seen = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto line = trim(lines[i]);
    if (line.empty()) continue;
    if (line.front() == '#') {
      read_comment(line, line_no, builder.header());
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!header_seen && !fields.empty() && fields[0] == "string") {
      header_seen = true;
      continue;
    }
    if (fields.size() != 2 && fields.size() != 3) {
      throw ParseError("expected 'string,re[,im]', got " + std::to_string(fields.size()) +
                           " fields",
                       line_no);
    }
    const double re = parse_number(fields[1], line_no);
    const double im = fields.size() == 3 ? parse_number(fields[2], line_no) : 0.0;
    builder.add(line_no, fields[0], {re, im});
  }
  return builder.finish();
}

double json_number(const json& record, const char* field, std::size_t index) {
  if (!record.contains(field)) {
    if (std::string_view(field) == "im") return 0.0;
    throw ParseError("term " + std::to_string(index) + " has no '" + field + "'");
  }
  const auto& v = record.at(field);
  if (!v.is_number()) {
    throw ParseError("term " + std::to_string(index) + " field '" + field +
                     "' is not a number");
  }
  return v.get<double>();
}

ParsedDocument parse_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("terms") || !root.at("terms").is_array()) {
    throw ParseError("JSON document needs an object with a 'terms' array");
  }
  DocumentBuilder builder;
  if (root.contains("qubits")) {
    const auto& q = root.at("qubits");
    if (!q.is_number_integer() || q.get<int>() < 1 || q.get<int>() > kMaxPauliQubits) {
      throw ParseError("invalid 'qubits' value");
    }
    builder.header().qubits = q.get<int>();
  }
  if (root.contains("name") && root.at("name").is_string()) {
    builder.header().name = root.at("name").get<std::string>();
  }
  if (root.contains("comments") && root.at("comments").is_array()) {
    for (const auto& c : root.at("comments")) {
      if (c.is_string()) builder.header().comments.push_back(c.get<std::string>());
    }
  }
  std::size_t index = 0;
  for (const auto& record : root.at("terms")) {
    ++index;
    if (!record.is_object() || !record.contains("string") ||
        !record.at("string").is_string()) {
      throw ParseError("term " + std::to_string(index) + " has no 'string'");
    }
    const double re = json_number(record, "re", index);
    const double im = json_number(record, "im", index);
    // Term index stands in for a line number.
    builder.add(index, record.at("string").get<std::string>(), {re, im});
  }
  return builder.finish();
}

std::vector<HamiltonianEntry> canonical_order(std::vector<HamiltonianEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const HamiltonianEntry& a, const HamiltonianEntry& b) {
              const double ma = std::abs(a.coefficient);
              const double mb = std::abs(b.coefficient);
              if (ma != mb) return ma > mb;
              return lex_less(a.key, b.key);
            });
  return entries;
}

}  // namespace

std::string_view to_string(Format format) {
  switch (format) {
    case Format::kText:
      return "text";
    case Format::kJson:
      return "json";
    case Format::kCsv:
      return "csv";
  }
  return "unknown";
}

Format parse_format(std::string_view text) {
  if (text == "text") return Format::kText;
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  throw DomainError("unknown format '" + std::string(text) + "'");
}

PauliSum HamiltonianDocument::to_sum() const {
  PauliSum sum(n);
  sum.reserve(entries.size());
  for (const auto& e : entries) sum.add_term(e.key, e.coefficient);
  return sum;
}

HamiltonianDocument HamiltonianDocument::from_sum(const PauliSum& sum) {
  HamiltonianDocument doc;
  doc.n = sum.n();
  doc.entries.reserve(sum.size());
  for (const auto& t : sum.terms()) doc.entries.push_back({t.coefficient, t.key});
  return doc;
}

ParsedDocument parse(std::string_view text, Format format) {
  switch (format) {
    case Format::kText:
      return parse_text(text);
    case Format::kJson:
      return parse_json(text);
    case Format::kCsv:
      return parse_csv(text);
  }
  throw DomainError("unknown format");
}

Format detect_format(std::string_view text) {
  for (const auto raw : split_lines(text)) {
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '{') return Format::kJson;
    if (line.front() == '#') continue;
    return line.find(',') != std::string_view::npos ? Format::kCsv : Format::kText;
  }
  return Format::kText;
}

std::string format_double(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string emit(const HamiltonianDocument& doc, Format format) {
  const auto entries = canonical_order(doc.entries);
  std::ostringstream out;
  switch (format) {
    case Format::kText:
    case Format::kCsv: {
      out << "# qubits: " << doc.n << '\n';
      if (doc.name) out << "# name: " << *doc.name << '\n';
      for (const auto& c : doc.comments) out << "# " << c << '\n';
      out << "# terms: " << entries.size() << '\n';
      if (format == Format::kCsv) out << "string,re,im\n";
      for (const auto& e : entries) {
        const std::string pauli = format_key(doc.n, e.key);
        const std::string re = format_double(e.coefficient.real());
        const std::string im = format_double(e.coefficient.imag());
        if (format == Format::kCsv) {
          out << pauli << ',' << re << ',' << im << '\n';
        } else if (e.coefficient.imag() == 0.0) {
          out << re << ' ' << pauli << '\n';
        } else {
          out << re << ' ' << im << ' ' << pauli << '\n';
        }
      }
      break;
    }
    case Format::kJson: {
      json root;
      root["qubits"] = doc.n;
      if (doc.name) root["name"] = *doc.name;
      if (!doc.comments.empty()) root["comments"] = doc.comments;
      root["terms"] = json::array();
      for (const auto& e : entries) {
        root["terms"].push_back({{"string", format_key(doc.n, e.key)},
                                 {"re", e.coefficient.real()},
                                 {"im", e.coefficient.imag()}});
      }
      out << root.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

std::string emit(const PauliSum& sum, Format format) {
  return emit(HamiltonianDocument::from_sum(sum), format);
}

}  // namespace numproj
