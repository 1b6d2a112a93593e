// Copyright 2026 The qaesolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qaesolve/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "qaesolve/errors.hpp"

namespace qaesolve {

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw ArgumentError("cannot format number");
  return {buf, end};
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

// Non-blank lines with their 1-based line numbers.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const auto raw = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++number;
    auto tokens = split_ws(raw);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

std::size_t last_line(std::string_view text) {
  std::size_t n = 1;
  for (char c : text)
    if (c == '\n') ++n;
  if (!text.empty() && text.back() == '\n') --n;
  return n;
}

double parse_real(std::string_view tok, std::size_t line) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw ParseError("invalid number '" + std::string(tok) + "'", line);
  return v;
}

std::size_t parse_count(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("invalid non-negative integer '" + std::string(tok) + "'",
                     line);
  return v;
}

}  // namespace

SymmetricMatrix parse_matrix(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty matrix file", 1);
  const auto& header = lines.front();
  if (header.tokens.size() != 1)
    throw ParseError("expected the matrix dimension alone on the first line",
                     header.number);
  const std::size_t n = parse_count(header.tokens[0], header.number);
  if (n == 0) throw ParseError("matrix dimension must be positive", header.number);

  std::vector<double> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (r + 1 >= lines.size())
      throw ParseError("missing matrix row " + std::to_string(r + 1) + " of " +
                           std::to_string(n) + " (unexpected end of input)",
                       last_line(text) + 1);
    const auto& line = lines[r + 1];
    if (line.tokens.size() != n)
      throw ParseError("matrix row " + std::to_string(r + 1) + " has " +
                           std::to_string(line.tokens.size()) +
                           " values, expected " + std::to_string(n),
                       line.number);
    for (auto tok : line.tokens) {
      const double v = parse_real(tok, line.number);
      if (!std::isfinite(v))
        throw ParseError("non-finite matrix entry", line.number);
      entries.push_back(v);
    }
  }
  if (lines.size() > n + 1)
    throw ParseError("unexpected content after " + std::to_string(n) +
                         " matrix rows",
                     lines[n + 1].number);
  return {n, std::move(entries)};
}

std::string serialize_matrix(const SymmetricMatrix& a) {
  std::string out = std::to_string(a.size()) + "\n";
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j) out += ' ';
      out += format_double(a(i, j));
    }
    out += '\n';
  }
  return out;
}

QuboProblem parse_qubo(std::string_view text) {
  const auto lines = tokenize(text);
  bool have_header = false;
  std::size_t max_nodes = 0;
  std::size_t want_nodes = 0;
  std::size_t want_couplers = 0;
  std::size_t nodes = 0;
  std::size_t coupler_count = 0;
  double offset = 0.0;
  std::vector<Term> terms;

  for (const auto& line : lines) {
    const auto& t = line.tokens;
    if (t[0].front() == 'c') {
      if (t.size() == 3 && t[0] == "c" && t[1] == "offset")
        offset += parse_real(t[2], line.number);
      continue;
    }
    if (t[0] == "p") {
      if (have_header) throw ParseError("duplicate 'p' header", line.number);
      if (t.size() != 6 || t[1] != "qubo")
        throw ParseError(
            "header must be 'p qubo 0 <maxNodes> <nNodes> <nCouplers>'",
            line.number);
      parse_count(t[2], line.number);
      max_nodes = parse_count(t[3], line.number);
      want_nodes = parse_count(t[4], line.number);
      want_couplers = parse_count(t[5], line.number);
      if (max_nodes == 0)
        throw ParseError("maxNodes must be positive", line.number);
      have_header = true;
      continue;
    }
    if (!have_header)
      throw ParseError("coefficient line before the 'p qubo' header",
                       line.number);
    if (t.size() != 3)
      throw ParseError("expected '<i> <j> <value>'", line.number);
    const std::size_t i = parse_count(t[0], line.number);
    const std::size_t j = parse_count(t[1], line.number);
    const double v = parse_real(t[2], line.number);
    if (i >= max_nodes || j >= max_nodes)
      throw ParseError("index out of range for maxNodes " +
                           std::to_string(max_nodes),
                       line.number);
    if (!std::isfinite(v)) throw ParseError("non-finite value", line.number);
    if (i == j) {
      if (++nodes > want_nodes)
        throw ParseError("more node lines than the header's nNodes " +
                             std::to_string(want_nodes),
                         line.number);
    } else if (++coupler_count > want_couplers) {
      throw ParseError("more coupler lines than the header's nCouplers " +
                           std::to_string(want_couplers),
                       line.number);
    }
    terms.push_back({i, j, v});
  }
  if (!have_header) throw ParseError("missing 'p qubo' header", 0);
  if (nodes != want_nodes || coupler_count != want_couplers)
    throw ParseError("header declares " + std::to_string(want_nodes) +
                         " nodes and " + std::to_string(want_couplers) +
                         " couplers, body has " + std::to_string(nodes) +
                         " and " + std::to_string(coupler_count),
                     last_line(text));
  return QuboProblem::from_terms(max_nodes, terms, offset);
}

std::string serialize_qubo(const QuboProblem& q) {
  std::string out = "c qaesolve\n";
  if (q.offset() != 0.0) out += "c offset " + format_double(q.offset()) + "\n";
  out += "p qubo 0 " + std::to_string(q.num_vars()) + " " +
         std::to_string(q.num_vars()) + " " +
         std::to_string(q.couplers().size()) + "\n";
  for (std::size_t i = 0; i < q.num_vars(); ++i)
    out += std::to_string(i) + " " + std::to_string(i) + " " +
           format_double(q.linear(i)) + "\n";
  // Upper-triangular (col < row) as qbsolv writes them.
  for (const auto& c : q.couplers())
    out += std::to_string(c.col) + " " + std::to_string(c.row) + " " +
           format_double(c.value) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("error writing '" + path + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

NamedConfig parse_config(std::string_view text,
                         const std::string& default_name) {
  NamedConfig cfg{default_name, QaeOptions{}};
  auto& solver = cfg.qae.solver;
  auto& dec = solver.decomposer;

  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    const auto eq = raw.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("expected 'key = value'", number);
    const std::string key(trim(raw.substr(0, eq)));
    const std::string_view value = trim(raw.substr(eq + 1));
    if (value.empty()) throw ParseError("empty value for '" + key + "'", number);
    auto count = [&] { return parse_count(value, number); };
    auto real = [&] { return parse_real(value, number); };

    try {
      if (key == "name") cfg.name = std::string(value);
      else if (key == "method") solver.method = parse_method(std::string(value));
      else if (key == "backend") dec.backend = parse_backend(std::string(value));
      else if (key == "subqubo_size") dec.subqubo_size = count();
      else if (key == "repeat_limit") dec.repeat_limit = count();
      else if (key == "parallel_subqubos") dec.parallel_subqubos = count();
      else if (key == "seed") solver.seed = count();
      else if (key == "tenure") dec.tabu.tenure = count();
      else if (key == "stall_limit") dec.tabu.stall_limit = count();
      else if (key == "max_restarts") dec.tabu.max_restarts = count();
      else if (key == "max_total_iterations") dec.tabu.max_total_iterations = count();
      else if (key == "move_rule") {
        if (value == "best") dec.tabu.move_rule = MoveRule::best_improvement;
        else if (value == "first") dec.tabu.move_rule = MoveRule::first_improvement;
        else throw ParseError("move_rule must be 'best' or 'first'", number);
      }
      else if (key == "k_bits") cfg.qae.encoding = EncodingScheme(static_cast<int>(count()));
      else if (key == "lambda_tol") cfg.qae.lambda_tol = real();
      else if (key == "max_lambda_iters") cfg.qae.max_lambda_iters = static_cast<int>(count());
      else if (key == "trivial_retreat") cfg.qae.trivial_retreat = real();
      else if (key == "deflation_margin") cfg.qae.deflation_margin = real();
      else if (key == "element_polish") {
        if (value == "true") cfg.qae.element_polish = true;
        else if (value == "false") cfg.qae.element_polish = false;
        else throw ParseError("element_polish must be 'true' or 'false'", number);
      }
      else throw ParseError("unknown key '" + key + "'", number);
    } catch (const ArgumentError& e) {
      throw ParseError(e.what(), number);
    }
  }
  try {
    cfg.qae.validate();
    dec.validate();
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid configuration: ") + e.what(), 0);
  }
  return cfg;
}

}  // namespace qaesolve
