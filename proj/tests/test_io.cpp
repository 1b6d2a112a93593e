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

#include <algorithm>
#include <cmath>
#include <string>

#include "doctest.h"
#include "qaesolve/checks.hpp"
#include "qaesolve/errors.hpp"
#include "qaesolve/io.hpp"

using namespace qaesolve;

namespace {

std::size_t error_line(const std::string& text, bool qubo) {
  try {
    if (qubo)
      (void)parse_qubo(text);
    else
      (void)parse_matrix(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("format_double round trips") {
  Rng rng(3000);
  for (int i = 0; i < 1000; ++i) {
    const double v = rng.uniform(-1e3, 1e3) * std::ldexp(1.0, static_cast<int>(rng.below(40)) - 20);
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-2.0) == "-2");
}

TEST_CASE("parse_matrix examples") {
  CHECK(parse_matrix("2\n1 0\n0 1\n") == SymmetricMatrix::identity(2));
  CHECK(parse_matrix("\n2\n\n1 0\n0 1") == SymmetricMatrix::identity(2));

  try {
    (void)parse_matrix("3\n1 0 0\n0 1 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("row 3") != std::string::npos);
  }
  CHECK(error_line("2\n1 0\n0 x\n", false) == 3);
  CHECK(error_line("2\n1 0 0\n0 1\n", false) == 2);
  CHECK(error_line("0\n", false) == 1);
  CHECK(error_line("two\n", false) == 1);
  CHECK(error_line("1\n1\n5\n", false) == 3);
  CHECK_THROWS_AS(parse_matrix("2\n1 0.5\n0 1\n"), ValidationError);
}

TEST_CASE("matrix round trip") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng(3100 + s);
    const auto a = checks::random_symmetric(1 + rng.below(9), rng);
    CHECK(parse_matrix(serialize_matrix(a)) == a);
  }
}

TEST_CASE("parse_qubo examples") {
  const auto q = parse_qubo("p qubo 0 1 1 0\n0 0 -1.0\n");
  CHECK(q.num_vars() == 1);
  CHECK(q.diagonal()[0] == -1.0);
  CHECK(energy(q, Bits{1}) == -1.0);

  const auto q2 = parse_qubo(
      "c two variables\n"
      "c offset 0.25\n"
      "p qubo 0 2 2 1\n"
      "0 0 1\n"
      "1 1 -2\n"
      "0 1 3\n");
  CHECK(q2.offset() == 0.25);
  CHECK(q2.coupling(1, 0) == 3.0);
  CHECK(energy(q2, Bits{1, 1}) == 2.25);
}

TEST_CASE("serialize_qubo layout") {
  const Term t[] = {{0, 1, 1.5}};
  const QuboProblem q(2, {0.0, 2.0}, t);
  const std::string s = serialize_qubo(q);
  // Comment, header, two node lines, one coupler line.
  CHECK(count_lines(s) == 5);
  CHECK(s.rfind("c ", 0) == 0);
  CHECK(s.find("p qubo 0 2 2 1\n") != std::string::npos);
  CHECK(parse_qubo(s) == q);
}

TEST_CASE("qubo round trip") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng(3200 + s);
    auto q = checks::random_qubo(1 + rng.below(30), 0.3, rng);
    if (s % 2) q = q.with_offset(rng.uniform(-1.0, 1.0));
    CHECK(parse_qubo(serialize_qubo(q)) == q);
  }
}

TEST_CASE("parse_qubo errors") {
  CHECK(error_line("0 0 1\n", true) == 1);
  CHECK(error_line("c only a comment\n", true) == 0);
  CHECK(error_line("p qubo 0 2 2 0\n0 0 1\n", true) == 2);
  CHECK(error_line("p qubo 0 2 1 0\n0 0 1\n0 1 2\n", true) == 3);
  CHECK(error_line("p qubo 0 2 1 0\np qubo 0 2 1 0\n", true) == 2);
  CHECK(error_line("p qubo 0 2 1 0\n0 5 1\n", true) == 2);
  CHECK(error_line("p qubo 0 2 1 0\n0 0 abc\n", true) == 2);
  CHECK(error_line("p qubo x\n", true) == 1);
}

TEST_CASE("parse_config") {
  const auto c = parse_config(
      "# sample\n"
      "name = tabu-k8\n"
      "method = tabu\n"
      "tenure = 7   # inline\n"
      "move_rule = first\n"
      "k_bits = 8\n"
      "seed = 11\n"
      "deflation_margin = 0.5\n"
      "element_polish = false\n");
  CHECK(c.name == "tabu-k8");
  CHECK(c.qae.solver.method == Method::tabu);
  CHECK(c.qae.solver.seed == 11);
  CHECK(c.qae.encoding.k_bits() == 8);
  REQUIRE(c.qae.solver.decomposer.tabu.tenure);
  CHECK(*c.qae.solver.decomposer.tabu.tenure == 7);
  REQUIRE(c.qae.solver.decomposer.tabu.move_rule);
  CHECK(*c.qae.solver.decomposer.tabu.move_rule == MoveRule::first_improvement);
  CHECK(c.qae.deflation_margin == 0.5);
  CHECK_FALSE(c.qae.element_polish);

  CHECK(parse_config("", "fallback").name == "fallback");

  const char* bad[] = {"method = annealing\n", "k_bits = 1\n", "bogus = 1\n",
                       "seed\n", "subqubo_size = -3\n", "element_polish = maybe\n"};
  for (const char* text : bad) CHECK_THROWS_AS(parse_config(text), ParseError);
}
