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

#include "doctest.h"
#include "qaesolve/checks.hpp"
#include "qaesolve/errors.hpp"
#include "qaesolve/solvers.hpp"

using namespace qaesolve;

namespace {

QuboProblem two_var() {
  const Term c[] = {{1, 0, 3.0}};
  return QuboProblem(2, {-1.0, -1.0}, c);
}

}  // namespace

TEST_CASE("solve_exact on trivial problems") {
  const QuboProblem zero(5, std::vector<double>(5, 0.0), {});
  const auto r = solve_exact(zero);
  CHECK(r.solution.bits() == Bits(5, 0));
  CHECK(r.best_energy == 0.0);

  const auto two = solve_exact(two_var());
  CHECK(two.best_energy == -1.0);
  CHECK(two.solution.bits() == Bits{0, 1});
  CHECK(two.evaluations == 4);
}

TEST_CASE("solve_exact equals naive enumeration for N <= 12") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Rng rng(300 + s);
    const std::size_t n = 1 + s % 12;
    auto q = checks::random_qubo(n, 0.5, rng);
    if (s % 4 == 0) {
      // Coarse coefficients create genuine ties for the tie-break rule.
      std::vector<Term> terms;
      for (const auto& c : q.couplers())
        terms.push_back({c.row, c.col, std::round(c.value * 2.0)});
      std::vector<double> diag = q.diagonal();
      for (auto& d : diag) d = std::round(d * 2.0);
      q = QuboProblem(n, diag, terms);
    }
    const auto exact = solve_exact(q);
    const auto naive = checks::naive_minimum(q);
    CHECK(exact.solution.bits() == naive.bits);
    CHECK(std::fabs(exact.best_energy - naive.energy) <= 1e-12);
  }
}

TEST_CASE("solve_exact enforces its cap") {
  const QuboProblem big(26, std::vector<double>(26, 1.0), {});
  try {
    (void)solve_exact(big);
    FAIL("expected SizeError");
  } catch (const SizeError& e) {
    CHECK(e.cap() == 25);
    CHECK(std::string(e.what()).find("25") != std::string::npos);
  }
  CHECK_THROWS_AS(solve_exact(two_var(), 1), SizeError);
}

TEST_CASE("tabu_search small examples") {
  const QuboProblem one(1, {-2.0}, {});
  const Bits start{0};
  const auto r = tabu_search(one, TabuParams::defaults_for(1), BitsView(start));
  CHECK(r.best_energy == -2.0);
  CHECK(r.solution.bits() == Bits{1});

  const auto q = two_var();
  for (unsigned m = 0; m < 4; ++m) {
    const Bits init{static_cast<std::uint8_t>(m & 1),
                    static_cast<std::uint8_t>(m >> 1)};
    CHECK(tabu_search(q, TabuParams::defaults_for(2, m), BitsView(init))
              .best_energy == -1.0);
  }
}

TEST_CASE("tabu_search rejects a bad initial length") {
  const Bits bad{1, 0, 1};
  CHECK_THROWS_AS(
      tabu_search(two_var(), TabuParams::defaults_for(2), BitsView(bad)),
      ArgumentError);
  TabuParams p;
  p.max_total_iterations = 0;
  CHECK_THROWS_AS(tabu_search(two_var(), p), ArgumentError);
}

TEST_CASE("default tabu parameters") {
  const auto p = TabuParams::defaults_for(100, 9);
  CHECK(p.tenure == 10);
  CHECK(p.stall_limit == 2000);
  CHECK(p.max_restarts == 10);
  CHECK(p.max_total_iterations == 1000000);
  CHECK(p.seed == 9);
  CHECK(TabuParams::defaults_for(16).tenure == 4);
}

TEST_CASE("tabu_search finds the optimum of N=16 problems") {
  int hits = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(derive_seed(7, s));
    const auto q = checks::random_qubo(16, 0.5, rng);
    const auto r = tabu_search(q, TabuParams::defaults_for(16, s));
    if (r.best_energy <= solve_exact(q).best_energy + 1e-9) ++hits;
  }
  CHECK(hits >= 95);
}

TEST_CASE("tabu_search invariants") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng(400 + s);
    const std::size_t n = 10 + rng.below(30);
    const auto q = checks::random_qubo(n, 0.4, rng);
    const Bits init = rng.bits(n);
    auto p = TabuParams::defaults_for(n, s);
    p.max_restarts = 2;
    const auto a = tabu_search(q, p, BitsView(init));
    const auto b = tabu_search(q, p, BitsView(init));

    CHECK(a.solution == b.solution);
    CHECK(a.trace == b.trace);
    CHECK(a.best_energy <= energy(q, init));
    CHECK(std::is_sorted(a.trace.rbegin(), a.trace.rend()));
    CHECK(std::fabs(a.best_energy - energy(q, a.solution.bits())) <= 1e-12);
    CHECK(a.restarts <= 2);
  }
}

TEST_CASE("tabu_search variants") {
  Rng rng(55);
  const auto q = checks::random_qubo(12, 0.5, rng);
  const double opt = solve_exact(q).best_energy;

  auto p = TabuParams::defaults_for(12, 3);
  p.move_rule = MoveRule::first_improvement;
  CHECK(tabu_search(q, p).best_energy <= opt + 1e-9);

  p = TabuParams::defaults_for(12, 3);
  p.tenure = 0;
  const auto r = tabu_search(q, p);
  CHECK(r.best_energy >= opt - 1e-12);

  p.max_total_iterations = 1;
  CHECK(tabu_search(q, p).iterations == 1);
}
