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
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "qaesolve/errors.hpp"
#include "qaesolve/rng.hpp"
#include "qaesolve/solvers.hpp"

namespace qaesolve {

TabuParams TabuParams::defaults_for(std::size_t num_vars, std::uint64_t seed) {
  TabuParams p;
  p.tenure = std::max<std::uint64_t>(4, num_vars / 10);
  p.stall_limit = 20 * num_vars;
  p.max_restarts = 10;
  p.max_total_iterations = std::max<std::uint64_t>(1, 10000 * num_vars);
  p.seed = seed;
  return p;
}

void TabuParams::validate() const {
  if (max_total_iterations < 1)
    throw ArgumentError("tabu max_total_iterations must be at least 1");
}

TabuOverrides TabuOverrides::fixed(const TabuParams& p) {
  return {p.tenure, p.stall_limit, p.max_restarts, p.max_total_iterations,
          p.move_rule};
}

TabuParams TabuOverrides::resolve(std::size_t num_vars,
                                  std::uint64_t seed) const {
  TabuParams p = TabuParams::defaults_for(num_vars, seed);
  if (tenure) p.tenure = *tenure;
  if (stall_limit) p.stall_limit = *stall_limit;
  if (max_restarts) p.max_restarts = *max_restarts;
  if (max_total_iterations) p.max_total_iterations = *max_total_iterations;
  if (move_rule) p.move_rule = *move_rule;
  return p;
}

namespace {

bool improves(long double candidate, long double incumbent) {
  return candidate <
         incumbent - 1e-12L * std::max(1.0L, std::fabs(incumbent));
}

}  // namespace

SolveResult tabu_search(const QuboProblem& q, const TabuParams& params,
                        std::optional<BitsView> initial) {
  params.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = q.num_vars();
  if (initial && initial->size() != n)
    throw ArgumentError("initial bits have length " +
                        std::to_string(initial->size()) + ", problem has " +
                        std::to_string(n) + " variables");

  Rng rng(params.seed);
  Bits start = initial ? Bits(initial->begin(), initial->end()) : rng.bits(n);
  for (auto b : start)
    if (b > 1) throw ArgumentError("bit values must be 0 or 1");

  FlipState state(q, std::move(start));
  Bits best_bits = state.bits();
  long double best = state.energy();
  std::vector<double> trace{static_cast<double>(best)};

  // Variable i is tabu while iteration <= tabu_until[i].
  std::vector<std::uint64_t> tabu_until(n, 0);
  std::uint64_t evaluations = 1;
  std::uint64_t restarts = 0;
  std::uint64_t stall = 0;
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();

  std::uint64_t iter = 1;
  for (; iter <= params.max_total_iterations; ++iter) {
    std::size_t move = kNone;
    long double move_delta = std::numeric_limits<long double>::infinity();
    const long double current = state.energy();
    for (std::size_t i = 0; i < n; ++i) {
      const long double d = state.delta(i);
      const bool admissible =
          tabu_until[i] < iter || improves(current + d, best);
      if (!admissible) continue;
      if (d < move_delta) {
        move_delta = d;
        move = i;
        if (params.move_rule == MoveRule::first_improvement && d < 0) break;
      }
    }
    evaluations += n;

    if (move != kNone) {
      state.flip(move);
      tabu_until[move] = iter + params.tenure;
    }
    if (improves(state.energy(), best)) {
      best = state.energy();
      best_bits = state.bits();
      trace.push_back(static_cast<double>(best));
      stall = 0;
    } else {
      ++stall;
    }

    if (stall >= params.stall_limit) {
      if (restarts >= params.max_restarts) break;
      ++restarts;
      state.reset(rng.bits(n));
      std::fill(tabu_until.begin(), tabu_until.end(), 0);
      stall = 0;
      ++evaluations;
      if (improves(state.energy(), best)) {
        best = state.energy();
        best_bits = state.bits();
        trace.push_back(static_cast<double>(best));
      }
    }
  }

  BinarySolution sol(q, std::move(best_bits));
  const double e = sol.energy();
  return SolveResult{.solution = std::move(sol),
                     .best_energy = e,
                     .evaluations = evaluations,
                     .restarts = restarts,
                     .iterations = std::min(iter, params.max_total_iterations),
                     .elapsed = std::chrono::steady_clock::now() - t0,
                     .seed = params.seed,
                     .trace = std::move(trace)};
}

}  // namespace qaesolve
