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

#include <bit>
#include <chrono>
#include <cmath>
#include <string>

#include "qaesolve/errors.hpp"
#include "qaesolve/solvers.hpp"

namespace qaesolve {

SolveResult solve_exact(const QuboProblem& q, std::size_t cap) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = q.num_vars();
  if (cap > 62) cap = 62;
  if (n > cap)
    throw SizeError("exact solver limited to " + std::to_string(cap) +
                        " variables, problem has " + std::to_string(n),
                    cap);

  // Variable v lives at mask bit (n - 1 - v) so that integer order on masks is
  // lexicographic order on bit sequences.
  FlipState state(q, Bits(n, 0));
  std::uint64_t mask = 0;
  std::uint64_t best_mask = 0;
  long double best = state.energy();
  std::vector<double> trace{static_cast<double>(best)};

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto pos = static_cast<std::size_t>(std::countr_zero(step));
    state.flip(n - 1 - pos);
    mask ^= std::uint64_t{1} << pos;
    const long double e = state.energy();
    const long double tol = 1e-12L * std::max(1.0L, std::fabs(best));
    if (e < best - tol) {
      best = e;
      best_mask = mask;
      trace.push_back(static_cast<double>(best));
    } else if (e <= best + tol && mask < best_mask) {
      best_mask = mask;
    }
  }

  Bits bits(n);
  for (std::size_t v = 0; v < n; ++v) bits[v] = (best_mask >> (n - 1 - v)) & 1U;
  BinarySolution sol(q, std::move(bits));
  const double e = sol.energy();
  return SolveResult{.solution = std::move(sol),
                     .best_energy = e,
                     .evaluations = total,
                     .restarts = 0,
                     .iterations = total - 1,
                     .elapsed = std::chrono::steady_clock::now() - t0,
                     .seed = 0,
                     .trace = std::move(trace)};
}

}  // namespace qaesolve
