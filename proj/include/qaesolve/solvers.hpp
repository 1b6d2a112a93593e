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

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "qaesolve/qubo.hpp"

namespace qaesolve {

struct SolveResult {
  BinarySolution solution;
  double best_energy = 0.0;
  std::uint64_t evaluations = 0;
  std::uint64_t restarts = 0;
  /// Solver-specific: enumeration steps, tabu moves, or outer iterations.
  std::uint64_t iterations = 0;
  std::chrono::nanoseconds elapsed{0};
  std::uint64_t seed = 0;
  /// Best energy after each recorded improvement, in order.
  std::vector<double> trace;
};

/// Hard cap on solve_exact problem size (2^25 Gray-code steps).
inline constexpr std::size_t kExactCap = 25;

/// Global optimum by Gray-code enumeration. Ties go to the lexicographically
/// smallest bitstring (bit 0 most significant). Throws SizeError if N > cap.
SolveResult solve_exact(const QuboProblem& q, std::size_t cap = kExactCap);

enum class MoveRule { best_improvement, first_improvement };

struct TabuParams {
  std::uint64_t tenure = 4;
  /// Non-improving iterations before a random restart.
  std::uint64_t stall_limit = 20;
  std::uint64_t max_restarts = 10;
  std::uint64_t max_total_iterations = 10000;
  std::uint64_t seed = 0;
  MoveRule move_rule = MoveRule::best_improvement;

  /// tenure = max(4, N/10), stall_limit = 20 N, max_restarts = 10,
  /// max_total_iterations = 10000 N.
  static TabuParams defaults_for(std::size_t num_vars, std::uint64_t seed = 0);
  void validate() const;
};

/// Per-field Tabu settings; unset fields take TabuParams::defaults_for(N) of
/// whichever problem the search runs on.
struct TabuOverrides {
  std::optional<std::uint64_t> tenure;
  std::optional<std::uint64_t> stall_limit;
  std::optional<std::uint64_t> max_restarts;
  std::optional<std::uint64_t> max_total_iterations;
  std::optional<MoveRule> move_rule;

  static TabuOverrides fixed(const TabuParams& p);
  TabuParams resolve(std::size_t num_vars, std::uint64_t seed) const;
};

/// Single-flip Tabu search with aspiration and stall-triggered random
/// restarts. Deterministic in (q, params, initial). The result is never worse
/// than `initial`.
SolveResult tabu_search(const QuboProblem& q, const TabuParams& params,
                        std::optional<BitsView> initial = std::nullopt);

}  // namespace qaesolve
