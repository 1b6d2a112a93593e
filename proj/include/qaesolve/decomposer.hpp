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

#include <cstdint>
#include <optional>
#include <vector>

#include "qaesolve/qubo.hpp"
#include "qaesolve/solvers.hpp"

namespace qaesolve {

enum class Backend { exact, tabu };

struct DecomposerParams {
  std::size_t subqubo_size = 64;
  /// Consecutive outer iterations without improvement before stopping.
  std::uint64_t repeat_limit = 50;
  Backend backend = Backend::tabu;
  /// Resolved against the size of the problem being searched: the full
  /// problem for global refinement, the block for the tabu backend.
  TabuOverrides tabu;
  std::size_t parallel_subqubos = 1;
  std::uint64_t seed = 0;

  void validate() const;
};

/// A piece of the global problem: variables outside `indices` are clamped at
/// their current values, their couplings to the piece become linear terms and
/// everything else becomes the offset.
struct ClampedSubproblem {
  std::vector<std::size_t> indices;
  QuboProblem sub;
};

/// Variables by descending |flip_delta|, ties by ascending index.
std::vector<std::size_t> impact_ranking(const QuboProblem& q,
                                        const BinarySolution& x);

/// Consecutive blocks of `block_size` (the last may be shorter).
std::vector<std::vector<std::size_t>> partition_blocks(
    std::span<const std::size_t> order, std::size_t block_size);

/// Throws ArgumentError on duplicate or out-of-range indices.
ClampedSubproblem extract_subqubo(const QuboProblem& q,
                                  const BinarySolution& x,
                                  std::span<const std::size_t> indices);

/// Outer loop: tabu refinement, impact ranking, disjoint blocks solved against
/// a snapshot, merge, accept on strict improvement; stops after
/// `repeat_limit` non-improving iterations. Starts from `initial` when given,
/// otherwise from a seeded random bitstring.
SolveResult solve_decomposed(const QuboProblem& q,
                             const DecomposerParams& params,
                             std::optional<BitsView> initial = std::nullopt);

}  // namespace qaesolve
