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
#include <string>

#include "qaesolve/decomposer.hpp"
#include "qaesolve/solvers.hpp"

namespace qaesolve {

enum class Method { exact, tabu, decompose };

/// Which QUBO solver to run and how. `decomposer.tabu` doubles as the Tabu
/// settings for Method::tabu.
struct SolverConfig {
  Method method = Method::decompose;
  DecomposerParams decomposer;
  std::uint64_t seed = 0;
};

/// Dispatches to solve_exact / tabu_search / solve_decomposed with `seed`
/// overriding the seed stored in the configuration. `initial` is ignored by
/// the exact solver.
SolveResult solve(const QuboProblem& q, const SolverConfig& config,
                  std::uint64_t seed,
                  std::optional<BitsView> initial = std::nullopt);

std::string to_string(Method m);
std::string to_string(Backend b);
Method parse_method(const std::string& s);
Backend parse_backend(const std::string& s);

}  // namespace qaesolve
