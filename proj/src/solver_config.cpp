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

#include "qaesolve/solver_config.hpp"

#include "qaesolve/errors.hpp"

namespace qaesolve {

SolveResult solve(const QuboProblem& q, const SolverConfig& config,
                  std::uint64_t seed, std::optional<BitsView> initial) {
  switch (config.method) {
    case Method::exact:
      return solve_exact(q);
    case Method::tabu: {
      return tabu_search(q, config.decomposer.tabu.resolve(q.num_vars(), seed),
                         initial);
    }
    case Method::decompose: {
      DecomposerParams p = config.decomposer;
      p.seed = seed;
      return solve_decomposed(q, p, initial);
    }
  }
  throw ArgumentError("unknown solver method");
}

std::string to_string(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::tabu: return "tabu";
    case Method::decompose: return "decompose";
  }
  return "?";
}

std::string to_string(Backend b) {
  return b == Backend::exact ? "exact" : "tabu";
}

Method parse_method(const std::string& s) {
  if (s == "exact") return Method::exact;
  if (s == "tabu") return Method::tabu;
  if (s == "decompose") return Method::decompose;
  throw ArgumentError("unknown method '" + s +
                      "' (expected exact, tabu or decompose)");
}

Backend parse_backend(const std::string& s) {
  if (s == "exact") return Backend::exact;
  if (s == "tabu") return Backend::tabu;
  throw ArgumentError("unknown backend '" + s + "' (expected exact or tabu)");
}

}  // namespace qaesolve
