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

#include <string>
#include <string_view>

#include "qaesolve/linalg.hpp"
#include "qaesolve/qae.hpp"
#include "qaesolve/qubo.hpp"

namespace qaesolve {

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

/// Matrix text: first line n, then n lines of n whitespace-separated reals.
/// Blank lines are skipped. Throws ParseError (line-numbered) on malformed
/// input and ValidationError on asymmetry beyond 1e-10 relative.
SymmetricMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const SymmetricMatrix& a);

/// qbsolv-style .qubo text:
///   c <comment>
///   p qubo 0 <maxNodes> <nNodes> <nCouplers>
///   <i> <i> <value>     nNodes diagonal lines
///   <i> <j> <value>     nCouplers coupler lines, i != j
/// A `c offset <value>` comment carries a nonzero constant term.
QuboProblem parse_qubo(std::string_view text);
std::string serialize_qubo(const QuboProblem& q);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// A solver configuration loaded from flat `key = value` text.
struct NamedConfig {
  std::string name;
  QaeOptions qae;
};

/// Keys: name, method, backend, subqubo_size, repeat_limit,
/// parallel_subqubos, seed, tenure, stall_limit, max_restarts,
/// max_total_iterations, move_rule, k_bits, lambda_tol, max_lambda_iters,
/// trivial_retreat, deflation_margin, element_polish. `#` starts a comment.
NamedConfig parse_config(std::string_view text,
                         const std::string& default_name = "config");

}  // namespace qaesolve
