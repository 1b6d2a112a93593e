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

#include "qaesolve/decomposer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <numeric>
#include <string>
#include <thread>

#include "qaesolve/errors.hpp"
#include "qaesolve/rng.hpp"

namespace qaesolve {

void DecomposerParams::validate() const {
  if (subqubo_size < 1) throw ArgumentError("subqubo_size must be at least 1");
  if (parallel_subqubos < 1)
    throw ArgumentError("parallel_subqubos must be at least 1");
  if (backend == Backend::exact && subqubo_size > kExactCap)
    throw SizeError("subqubo_size " + std::to_string(subqubo_size) +
                        " exceeds the exact backend cap of " +
                        std::to_string(kExactCap),
                    kExactCap);
  if (tabu.max_total_iterations && *tabu.max_total_iterations < 1)
    throw ArgumentError("tabu max_total_iterations must be at least 1");
}

std::vector<std::size_t> impact_ranking(const QuboProblem& q,
                                        const BinarySolution& x) {
  const std::size_t n = q.num_vars();
  if (x.size() != n)
    throw ArgumentError("solution length does not match the problem");
  std::vector<double> impact(n);
  for (std::size_t i = 0; i < n; ++i)
    impact[i] = std::fabs(flip_delta(q, x, i));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return impact[a] > impact[b];
                   });
  return order;
}

std::vector<std::vector<std::size_t>> partition_blocks(
    std::span<const std::size_t> order, std::size_t block_size) {
  if (block_size < 1) throw ArgumentError("block size must be at least 1");
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t start = 0; start < order.size(); start += block_size) {
    const std::size_t stop = std::min(order.size(), start + block_size);
    blocks.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(start),
                        order.begin() + static_cast<std::ptrdiff_t>(stop));
  }
  return blocks;
}

ClampedSubproblem extract_subqubo(const QuboProblem& q,
                                  const BinarySolution& x,
                                  std::span<const std::size_t> indices) {
  const std::size_t n = q.num_vars();
  if (x.size() != n)
    throw ArgumentError("solution length does not match the problem");
  if (indices.empty()) throw ArgumentError("empty subproblem index set");

  constexpr auto kOut = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos(n, kOut);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const std::size_t g = indices[k];
    if (g >= n)
      throw ArgumentError("subproblem index " + std::to_string(g) +
                          " out of range");
    if (pos[g] != kOut)
      throw ArgumentError("duplicate subproblem index " + std::to_string(g));
    pos[g] = k;
  }

  const auto& bits = x.bits();
  std::vector<double> linear(indices.size());
  std::vector<Term> couplers;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const std::size_t g = indices[k];
    long double h = q.linear(g);
    for (const auto& nb : q.neighbors(g)) {
      const std::size_t other = pos[nb.index];
      if (other == kOut) {
        if (bits[nb.index]) h += nb.value;
      } else if (other < k) {
        couplers.push_back({k, other, nb.value});
      }
    }
    linear[k] = static_cast<double>(h);
  }

  // Energy of the clamped remainder: everything not touching the piece.
  long double offset = q.offset();
  for (std::size_t i = 0; i < n; ++i)
    if (pos[i] == kOut && bits[i]) offset += q.linear(i);
  for (const auto& c : q.couplers())
    if (pos[c.row] == kOut && pos[c.col] == kOut && bits[c.row] &&
        bits[c.col])
      offset += c.value;

  return {std::vector<std::size_t>(indices.begin(), indices.end()),
          QuboProblem(indices.size(), std::move(linear), couplers,
                      static_cast<double>(offset))};
}

namespace {

bool improves(double candidate, double incumbent) {
  return candidate < incumbent - 1e-12 * std::max(1.0, std::fabs(incumbent));
}

TabuParams tabu_for(const DecomposerParams& params, std::size_t size,
                    std::uint64_t seed) {
  return params.tabu.resolve(size, seed);
}

SolveResult run_backend(const QuboProblem& q, const DecomposerParams& params,
                        std::uint64_t seed, std::optional<BitsView> initial) {
  if (params.backend == Backend::exact) return solve_exact(q);
  return tabu_search(q, tabu_for(params, q.num_vars(), seed), initial);
}

// Solves every block against the same snapshot. Results land in block order
// whatever the thread count.
std::vector<Bits> solve_blocks(const QuboProblem& q,
                               const BinarySolution& snapshot,
                               const std::vector<std::vector<std::size_t>>& blocks,
                               const DecomposerParams& params,
                               std::uint64_t outer, std::uint64_t& evaluations) {
  std::vector<Bits> out(blocks.size());
  std::vector<std::uint64_t> evals(blocks.size(), 0);
  std::vector<std::exception_ptr> errors(blocks.size());

  auto work = [&](std::size_t b) {
    try {
      const auto piece = extract_subqubo(q, snapshot, blocks[b]);
      auto r = run_backend(piece.sub, params,
                           derive_seed(params.seed, outer, b + 1), std::nullopt);
      out[b] = r.solution.bits();
      evals[b] = r.evaluations;
    } catch (...) {
      errors[b] = std::current_exception();
    }
  };

  const std::size_t workers = std::min(params.parallel_subqubos, blocks.size());
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks.size(); ++b) work(b);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t b = next++; b < blocks.size(); b = next++) work(b);
      });
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto e : evals) evaluations += e;
  return out;
}

}  // namespace

SolveResult solve_decomposed(const QuboProblem& q,
                             const DecomposerParams& params,
                             std::optional<BitsView> initial) {
  params.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = q.num_vars();
  if (initial && initial->size() != n)
    throw ArgumentError("initial bits have length " +
                        std::to_string(initial->size()) + ", problem has " +
                        std::to_string(n) + " variables");

  if (n <= params.subqubo_size) {
    auto r = run_backend(q, params, params.seed, initial);
    r.seed = params.seed;
    r.elapsed = std::chrono::steady_clock::now() - t0;
    return r;
  }

  Rng rng(params.seed);
  BinarySolution best(q, initial ? Bits(initial->begin(), initial->end())
                                 : rng.bits(n));
  std::vector<double> trace{best.energy()};
  std::uint64_t evaluations = 1;
  std::uint64_t restarts = 0;
  std::uint64_t stale = 0;
  std::uint64_t outer = 0;

  while (stale < params.repeat_limit) {
    ++outer;
    bool improved = false;

    auto refined = tabu_search(
        q, tabu_for(params, n, derive_seed(params.seed, outer, 0)),
        BitsView(best.bits()));
    evaluations += refined.evaluations;
    restarts += refined.restarts;
    if (improves(refined.best_energy, best.energy())) {
      best = std::move(refined.solution);
      trace.push_back(best.energy());
      improved = true;
    }

    const BinarySolution snapshot = best;
    const auto order = impact_ranking(q, snapshot);
    const auto blocks = partition_blocks(order, params.subqubo_size);
    const auto pieces =
        solve_blocks(q, snapshot, blocks, params, outer, evaluations);

    BinarySolution merged = snapshot;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (std::size_t k = 0; k < blocks[b].size(); ++k)
        if (merged[blocks[b][k]] != pieces[b][k]) merged.flip(q, blocks[b][k]);
    if (improves(merged.energy(), best.energy())) {
      best = std::move(merged);
      trace.push_back(best.energy());
      improved = true;
    }

    stale = improved ? 0 : stale + 1;
  }

  // Re-derive the cached energy from scratch before handing it out.
  BinarySolution sol(q, best.bits());
  const double e = sol.energy();
  return SolveResult{.solution = std::move(sol),
                     .best_energy = e,
                     .evaluations = evaluations,
                     .restarts = restarts,
                     .iterations = outer,
                     .elapsed = std::chrono::steady_clock::now() - t0,
                     .seed = params.seed,
                     .trace = std::move(trace)};
}

}  // namespace qaesolve
