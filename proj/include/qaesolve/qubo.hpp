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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qaesolve {

using Bits = std::vector<std::uint8_t>;
using BitsView = std::span<const std::uint8_t>;

/// One input coefficient. i == j contributes to the diagonal; otherwise the
/// pair is folded into the canonical lower-triangular coupler (max, min).
struct Term {
  std::size_t i;
  std::size_t j;
  double value;
};

/// Canonical coupler, always row > col.
struct Coupler {
  std::size_t row;
  std::size_t col;
  double value;
};

/// QUBO over N binary variables:
///   E(x) = offset + sum_i Q_ii x_i + sum_{i>j} Q_ij x_i x_j
///
/// Immutable after construction. Couplers are stored once in canonical
/// (row > col) order sorted by (row, col), plus a symmetric adjacency view
/// used for O(degree) flip deltas.
class QuboProblem {
 public:
  /// Mirrored (i < j) entries and duplicates are summed into the canonical
  /// coupler. Throws ArgumentError on out-of-range indices, non-finite
  /// values or N == 0.
  QuboProblem(std::size_t num_vars, std::vector<double> diagonal,
              std::span<const Term> couplers, double offset = 0.0);

  static QuboProblem from_terms(std::size_t num_vars,
                                std::span<const Term> terms,
                                double offset = 0.0);

  std::size_t num_vars() const noexcept { return diagonal_.size(); }
  double offset() const noexcept { return offset_; }
  double linear(std::size_t i) const { return diagonal_.at(i); }
  const std::vector<double>& diagonal() const noexcept { return diagonal_; }
  const std::vector<Coupler>& couplers() const noexcept { return couplers_; }

  /// Q_ij for i != j (0 if absent), symmetric in (i, j). O(log degree).
  double coupling(std::size_t i, std::size_t j) const;

  struct Neighbor {
    std::size_t index;
    double value;
  };
  std::span<const Neighbor> neighbors(std::size_t i) const {
    return {adjacency_.data() + adj_start_[i],
            adj_start_[i + 1] - adj_start_[i]};
  }
  std::size_t degree(std::size_t i) const {
    return adj_start_[i + 1] - adj_start_[i];
  }

  /// Copy with a different constant term.
  QuboProblem with_offset(double offset) const;

  /// Q_ii + sum_j Q_ij x_j, i.e. the energy gained by setting x_i from 0 to 1.
  long double local_field(BitsView bits, std::size_t i) const;

  friend bool operator==(const QuboProblem& a, const QuboProblem& b);

 private:
  QuboProblem() = default;
  void build_adjacency();

  std::vector<double> diagonal_;
  std::vector<Coupler> couplers_;
  std::vector<std::size_t> adj_start_;
  std::vector<Neighbor> adjacency_;
  double offset_ = 0.0;
};

bool operator==(const Coupler& a, const Coupler& b);

/// E(x). Throws ArgumentError if bits.size() != N.
double energy(const QuboProblem& q, BitsView bits);

/// A bit assignment with its cached energy.
class BinarySolution {
 public:
  /// Computes the energy from scratch.
  BinarySolution(const QuboProblem& q, Bits bits);
  /// All-zero assignment (energy == offset).
  static BinarySolution zeros(const QuboProblem& q);

  const Bits& bits() const noexcept { return bits_; }
  double energy() const noexcept { return static_cast<double>(energy_); }
  std::size_t size() const noexcept { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

  /// Toggle bit i in place; energy updated incrementally.
  void flip(const QuboProblem& q, std::size_t i);

  friend bool operator==(const BinarySolution&,
                         const BinarySolution&) = default;

 private:
  BinarySolution(Bits bits, long double energy)
      : bits_(std::move(bits)), energy_(energy) {}
  Bits bits_;
  long double energy_;
};

/// energy(x with bit i flipped) - energy(x), in O(degree(i)).
double flip_delta(const QuboProblem& q, const BinarySolution& x,
                  std::size_t i);

/// Returns x with bit i toggled; the energy is updated from flip_delta.
BinarySolution apply_flip(BinarySolution x, const QuboProblem& q,
                          std::size_t i);

/// Incremental state for local-search style solvers: keeps every local
/// field current so each flip delta is O(1) and each flip is O(degree).
class FlipState {
 public:
  FlipState(const QuboProblem& q, Bits bits);

  const Bits& bits() const noexcept { return bits_; }
  long double energy() const noexcept { return energy_; }
  std::size_t size() const noexcept { return bits_.size(); }

  long double delta(std::size_t i) const noexcept {
    return bits_[i] ? -field_[i] : field_[i];
  }
  void flip(std::size_t i);
  /// Replace the whole assignment; recomputes fields in O(N + nnz).
  void reset(Bits bits);

  BinarySolution to_solution() const { return {*q_, bits_}; }

 private:
  const QuboProblem* q_;
  Bits bits_;
  std::vector<long double> field_;
  long double energy_ = 0.0L;
};

}  // namespace qaesolve
