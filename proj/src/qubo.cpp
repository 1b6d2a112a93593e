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

#include "qaesolve/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qaesolve/errors.hpp"

namespace qaesolve {

namespace {

void check_finite(double v, const char* what) {
  if (!std::isfinite(v))
    throw ArgumentError(std::string("non-finite ") + what + " coefficient");
}

void check_length(const QuboProblem& q, BitsView bits) {
  if (bits.size() != q.num_vars())
    throw ArgumentError("bit sequence has length " +
                        std::to_string(bits.size()) + ", problem has " +
                        std::to_string(q.num_vars()) + " variables");
}

void check_index(const QuboProblem& q, std::size_t i) {
  if (i >= q.num_vars())
    throw ArgumentError("variable index " + std::to_string(i) +
                        " out of range [0, " + std::to_string(q.num_vars()) +
                        ")");
}

}  // namespace

QuboProblem::QuboProblem(std::size_t num_vars, std::vector<double> diagonal,
                         std::span<const Term> couplers, double offset)
    : diagonal_(std::move(diagonal)), offset_(offset) {
  if (num_vars == 0) throw ArgumentError("QUBO needs at least one variable");
  if (diagonal_.size() != num_vars)
    throw ArgumentError("diagonal has " + std::to_string(diagonal_.size()) +
                        " entries, expected " + std::to_string(num_vars));
  check_finite(offset_, "offset");
  for (double d : diagonal_) check_finite(d, "diagonal");

  couplers_.reserve(couplers.size());
  for (const auto& t : couplers) {
    if (t.i >= num_vars || t.j >= num_vars)
      throw ArgumentError("coupler (" + std::to_string(t.i) + ", " +
                          std::to_string(t.j) + ") out of range");
    check_finite(t.value, "coupler");
    if (t.i == t.j) {
      diagonal_[t.i] += t.value;
      continue;
    }
    couplers_.push_back({std::max(t.i, t.j), std::min(t.i, t.j), t.value});
  }
  std::sort(couplers_.begin(), couplers_.end(), [](const auto& a, const auto& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  // Sum duplicates in place.
  std::size_t out = 0;
  for (std::size_t k = 0; k < couplers_.size(); ++k) {
    if (out > 0 && couplers_[out - 1].row == couplers_[k].row &&
        couplers_[out - 1].col == couplers_[k].col) {
      couplers_[out - 1].value += couplers_[k].value;
    } else {
      couplers_[out++] = couplers_[k];
    }
  }
  couplers_.resize(out);
  build_adjacency();
}

QuboProblem QuboProblem::from_terms(std::size_t num_vars,
                                    std::span<const Term> terms,
                                    double offset) {
  return QuboProblem(num_vars, std::vector<double>(num_vars, 0.0), terms,
                     offset);
}

void QuboProblem::build_adjacency() {
  const std::size_t n = diagonal_.size();
  adj_start_.assign(n + 1, 0);
  for (const auto& c : couplers_) {
    ++adj_start_[c.row + 1];
    ++adj_start_[c.col + 1];
  }
  for (std::size_t i = 0; i < n; ++i) adj_start_[i + 1] += adj_start_[i];
  adjacency_.resize(adj_start_[n]);
  std::vector<std::size_t> fill(adj_start_.begin(), adj_start_.end() - 1);
  for (const auto& c : couplers_) {
    adjacency_[fill[c.row]++] = {c.col, c.value};
    adjacency_[fill[c.col]++] = {c.row, c.value};
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(adjacency_.begin() + adj_start_[i],
              adjacency_.begin() + adj_start_[i + 1],
              [](const Neighbor& a, const Neighbor& b) {
                return a.index < b.index;
              });
  }
}

double QuboProblem::coupling(std::size_t i, std::size_t j) const {
  if (i >= num_vars() || j >= num_vars() || i == j) return 0.0;
  auto nb = neighbors(i);
  auto it = std::lower_bound(
      nb.begin(), nb.end(), j,
      [](const Neighbor& a, std::size_t idx) { return a.index < idx; });
  return (it != nb.end() && it->index == j) ? it->value : 0.0;
}

QuboProblem QuboProblem::with_offset(double offset) const {
  check_finite(offset, "offset");
  QuboProblem copy = *this;
  copy.offset_ = offset;
  return copy;
}

long double QuboProblem::local_field(BitsView bits, std::size_t i) const {
  long double h = diagonal_[i];
  for (const auto& nb : neighbors(i))
    if (bits[nb.index]) h += nb.value;
  return h;
}

bool operator==(const Coupler& a, const Coupler& b) {
  return a.row == b.row && a.col == b.col && a.value == b.value;
}

bool operator==(const QuboProblem& a, const QuboProblem& b) {
  return a.offset_ == b.offset_ && a.diagonal_ == b.diagonal_ &&
         a.couplers_ == b.couplers_;
}

namespace {

long double energy_wide(const QuboProblem& q, BitsView bits) {
  long double e = q.offset();
  const auto& diag = q.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i)
    if (bits[i]) e += diag[i];
  for (const auto& c : q.couplers())
    if (bits[c.row] && bits[c.col]) e += c.value;
  return e;
}

}  // namespace

double energy(const QuboProblem& q, BitsView bits) {
  check_length(q, bits);
  return static_cast<double>(energy_wide(q, bits));
}

BinarySolution::BinarySolution(const QuboProblem& q, Bits bits)
    : bits_(std::move(bits)) {
  check_length(q, bits_);
  for (auto b : bits_)
    if (b > 1) throw ArgumentError("bit values must be 0 or 1");
  energy_ = energy_wide(q, bits_);
}

BinarySolution BinarySolution::zeros(const QuboProblem& q) {
  return {Bits(q.num_vars(), 0), static_cast<long double>(q.offset())};
}

void BinarySolution::flip(const QuboProblem& q, std::size_t i) {
  energy_ += flip_delta(q, *this, i);
  bits_[i] ^= 1U;
}

double flip_delta(const QuboProblem& q, const BinarySolution& x,
                  std::size_t i) {
  check_index(q, i);
  check_length(q, x.bits());
  const long double h = q.local_field(x.bits(), i);
  return static_cast<double>(x[i] ? -h : h);
}

BinarySolution apply_flip(BinarySolution x, const QuboProblem& q,
                          std::size_t i) {
  x.flip(q, i);
  return x;
}

FlipState::FlipState(const QuboProblem& q, Bits bits) : q_(&q) {
  reset(std::move(bits));
}

void FlipState::reset(Bits bits) {
  check_length(*q_, bits);
  bits_ = std::move(bits);
  const std::size_t n = bits_.size();
  field_.assign(n, 0.0L);
  for (std::size_t i = 0; i < n; ++i) field_[i] = q_->linear(i);
  for (const auto& c : q_->couplers()) {
    if (bits_[c.col]) field_[c.row] += c.value;
    if (bits_[c.row]) field_[c.col] += c.value;
  }
  energy_ = energy_wide(*q_, bits_);
}

void FlipState::flip(std::size_t i) {
  energy_ += delta(i);
  bits_[i] ^= 1U;
  const long double sign = bits_[i] ? 1.0L : -1.0L;
  for (const auto& nb : q_->neighbors(i)) field_[nb.index] += sign * nb.value;
}

}  // namespace qaesolve
