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

#include "qaesolve/qae.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qaesolve/decomposer.hpp"
#include "qaesolve/errors.hpp"
#include "qaesolve/rng.hpp"

namespace qaesolve {

EncodingScheme::EncodingScheme(int k_bits) : k_(k_bits) {
  if (k_bits < 2 || k_bits > 52)
    throw ArgumentError("k_bits must be in [2, 52], got " +
                        std::to_string(k_bits));
  weights_.resize(static_cast<std::size_t>(k_));
  for (int k = 0; k < k_ - 1; ++k)
    weights_[static_cast<std::size_t>(k)] = std::ldexp(1.0, k - (k_ - 1));
  weights_.back() = -1.0;
}

Vector EncodingScheme::decode(BitsView bits, std::size_t n) const {
  const auto k = static_cast<std::size_t>(k_);
  if (bits.size() != n * k)
    throw ArgumentError("expected " + std::to_string(n * k) +
                        " bits for " + std::to_string(n) +
                        " elements, got " + std::to_string(bits.size()));
  Vector v(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t b = 0; b < k; ++b)
      if (bits[i * k + b]) s += weights_[b];
    v[i] = s;
  }
  return v;
}

Bits EncodingScheme::encode(std::span<const double> v) const {
  const auto k = static_cast<std::size_t>(k_);
  const double scale = std::ldexp(1.0, k_ - 1);
  const auto lo = -static_cast<long long>(scale);
  const auto hi = static_cast<long long>(scale) - 1;
  Bits bits(v.size() * k, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const long long m =
        std::clamp(std::llround(v[i] * scale), lo, hi);
    // Two's complement of m in K bits.
    const auto u = static_cast<unsigned long long>(m) &
                   ((1ULL << k) - 1ULL);
    for (std::size_t b = 0; b < k; ++b) bits[i * k + b] = (u >> b) & 1ULL;
  }
  return bits;
}

Vector decode(BitsView bits, int k_bits, std::size_t n) {
  return EncodingScheme(k_bits).decode(bits, n);
}

QuboProblem build_qubo(const SymmetricMatrix& a, double lambda,
                       const EncodingScheme& enc) {
  const std::size_t n = a.size();
  const auto k = static_cast<std::size_t>(enc.k_bits());
  const auto& c = enc.weights();
  const std::size_t nvars = n * k;

  auto b = [&](std::size_t i, std::size_t j) {
    return i == j ? a(i, i) + lambda : a(i, j);
  };

  std::vector<double> diag(nvars, 0.0);
  std::vector<Term> couplers;
  couplers.reserve(nvars * (nvars - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t kb = 0; kb < k; ++kb) {
      const std::size_t p = i * k + kb;
      diag[p] = c[kb] * c[kb] * b(i, i);
      // Off-diagonal bit pairs appear twice in (v, Bv); both halves go to
      // the single lower-triangular coupler.
      for (std::size_t j = 0; j <= i; ++j) {
        const double bij = b(i, j);
        if (bij == 0.0) continue;
        const std::size_t lmax = (j == i) ? kb : k;
        for (std::size_t lb = 0; lb < lmax; ++lb)
          couplers.push_back({p, j * k + lb, 2.0 * c[kb] * c[lb] * bij});
      }
    }
  }
  return QuboProblem(nvars, std::move(diag), couplers);
}

SolverConfig default_qae_solver() {
  SolverConfig cfg;
  cfg.method = Method::decompose;
  cfg.decomposer.backend = Backend::exact;
  cfg.decomposer.subqubo_size = 10;
  cfg.decomposer.repeat_limit = 3;
  return cfg;
}

void QaeOptions::validate() const {
  if (!(lambda_tol > 0.0)) throw ArgumentError("lambda_tol must be positive");
  if (max_lambda_iters < 1)
    throw ArgumentError("max_lambda_iters must be at least 1");
  if (trivial_retreat && !(*trivial_retreat > 0.0))
    throw ArgumentError("trivial_retreat must be positive");
  if (deflation_margin && !(*deflation_margin > 0.0))
    throw ArgumentError("deflation_margin must be positive");
}

namespace {

// Coordinate descent over vector elements: each element's K bits are solved
// exactly with every other element clamped, until a full pass finds nothing
// strictly better. This reaches states a bit-level search cannot, such as
// all K bits of one element turning over at once.
Bits polish_elements(const QuboProblem& q, Bits bits, std::size_t n, int k) {
  const auto kk = static_cast<std::size_t>(k);
  BinarySolution x(q, std::move(bits));
  std::vector<std::size_t> idx(kk);
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t b = 0; b < kk; ++b) idx[b] = i * kk + b;
      const auto piece = extract_subqubo(q, x, idx);
      const auto r = solve_exact(piece.sub);
      if (r.best_energy >= x.energy()) continue;
      Bits next = x.bits();
      for (std::size_t b = 0; b < kk; ++b) next[idx[b]] = r.solution.bits()[b];
      BinarySolution y(q, std::move(next));
      if (y.energy() < x.energy()) {
        x = std::move(y);
        improved = true;
      }
    }
  }
  return x.bits();
}

double default_step(const SpectralBounds& b) {
  const double spread = b.spread();
  return spread > 0.0 ? 0.1 * spread
                      : 0.1 * std::max(1.0, std::fabs(b.hi));
}

Vector unit(const Vector& v) {
  const double nv = norm2(v);
  Vector u = v;
  for (double& x : u) x /= nv;
  return u;
}

}  // namespace

EigenSolveResult solve_eigenpair(const SymmetricMatrix& a,
                                 const QaeOptions& opts, std::uint64_t stream) {
  opts.validate();
  const std::size_t n = a.size();
  const auto bounds = gershgorin_bounds(a);
  const double retreat = opts.trivial_retreat.value_or(default_step(bounds));

  // lambda = -hi makes A + lambda I negative semidefinite, so a nonzero
  // minimizer exists.
  double lambda = -bounds.hi;
  std::vector<double> history;
  std::optional<Bits> best_bits;
  Vector best_v;
  double best_e = 0.0;
  std::size_t qubos = 0;

  for (int t = 0; t < opts.max_lambda_iters; ++t) {
    history.push_back(lambda);
    const QuboProblem q = build_qubo(a, lambda, opts.encoding);
    ++qubos;
    std::optional<BitsView> warm;
    if (best_bits) warm = BitsView(*best_bits);
    const auto r = solve(
        q, opts.solver,
        derive_seed(opts.solver.seed, stream, static_cast<std::uint64_t>(t)),
        warm);
    Bits bits = r.solution.bits();
    if (opts.element_polish && opts.encoding.k_bits() <= static_cast<int>(kExactCap))
      bits = polish_elements(q, std::move(bits), n, opts.encoding.k_bits());
    const Vector v = opts.encoding.decode(bits, n);

    const bool trivial =
        std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
    if (trivial) {
      // Only the null vector at lambda = -E_best: nothing on the grid has a
      // lower quotient, so the iteration has converged.
      if (best_bits) break;
      lambda -= retreat;
      continue;
    }

    const double e = rayleigh_quotient(a, v);
    if (!best_bits || e < best_e) {
      best_e = e;
      best_v = v;
      best_bits = std::move(bits);
    }
    const double next = -best_e;
    const bool done = std::fabs(next - lambda) < opts.lambda_tol;
    lambda = next;
    if (done) break;
  }

  if (!best_bits)
    throw ConvergenceError(
        "every QUBO returned the trivial solution after " +
            std::to_string(history.size()) + " lambda iterations",
        history);

  EigenSolveResult out;
  out.pair = {best_e, best_v};
  out.unit_vector = unit(best_v);
  out.lambda_opt = -best_e;
  out.lambda_history = std::move(history);
  out.qubo_count = qubos;
  return out;
}

SymmetricMatrix deflate(const SymmetricMatrix& a, const EigenPair& pair,
                        double sigma) {
  const std::size_t n = a.size();
  const auto& v = pair.vector;
  if (v.size() != n) throw ArgumentError("deflate: vector length mismatch");
  const double vv = dot(v, v);
  if (vv == 0.0) throw ArgumentError("deflate: zero eigenvector");
  const double shift = (sigma - pair.value) / vv;
  std::vector<double> e = a.entries();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i * n + j] += shift * v[i] * v[j];
  return {n, std::move(e)};
}

std::vector<double> SpectrumResult::values() const {
  std::vector<double> out;
  out.reserve(states.size());
  for (const auto& s : states) out.push_back(s.pair.value);
  return out;
}

SpectrumResult solve_spectrum(const SymmetricMatrix& a, std::size_t m,
                              const QaeOptions& opts) {
  if (m < 1 || m > a.size())
    throw ArgumentError("number of states must be in [1, " +
                        std::to_string(a.size()) + "], got " +
                        std::to_string(m));
  SpectrumResult out;
  SymmetricMatrix current = a;
  for (std::size_t k = 0; k < m; ++k) {
    EigenSolveResult state;
    try {
      state = solve_eigenpair(current, opts, k);
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("state " + std::to_string(k) + ": " + e.what(),
                             e.lambda_history());
    }
    out.qubo_count += state.qubo_count;

    if (k + 1 < m) {
      const auto bounds = gershgorin_bounds(current);
      const double sigma =
          bounds.hi + opts.deflation_margin.value_or(default_step(bounds));
      current = deflate(current, state.pair, sigma);
    }
    state.pair.value = rayleigh_quotient(a, state.pair.vector);
    out.states.push_back(std::move(state));
  }
  std::stable_sort(out.states.begin(), out.states.end(),
                   [](const auto& x, const auto& y) {
                     return x.pair.value < y.pair.value;
                   });
  return out;
}

std::vector<double> transitions(std::span<const double> values,
                                double unit_scale) {
  if (values.size() < 2)
    throw ArgumentError("transitions need at least two values");
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] < values[k - 1])
      throw ArgumentError("transitions need ascending values (index " +
                          std::to_string(k) + " is smaller than its predecessor)");
  std::vector<double> out;
  out.reserve(values.size() - 1);
  for (std::size_t k = 1; k < values.size(); ++k)
    out.push_back((values[k] - values[0]) * unit_scale);
  return out;
}

}  // namespace qaesolve
