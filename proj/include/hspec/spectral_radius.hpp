// Copyright 2026 The hspec Authors
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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hspec/hypergraph.hpp"
#include "hspec/tensor_ops.hpp"

namespace hspec {

/// Certified two-sided enclosure [lower, upper] of the spectral radius,
/// together with the positive normalized iterate that produced it.
struct SpectralEnclosure {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  VertexVector x;
  long long iterations = 0;
  bool converged = false;
  double shift_used = 1.0;
  bool clamped = false;  // a tiny-entry clamp fired during iteration

  double midpoint() const { return 0.5 * (lower + upper); }
  double width() const { return upper - lower; }
};

namespace detail {

// Outward rounding absorbs the handful of roundings in a ratio evaluation,
// so the reported interval stays a true enclosure.
inline double nudge_down(double v, int ulps = 4) {
  for (int i = 0; i < ulps; ++i) v = std::nextafter(v, -std::numeric_limits<double>::infinity());
  return v;
}
inline double nudge_up(double v, int ulps = 4) {
  for (int i = 0; i < ulps; ++i) v = std::nextafter(v, std::numeric_limits<double>::infinity());
  return v;
}

}  // namespace detail

/// Power iteration on the diagonally shifted adjacency action with
/// Collatz-Wielandt style two-sided bounds.
///
/// From a positive iterate x, y = A x^{k-1} + shift * x^{[k-1]}. The min and
/// max of y_i / x_i^{k-1}, minus the shift, bound the spectral radius from
/// below and above for every positive x, so every iteration yields a valid
/// enclosure whether or not the iteration has converged. The next iterate is
/// the normalized (k-1)-th root of y. The returned interval is the
/// intersection of all per-iteration intervals (tightest seen).
///
/// The shift keeps the iteration from oscillating on bipartite-like
/// structures; bounds are reported after subtracting it.
inline SpectralEnclosure rho_enclose(const Hypergraph& H, double tol = 1e-10,
                                     long long max_iter = 1000000) {
  if (H.m() == 0) throw std::invalid_argument("rho_enclose: hypergraph has no edges");
  if (!is_connected(H)) throw std::invalid_argument("rho_enclose: hypergraph is disconnected");
  if (!(tol > 0)) throw std::invalid_argument("rho_enclose: tolerance must be positive");

  const int k = H.k();
  const int n = H.n();
  const double shift = 1.0;

  SpectralEnclosure enc;
  enc.shift_used = shift;
  enc.lower = -std::numeric_limits<double>::infinity();

  VertexVector x = k_norm_normalize(VertexVector(n, 1.0), k);
  VertexVector y(n), xk(n);
  for (long long t = 1; t <= max_iter; ++t) {
    enc.iterations = t;
    y = adjacency_apply(H, x);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < n; ++i) {
      xk[i] = detail::pow_int(x[i], k - 1);
      y[i] += shift * xk[i];
      const double ratio = y[i] / xk[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    const double lower_t = detail::nudge_down(lo - shift);
    const double upper_t = detail::nudge_up(hi - shift);
    enc.lower = std::max(enc.lower, lower_t);
    enc.upper = std::min(enc.upper, upper_t);
    if (upper_t - lower_t <= tol) {
      enc.converged = true;
      enc.x = x;
      return enc;
    }
    if (k == 2) {
      x = k_norm_normalize(y, k);
    } else {
      const double inv = 1.0 / static_cast<double>(k - 1);
      for (int i = 0; i < n; ++i) y[i] = std::pow(y[i], inv);
      x = k_norm_normalize(y, k);
    }
    for (int i = 0; i < n; ++i)
      if (x[i] < 1e-300) {
        x[i] = 1e-300;
        enc.clamped = true;
      }
  }
  enc.x = x;
  return enc;  // converged == false: best enclosure seen
}

/// Exact spectral radius of a connected regular k-graph: the common degree.
inline double rho_regular_exact(const Hypergraph& H) {
  if (!is_connected(H)) throw std::invalid_argument("rho_regular_exact: hypergraph is disconnected");
  if (!is_regular(H)) throw std::invalid_argument("rho_regular_exact: hypergraph is not regular");
  return static_cast<double>(degree_profile(H).delta_max);
}

}  // namespace hspec
