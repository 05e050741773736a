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

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hspec/detail/rng.hpp"
#include "hspec/spectral_radius.hpp"
#include "hspec/structure.hpp"
#include "hspec/tensor_ops.hpp"

namespace hspec {

/// Best Rayleigh value found on the unit k-norm sphere. Always an upper
/// bound on the minimum H-eigenvalue; exact (up to the enclosure width) on
/// odd-bipartite instances.
struct MuEstimate {
  enum class Method { ExactOddBipartite, ProjectedDescent };

  double value = 0.0;
  VertexVector x;
  int restarts = 0;
  Method method = Method::ProjectedDescent;
  double residual = 0.0;
};

inline std::string to_string(MuEstimate::Method m) {
  return m == MuEstimate::Method::ExactOddBipartite ? "exact-odd-bipartite" : "projected-descent";
}

/// Exact gradient of x -> rayleigh(H, x), namely k * adjacency_apply(H, x).
inline VertexVector rayleigh_gradient(const Hypergraph& H, const VertexVector& x) {
  VertexVector g = adjacency_apply(H, x);
  for (double& v : g) v *= static_cast<double>(H.k());
  return g;
}

namespace detail {

struct DescentResult {
  double value;
  VertexVector x;
};

// Projected gradient descent on { sum x_i^k = 1 } (k even): step against the
// gradient component orthogonal to the constraint normal x^{[k-1]}, with
// Armijo backtracking, renormalizing every step.
inline DescentResult projected_descent(const Hypergraph& H, VertexVector x0, double tol,
                                       int max_steps = 100000) {
  const int k = H.k();
  const int n = H.n();
  constexpr double kArmijo = 1e-4;

  VertexVector x = k_norm_normalize(x0, k);
  double f = rayleigh(H, x);
  for (int step = 0; step < max_steps; ++step) {
    const VertexVector g = rayleigh_gradient(H, x);
    VertexVector normal(n);
    double gn = 0.0, nn = 0.0;
    for (int i = 0; i < n; ++i) {
      normal[i] = pow_int(x[i], k - 1);
      gn += g[i] * normal[i];
      nn += normal[i] * normal[i];
    }
    VertexVector proj(n);
    double pg2 = 0.0;
    for (int i = 0; i < n; ++i) {
      proj[i] = g[i] - (gn / nn) * normal[i];
      pg2 += proj[i] * proj[i];
    }
    if (std::sqrt(pg2) <= tol) break;

    bool accepted = false;
    for (double alpha = 0.5; alpha >= 1e-14; alpha *= 0.5) {
      VertexVector trial(n);
      double mx = 0.0;
      for (int i = 0; i < n; ++i) {
        trial[i] = x[i] - alpha * proj[i];
        mx = std::max(mx, std::abs(trial[i]));
      }
      if (mx < 1e-30) continue;
      const VertexVector xt = k_norm_normalize(trial, k);
      const double ft = rayleigh(H, xt);
      if (ft <= f - kArmijo * alpha * pg2) {
        x = xt;
        f = ft;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;  // numerically stationary
  }
  return {rayleigh(H, x), x};
}

}  // namespace detail

/// Multi-restart projected gradient descent for the minimum H-eigenvalue of
/// an even-uniformity connected k-graph (the minimum of the Rayleigh form
/// over the unit k-norm sphere).
///
/// Fixed seeds: the all-ones vector, the Perron approximation with
/// alternating signs, the Perron approximation negated on an odd
/// bipartition class when one exists, and a single-vertex indicator (whose
/// Rayleigh value is exactly 0, so the estimate is never positive).
/// Remaining restarts use uniform random sign/magnitude vectors. Ties break
/// toward the lower restart index.
inline MuEstimate mu_estimate(const Hypergraph& H, int restarts = 64, double tol = 1e-8,
                              std::uint64_t seed = 0) {
  if (H.k() % 2 != 0)
    throw std::invalid_argument("mu_estimate: defined for even uniformity only");
  if (!is_connected(H)) throw std::invalid_argument("mu_estimate: hypergraph is disconnected");
  if (restarts < 1) throw std::invalid_argument("mu_estimate: need at least one restart");

  const int n = H.n();
  std::vector<VertexVector> seeds;
  seeds.emplace_back(n, 1.0);
  if (H.m() >= 1) {
    const SpectralEnclosure enc = rho_enclose(H, std::min(tol, 1e-8), 200000);
    VertexVector alt = enc.x;
    for (int v = 1; v <= n; ++v)
      if (v % 2 == 0) alt[v - 1] = -alt[v - 1];
    seeds.push_back(std::move(alt));
    const OddBipartition ob = odd_bipartition(H);
    if (ob) {
      VertexVector flipped = enc.x;
      for (int v : *ob.v1) flipped[v - 1] = -flipped[v - 1];
      seeds.push_back(std::move(flipped));
    }
  }
  VertexVector indicator(n, 0.0);
  indicator[0] = 1.0;
  seeds.push_back(std::move(indicator));

  // Fixed seeds always run, even when restarts is smaller than their count;
  // random seeds fill the remainder.
  detail::Rng rng(detail::mix_seed(seed, 0x6d75u));
  while (static_cast<int>(seeds.size()) < restarts) {
    VertexVector r(n);
    double mx = 0.0;
    for (int i = 0; i < n; ++i) {
      r[i] = rng.uniform(-1.0, 1.0);
      mx = std::max(mx, std::abs(r[i]));
    }
    if (mx < 1e-12) continue;
    seeds.push_back(std::move(r));
  }

  MuEstimate best;
  bool have = false;
  for (const VertexVector& s : seeds) {
    detail::DescentResult r = detail::projected_descent(H, s, tol);
    if (!have || r.value < best.value) {
      best.value = r.value;
      best.x = std::move(r.x);
      have = true;
    }
  }
  best.restarts = static_cast<int>(seeds.size());
  best.method = MuEstimate::Method::ProjectedDescent;
  best.residual = eigen_residual(H, best.x, best.value);
  return best;
}

/// Exact route for odd-bipartite even-uniformity instances: the minimum
/// H-eigenvalue is the negated spectral radius, attained by the Perron
/// vector negated on the bipartition class.
inline MuEstimate mu_odd_bipartite_exact(const Hypergraph& H, const SpectralEnclosure& rho) {
  if (H.k() % 2 != 0)
    throw std::invalid_argument("mu_odd_bipartite_exact: defined for even uniformity only");
  const OddBipartition ob = odd_bipartition(H);
  if (!ob) throw std::invalid_argument("mu_odd_bipartite_exact: hypergraph is not odd-bipartite");

  MuEstimate est;
  est.value = -rho.midpoint();
  est.x = rho.x;
  for (int v : *ob.v1) est.x[v - 1] = -est.x[v - 1];
  est.restarts = 0;
  est.method = MuEstimate::Method::ExactOddBipartite;
  est.residual = eigen_residual(H, est.x, est.value);
  return est;
}

}  // namespace hspec
