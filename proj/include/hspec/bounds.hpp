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
#include <vector>

#include "hspec/hypergraph.hpp"
#include "hspec/rational.hpp"
#include "hspec/spectral_radius.hpp"
#include "hspec/tensor_ops.hpp"

namespace hspec {

// Lower bounds on the gap between the maximum degree and the spectral
// radius of a connected nonregular k-graph, evaluated exactly. The degree
// surplus n*delta - k*m equals the sum of (delta - d_i) and is >= 1 exactly
// when the instance is nonregular.

namespace detail {

inline long long gap_surplus(long long n, long long m, long long k, long long delta,
                             const char* what) {
  const long long t = n * delta - k * m;
  if (t < 1) throw std::invalid_argument(std::string(what) + ": degree surplus must be >= 1");
  return t;
}

}  // namespace detail

/// k*t / (n * (2*(k-1)*D*t + k)) with t = n*delta - k*m.
inline Rational bound_gap_diameter(long long n, long long m, long long k, long long delta,
                                   long long diam) {
  if (k < 2) throw std::invalid_argument("bound_gap_diameter: k must be >= 2");
  if (diam < 1) throw std::invalid_argument("bound_gap_diameter: diameter must be >= 1");
  const long long t = detail::gap_surplus(n, m, k, delta, "bound_gap_diameter");
  return Rational(k * t, n * (2 * (k - 1) * diam * t + k));
}

/// f*k*t / (n * (2*(k-1)*t + f*k)) for k >= 5 and an f-edge-connected instance.
inline Rational bound_gap_econn_k5(long long n, long long m, long long k, long long delta,
                                   long long f) {
  if (k < 5) throw std::invalid_argument("bound_gap_econn_k5: k must be >= 5");
  if (f < 1) throw std::invalid_argument("bound_gap_econn_k5: edge-connectivity must be >= 1");
  const long long t = detail::gap_surplus(n, m, k, delta, "bound_gap_econn_k5");
  return Rational(f * k * t, n * (2 * (k - 1) * t + f * k));
}

/// f*t / (n * (2*t + f)) with t = n*delta - 4*m, for 4-uniform instances.
inline Rational bound_gap_econn_k4(long long n, long long m, long long delta, long long f) {
  if (f < 1) throw std::invalid_argument("bound_gap_econn_k4: edge-connectivity must be >= 1");
  const long long t = detail::gap_surplus(n, m, 4, delta, "bound_gap_econn_k4");
  return Rational(f * t, n * (2 * t + f));
}

/// 1/(3n): the universal gap bound for nonregular connected k-graphs, k >= 4.
inline Rational bound_gap_universal(long long n) {
  if (n < 1) throw std::invalid_argument("bound_gap_universal: n must be >= 1");
  return Rational(1, 3 * n);
}

/// t / (n*(D*t + 1)) with t = n*delta - 2*m: the classical 2-graph gap bound.
inline Rational bound_gap_diameter_k2(long long n, long long m, long long delta, long long diam) {
  if (diam < 1) throw std::invalid_argument("bound_gap_diameter_k2: diameter must be >= 1");
  const long long t = detail::gap_surplus(n, m, 2, delta, "bound_gap_diameter_k2");
  return Rational(t, n * (diam * t + 1));
}

/// 1/(n*(D+1)): reference lower bound on delta + mu for nonbipartite 2-graphs.
inline Rational bound_mu_diameter_k2(long long n, long long diam) {
  if (n < 1 || diam < 1) throw std::invalid_argument("bound_mu_diameter_k2: invalid arguments");
  return Rational(1, n * (diam + 1));
}

// --- numeric inequality oracles --------------------------------------------

struct InequalitySides {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Arithmetic-geometric mean gap against the pairwise square refinement:
/// mean(a) - geomean(a) vs (1/(n(n-1))) * sum_{i<j} (sqrt(a_i)-sqrt(a_j))^2.
inline InequalitySides lemma_am_gm_refinement(const std::vector<double>& a) {
  if (a.size() < 2) throw std::invalid_argument("lemma_am_gm_refinement: need at least two values");
  const int n = static_cast<int>(a.size());
  double sum = 0.0;
  bool any_zero = false;
  double log_sum = 0.0;
  for (double v : a) {
    if (v < 0.0) throw std::invalid_argument("lemma_am_gm_refinement: negative entry");
    sum += v;
    if (v == 0.0)
      any_zero = true;
    else
      log_sum += std::log(v);
  }
  const double mean = sum / n;
  const double geo = any_zero ? 0.0 : std::exp(log_sum / n);
  double pair_sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = std::sqrt(a[i]) - std::sqrt(a[j]);
      pair_sum += d * d;
    }
  return {mean - geo, pair_sum / (static_cast<double>(n) * (n - 1))};
}

/// a*(y1-y2)^2 + b*y2^2 vs (ab/(a+b)) * y1^2 (equality at y2 = a*y1/(a+b)).
inline InequalitySides lemma_weighted_quadratic(double a, double b, double y1, double y2) {
  if (!(a > 0.0) || !(b > 0.0) || !(y1 > 0.0) || !(y2 > 0.0))
    throw std::invalid_argument("lemma_weighted_quadratic: arguments must be positive");
  return {a * (y1 - y2) * (y1 - y2) + b * y2 * y2, a * b / (a + b) * y1 * y1};
}

// --- diagnostics on the computed Perron vector ------------------------------

/// (n*delta - k*m) * min(x)^k + (1/(k-1)) * sum over edges of the pairwise
/// (x_i^{k/2} - x_j^{k/2})^2 sum: the decomposition the gap bounds descend
/// from, evaluated at a positive vector.
inline double perron_gap_rhs(const Hypergraph& H, const VertexVector& x) {
  detail::check_dimension(H, x, "perron_gap_rhs");
  const int k = H.k();
  const DegreeProfile dp = degree_profile(H);
  const long long surplus =
      static_cast<long long>(H.n()) * dp.delta_max - static_cast<long long>(k) * H.m();
  double xmin = x[0];
  for (double v : x) {
    if (!(v > 0.0)) throw std::invalid_argument("perron_gap_rhs: vector must be positive");
    xmin = std::min(xmin, v);
  }
  const double half = 0.5 * k;
  double pair_sum = 0.0;
  for (const Edge& e : H.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        const double d = std::pow(x[e[i] - 1], half) - std::pow(x[e[j] - 1], half);
        pair_sum += d * d;
      }
  }
  return static_cast<double>(surplus) * detail::pow_int(xmin, k) + pair_sum / (k - 1);
}

/// Checks delta - upper(rho) > perron_gap_rhs(x) - eps at the enclosure's
/// positive iterate, with eps = 10 * tol. Diagnostic, not a certificate.
inline bool perron_gap_check(const Hypergraph& H, const SpectralEnclosure& enc,
                             double tol = 1e-10) {
  if (!is_connected(H)) throw std::invalid_argument("perron_gap_check: hypergraph is disconnected");
  if (is_regular(H)) throw std::invalid_argument("perron_gap_check: hypergraph is regular");
  const DegreeProfile dp = degree_profile(H);
  return dp.delta_max - enc.upper > perron_gap_rhs(H, enc.x) - 10.0 * tol;
}

struct PathSquareSums {
  double lhs = 0.0;          // pairwise square sum over the path's edges
  double rhs_by_length = 0.0;  // (k/2r) * (x_u^{k/2} - x_v^{k/2})^2
  double rhs_uniform = 0.0;    // r-free variant: (k/2) for k >= 5, (3/2) for k = 4
  bool has_uniform = false;
};

/// Square-sum terms along a path from the maximum entry of x to the minimum.
inline PathSquareSums path_square_sums(const Hypergraph& H, const VertexVector& x,
                                       const HyperPath& path) {
  detail::check_dimension(H, x, "path_square_sums");
  if (!is_valid_path(H, path) || path.length() < 1)
    throw std::invalid_argument("path_square_sums: invalid path");
  double xmax = x[0], xmin = x[0];
  for (double v : x) {
    if (!(v > 0.0)) throw std::invalid_argument("path_square_sums: vector must be positive");
    xmax = std::max(xmax, v);
    xmin = std::min(xmin, v);
  }
  if (x[path.vertices.front() - 1] != xmax || x[path.vertices.back() - 1] != xmin)
    throw std::invalid_argument("path_square_sums: path must run from argmax to argmin of x");

  const int k = H.k();
  const double half = 0.5 * k;
  PathSquareSums s;
  for (int j : path.edges) {
    const Edge& e = H.edge(j);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t l = i + 1; l < e.size(); ++l) {
        const double d = std::pow(x[e[i] - 1], half) - std::pow(x[e[l] - 1], half);
        s.lhs += d * d;
      }
  }
  const double gap = std::pow(xmax, half) - std::pow(xmin, half);
  const double gap2 = gap * gap;
  s.rhs_by_length = static_cast<double>(k) / (2.0 * path.length()) * gap2;
  if (k >= 5) {
    s.rhs_uniform = 0.5 * k * gap2;
    s.has_uniform = true;
  } else if (k == 4) {
    s.rhs_uniform = 1.5 * gap2;
    s.has_uniform = true;
  }
  return s;
}

/// Path square-sum inequality at tolerance 1e-12, including the r-free
/// variant when the uniformity qualifies.
inline bool path_square_check(const Hypergraph& H, const VertexVector& x, const HyperPath& path) {
  const PathSquareSums s = path_square_sums(H, x, path);
  if (s.lhs < s.rhs_by_length - 1e-12) return false;
  if (s.has_uniform && s.lhs < s.rhs_uniform - 1e-12) return false;
  return true;
}

}  // namespace hspec
