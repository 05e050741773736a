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

namespace hspec {

/// One real value per vertex; values[v-1] belongs to vertex v.
using VertexVector = std::vector<double>;

namespace detail {

inline void check_dimension(const Hypergraph& H, const VertexVector& x, const char* what) {
  if (static_cast<int>(x.size()) != H.n())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

inline double pow_int(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace detail

/// Adjacency-tensor action: y_i = sum over edges e containing i of the
/// product of x over e minus i. The tensor is never materialized; the
/// symmetric 1/(k-1)! entries collapse to this per-edge product form.
///
/// Per edge the product over e\{i} comes from one full-edge product plus a
/// division when x_i != 0, and from direct re-multiplication at zeros.
/// Products accumulate left-to-right over sorted vertices, so results are
/// deterministic across runs.
inline VertexVector adjacency_apply(const Hypergraph& H, const VertexVector& x) {
  detail::check_dimension(H, x, "adjacency_apply");
  VertexVector y(x.size(), 0.0);
  for (const Edge& e : H.edges()) {
    int zeros = 0;
    double prod_nonzero = 1.0;
    for (int v : e) {
      const double xv = x[v - 1];
      if (xv == 0.0)
        ++zeros;
      else
        prod_nonzero *= xv;
    }
    if (zeros >= 2) continue;
    if (zeros == 1) {
      for (int v : e)
        if (x[v - 1] == 0.0) {
          double p = 1.0;
          for (int w : e)
            if (w != v) p *= x[w - 1];
          y[v - 1] += p;
        }
      continue;
    }
    for (int v : e) y[v - 1] += prod_nonzero / x[v - 1];
  }
  return y;
}

/// k * sum over edges of the product of x over the edge; equals the inner
/// product of x with adjacency_apply(H, x) up to roundoff.
inline double rayleigh(const Hypergraph& H, const VertexVector& x) {
  detail::check_dimension(H, x, "rayleigh");
  double s = 0.0;
  for (const Edge& e : H.edges()) {
    double p = 1.0;
    for (int v : e) p *= x[v - 1];
    s += p;
  }
  return static_cast<double>(H.k()) * s;
}

/// x scaled so that sum |x_i|^k = 1; preserves signs.
inline VertexVector k_norm_normalize(const VertexVector& x, int k) {
  double mx = 0.0;
  for (double v : x) mx = std::max(mx, std::abs(v));
  if (mx == 0.0) throw std::invalid_argument("k_norm_normalize: zero vector");
  double s = 0.0;
  for (double v : x) s += detail::pow_int(std::abs(v) / mx, k);
  const double scale = 1.0 / (mx * std::pow(s, 1.0 / k));
  VertexVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * scale;
  return out;
}

inline VertexVector componentwise_power(const VertexVector& x, double alpha) {
  const bool integral = std::floor(alpha) == alpha;
  VertexVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!integral && x[i] < 0.0)
      throw std::invalid_argument("componentwise_power: negative entry with fractional exponent");
    out[i] = std::pow(x[i], alpha);
  }
  return out;
}

/// max_i |(A x^{k-1})_i - lambda * x_i^{k-1}|; zero exactly at an eigenpair.
inline double eigen_residual(const Hypergraph& H, const VertexVector& x, double lambda) {
  detail::check_dimension(H, x, "eigen_residual");
  const VertexVector y = adjacency_apply(H, x);
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    r = std::max(r, std::abs(y[i] - lambda * detail::pow_int(x[i], H.k() - 1)));
  return r;
}

}  // namespace hspec
