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

#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "hspec/bounds.hpp"
#include "hspec/detail/rng.hpp"

using namespace hspec;
using Catch::Approx;

TEST_CASE("Rational canonical form and arithmetic") {
  CHECK(Rational(6, 76).str() == "3/38");
  CHECK(Rational(3, -9).str() == "-1/3");
  CHECK(Rational(0, 5).str() == "0/1");
  CHECK(Rational(2, 28) == Rational(1, 14));
  CHECK(Rational(1, 14) < Rational(1, 13));
  CHECK((Rational(1, 2) + Rational(1, 3)).str() == "5/6");
  CHECK((Rational(1, 2) * Rational(2, 3)).str() == "1/3");
  CHECK((Rational(1, 2) / Rational(-3, 4)).str() == "-2/3");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK(Rational::from_double_exact(0.5) == Rational(1, 2));
  CHECK(Rational::from_double_exact(0.1) ==
        Rational(3602879701896397LL, 36028797018963968LL));
  CHECK(Rational(7, 3).to_double() == Approx(7.0 / 3.0));
}

TEST_CASE("diameter gap bound values") {
  CHECK(bound_gap_diameter(4, 2, 3, 2, 2) == Rational(3, 38));
  CHECK(bound_gap_diameter(4, 3, 2, 2, 3) == Rational(1, 14));
  CHECK_THROWS_AS(bound_gap_diameter(4, 3, 3, 2, 2), std::invalid_argument);  // surplus <= 0
  CHECK_THROWS_AS(bound_gap_diameter(4, 2, 3, 2, 0), std::invalid_argument);  // bad diameter
}

TEST_CASE("edge-connectivity gap bound values, k >= 5") {
  CHECK(bound_gap_econn_k5(6, 1, 5, 1, 1) == Rational(5, 78));
  CHECK(bound_gap_econn_k5(6, 1, 5, 1, 2) == Rational(5, 54));
  CHECK_THROWS_AS(bound_gap_econn_k5(6, 1, 4, 1, 1), std::invalid_argument);  // k too small
  CHECK_THROWS_AS(bound_gap_econn_k5(5, 1, 5, 1, 0), std::invalid_argument);  // bad f
}

TEST_CASE("edge-connectivity gap bound values, k = 4") {
  CHECK(bound_gap_econn_k4(5, 1, 1, 1) == Rational(1, 15));
  CHECK(bound_gap_econn_k4(5, 1, 1, 3) == Rational(3, 25));
  CHECK_THROWS_AS(bound_gap_econn_k4(4, 1, 1, 1), std::invalid_argument);  // surplus 0
}

TEST_CASE("universal and 2-graph bounds") {
  CHECK(bound_gap_universal(10) == Rational(1, 30));
  CHECK(bound_gap_universal(1) == Rational(1, 3));
  CHECK(bound_gap_universal(12) == Rational(1, 36));

  CHECK(bound_gap_diameter_k2(3, 2, 2, 2) == Rational(2, 15));
  CHECK(bound_gap_diameter_k2(4, 3, 2, 3) == Rational(1, 14));

  CHECK(bound_mu_diameter_k2(3, 2) == Rational(1, 9));
  CHECK(bound_mu_diameter_k2(4, 3) == Rational(1, 16));
  CHECK(bound_mu_diameter_k2(1, 1) == Rational(1, 2));
}

TEST_CASE("the diameter bound at k = 2 is the classical 2-graph bound") {
  detail::Rng rng(1);
  for (int trial = 0; trial < 2000; ++trial) {
    const long long n = rng.uniform_int(2, 400);
    const long long delta = rng.uniform_int(1, 20);
    const long long diam = rng.uniform_int(1, 30);
    long long t = rng.uniform_int(1, 40);
    if ((n * delta - t) % 2 != 0) ++t;
    if (t > n * delta) continue;
    const long long m = (n * delta - t) / 2;
    CHECK(bound_gap_diameter(n, m, 2, delta, diam) == bound_gap_diameter_k2(n, m, delta, diam));
  }
}

TEST_CASE("f = 1 specializations dominate the universal bound") {
  // 4-uniform: t/(n(2t+1)) >= 1/(3n), equality exactly at t = 1
  for (long long t = 1; t <= 2000; ++t) {
    for (long long n : {5LL, 9LL}) {
      const Rational b(t, n * (2 * t + 1));
      if (t == 1)
        CHECK(b == bound_gap_universal(n));
      else
        CHECK(b > bound_gap_universal(n));
    }
  }
  // k >= 5: strictly above 1/(3n) for every surplus
  for (long long t = 1; t <= 500; ++t)
    for (long long k : {5LL, 7LL}) {
      const long long n = k + 1;
      CHECK(bound_gap_econn_k5(n, t, k, t, 1) > bound_gap_universal(n));
    }
  // and the k4 constructor matches the closed form
  for (long long t = 1; t <= 100; ++t)
    CHECK(bound_gap_econn_k4(5, t, t, 1) == Rational(t, 5 * (2 * t + 1)));
}

TEST_CASE("diameter bound is monotone in surplus and diameter") {
  // increasing in t (via delta) and decreasing in D
  for (long long t = 1; t <= 50; ++t) {
    const Rational cur = bound_gap_diameter(6, t, 5, t, 3);
    const Rational next = bound_gap_diameter(6, t + 1, 5, t + 1, 3);  // surplus t+1
    CHECK(next > cur);
  }
  for (long long diam = 1; diam <= 30; ++diam)
    CHECK(bound_gap_diameter(6, 2, 5, 2, diam) > bound_gap_diameter(6, 2, 5, 2, diam + 1));
}

TEST_CASE("AM-GM refinement oracle") {
  const InequalitySides flat = lemma_am_gm_refinement({1, 1});
  CHECK(flat.lhs == Approx(0.0).margin(1e-15));
  CHECK(flat.rhs == Approx(0.0).margin(1e-15));

  const InequalitySides two = lemma_am_gm_refinement({0, 4});
  CHECK(two.lhs == Approx(2.0));
  CHECK(two.rhs == Approx(2.0));

  const InequalitySides three = lemma_am_gm_refinement({1, 4, 9});
  CHECK(three.lhs == Approx(14.0 / 3.0 - std::cbrt(36.0)).epsilon(1e-12));
  CHECK(three.rhs == Approx(1.0));

  CHECK_THROWS_AS(lemma_am_gm_refinement({-1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(lemma_am_gm_refinement({1}), std::invalid_argument);

  detail::Rng rng(2);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = rng.uniform_int(2, 8);
    std::vector<double> a(n);
    for (double& v : a) v = rng.uniform(0.0, 8.0);
    if (trial % 7 == 0) a[0] = 0.0;  // exercise the zero-geomean branch
    const InequalitySides s = lemma_am_gm_refinement(a);
    CHECK(s.lhs >= s.rhs - 1e-12);
  }
}

TEST_CASE("weighted quadratic completion oracle") {
  const InequalitySides eq1 = lemma_weighted_quadratic(1, 1, 2, 1);
  CHECK(eq1.lhs == Approx(2.0));
  CHECK(eq1.rhs == Approx(2.0));

  const InequalitySides mid = lemma_weighted_quadratic(1, 1, 1, 1);
  CHECK(mid.lhs == Approx(1.0));
  CHECK(mid.rhs == Approx(0.5));

  const InequalitySides eq2 = lemma_weighted_quadratic(2, 3, 1, 0.4);
  CHECK(eq2.lhs == Approx(1.2));
  CHECK(eq2.rhs == Approx(1.2));

  CHECK_THROWS_AS(lemma_weighted_quadratic(0, 1, 1, 1), std::invalid_argument);

  detail::Rng rng(4);
  for (int trial = 0; trial < 10000; ++trial) {
    const double a = rng.uniform(1e-3, 4.0);
    const double b = rng.uniform(1e-3, 4.0);
    const double y1 = rng.uniform(1e-3, 4.0);
    const double y2 = trial % 5 == 0 ? a * y1 / (a + b) : rng.uniform(1e-3, 4.0);
    const InequalitySides s = lemma_weighted_quadratic(a, b, y1, y2);
    CHECK(s.lhs >= s.rhs - 1e-12);
    if (trial % 5 == 0) CHECK(s.lhs == Approx(s.rhs).margin(1e-12));
  }
}

TEST_CASE("perron gap diagnostic") {
  const Hypergraph h(3, 4, {{1, 2, 3}, {1, 2, 4}});
  const SpectralEnclosure enc = rho_enclose(h, 1e-10);
  CHECK(perron_gap_check(h, enc, 1e-10));

  const Hypergraph p3(2, 3, {{1, 2}, {2, 3}});
  CHECK(perron_gap_check(p3, rho_enclose(p3, 1e-10), 1e-10));

  const Hypergraph regular(3, 3, {{1, 2, 3}});
  CHECK_THROWS_AS(perron_gap_check(regular, rho_enclose(regular, 1e-10), 1e-10),
                  std::invalid_argument);
}

TEST_CASE("path square-sum diagnostic") {
  // constant vector on a single edge: both sides vanish
  const Hypergraph single(3, 3, {{1, 2, 3}});
  HyperPath p1{{1, 2}, {0}};
  const PathSquareSums s1 = path_square_sums(single, {0.5, 0.5, 0.5}, p1);
  CHECK(s1.lhs == 0.0);
  CHECK(s1.rhs_by_length == 0.0);
  CHECK(path_square_check(single, {0.5, 0.5, 0.5}, p1));

  // explicit two-edge chain, k = 3
  const Hypergraph chain(3, 5, {{1, 2, 3}, {3, 4, 5}});
  const VertexVector x = {2, 1, 1, 1, 1};
  HyperPath p2{{1, 3, 5}, {0, 1}};
  CHECK(path_square_check(chain, x, p2));
  const PathSquareSums s2 = path_square_sums(chain, x, p2);
  const double gap = std::pow(2.0, 1.5) - 1.0;
  CHECK(s2.rhs_by_length == Approx(3.0 / 4.0 * gap * gap));
  CHECK(s2.lhs == Approx(2 * gap * gap));  // vertex 1 against 2 and 3; other pairs equal

  // 4-uniform single-edge path: 27 >= 13.5 (and >= k/(2r) variant 18)
  const Hypergraph quad(4, 4, {{1, 2, 3, 4}});
  HyperPath p3{{1, 4}, {0}};
  const PathSquareSums s3 = path_square_sums(quad, {2, 1, 1, 1}, p3);
  CHECK(s3.lhs == Approx(27.0));
  CHECK(s3.rhs_by_length == Approx(18.0));
  REQUIRE(s3.has_uniform);
  CHECK(s3.rhs_uniform == Approx(13.5));
  CHECK(path_square_check(quad, {2, 1, 1, 1}, p3));

  // invalid path and misplaced endpoints are rejected
  CHECK_THROWS_AS(path_square_sums(chain, x, HyperPath{{1, 4}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(path_square_sums(chain, x, HyperPath{{3, 5}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(path_square_sums(chain, {0.0, 1, 1, 1, 1}, p2), std::invalid_argument);
}
