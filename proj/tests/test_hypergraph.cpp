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

#include <catch2/catch_amalgamated.hpp>

#include "hspec/hypergraph.hpp"

using namespace hspec;

TEST_CASE("parse_khg accepts canonical instances") {
  const Hypergraph one = parse_khg("3 3 1\n1 2 3\n");
  CHECK(one.k() == 3);
  CHECK(one.n() == 3);
  CHECK(one.m() == 1);
  CHECK(one.edges() == std::vector<Edge>{{1, 2, 3}});

  const Hypergraph two = parse_khg("3 4 2\n1 2 3\n1 2 4\n");
  CHECK(two.n() == 4);
  CHECK(two.m() == 2);
}

TEST_CASE("parse_khg normalizes edge order and skips comments") {
  const Hypergraph h = parse_khg("# comment\n3 4 2\n\n4 2 1\n# another\n3 2 1\n");
  CHECK(h.edges() == std::vector<Edge>{{1, 2, 3}, {1, 2, 4}});
}

TEST_CASE("parse_khg reports errors with line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_khg(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("3 3 1\n1 2 2\n") == 2);        // repeated vertex in edge
  CHECK(line_of("3 3 1\n1 2\n") == 2);          // wrong arity
  CHECK(line_of("3 3 1\n1 2 4\n") == 2);        // vertex out of range
  CHECK(line_of("3 4 2\n1 2 3\n3 2 1\n") == 3); // duplicate edge
  CHECK(line_of("x y z\n") == 1);               // malformed header
  CHECK(line_of("3 3 2\n1 2 3\n") == 2);        // missing edge line
  CHECK_THROWS_AS(parse_khg("3 3 0\n1 2 3\n"), ParseError);  // trailing content
}

TEST_CASE("serialize then parse is the identity on canonical form") {
  const Hypergraph h = parse_khg("3 5 3\n3 2 1\n1 4 5\n2 4 5\n");
  const std::string text = to_khg(h);
  CHECK(parse_khg(text) == h);
  CHECK(to_khg(parse_khg(text)) == text);
}

TEST_CASE("degree_profile counts edge membership") {
  const Hypergraph h(3, 4, {{1, 2, 3}, {1, 2, 4}});
  const DegreeProfile p = degree_profile(h);
  CHECK(p.degrees == std::vector<int>{2, 2, 1, 1});
  CHECK(p.delta_max == 2);
  CHECK(p.delta_min == 1);
  CHECK(p.handshake == 3LL * 2);

  const Hypergraph single(4, 4, {{1, 2, 3, 4}});
  const DegreeProfile ps = degree_profile(single);
  CHECK(ps.degrees == std::vector<int>{1, 1, 1, 1});
  CHECK(ps.delta_max == 1);

  const Hypergraph empty(3, 3, {});
  const DegreeProfile pe = degree_profile(empty);
  CHECK(pe.degrees == std::vector<int>{0, 0, 0});
  CHECK(pe.delta_max == 0);
}

TEST_CASE("is_regular") {
  CHECK(is_regular(Hypergraph(3, 3, {{1, 2, 3}})));
  CHECK_FALSE(is_regular(Hypergraph(3, 4, {{1, 2, 3}, {1, 2, 4}})));
  const Hypergraph complete(3, 4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  CHECK(is_regular(complete));
  CHECK(degree_profile(complete).delta_max == 3);
}

TEST_CASE("connectivity and components") {
  CHECK(is_connected(Hypergraph(3, 5, {{1, 2, 3}, {3, 4, 5}})));
  const Hypergraph split(3, 6, {{1, 2, 3}, {4, 5, 6}});
  CHECK_FALSE(is_connected(split));
  CHECK(components(split).size() == 2);
  CHECK(is_connected(Hypergraph(2, 1, {})));

  // components partition 1..n; isolated vertices are singletons
  const Hypergraph iso(3, 5, {{1, 2, 3}});
  const auto comps = components(iso);
  REQUIRE(comps.size() == 3);
  std::vector<int> all;
  for (const auto& c : comps) all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end());
  CHECK(all == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("distance and diameter") {
  const Hypergraph chain(3, 5, {{1, 2, 3}, {3, 4, 5}});
  CHECK(distance(chain, 1, 5) == 2);
  CHECK(distance(chain, 1, 1) == 0);
  CHECK(diameter(chain) == 2);
  CHECK(diameter(Hypergraph(3, 3, {{1, 2, 3}})) == 1);
  const Hypergraph p4(2, 4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(diameter(p4) == 3);
  CHECK_THROWS_AS(diameter(Hypergraph(3, 6, {{1, 2, 3}, {4, 5, 6}})), std::invalid_argument);
  CHECK_THROWS_AS(distance(Hypergraph(3, 6, {{1, 2, 3}, {4, 5, 6}}), 1, 4), std::invalid_argument);
}

TEST_CASE("distance is a metric on connected instances") {
  for (const Hypergraph& h : enumerate_connected(5, 3)) {
    for (int u = 1; u <= 5; ++u) {
      CHECK(distance(h, u, u) == 0);
      for (int v = u + 1; v <= 5; ++v) {
        const int duv = distance(h, u, v);
        CHECK(duv == distance(h, v, u));
        CHECK(duv >= 1);
        for (int w = 1; w <= 5; ++w)
          CHECK(duv <= distance(h, u, w) + distance(h, w, v));
      }
    }
    break;  // one instance suffices for the inner quadratic sweep...
  }
  // ...and a sparse chain exercises longer distances
  const Hypergraph chain(2, 6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  for (int u = 1; u <= 6; ++u)
    for (int v = 1; v <= 6; ++v) CHECK(distance(chain, u, v) == std::abs(u - v));
}

TEST_CASE("shortest_path returns a valid hyperpath of the right length") {
  const Hypergraph chain(3, 7, {{1, 2, 3}, {3, 4, 5}, {5, 6, 7}});
  const HyperPath p = shortest_path(chain, 1, 7);
  CHECK(p.length() == 3);
  CHECK(p.vertices.front() == 1);
  CHECK(p.vertices.back() == 7);
  CHECK(is_valid_path(chain, p));
}

TEST_CASE("delete_edge") {
  const Hypergraph complete(3, 4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  const Hypergraph h = delete_edge(complete, {1, 2, 3});
  CHECK(h.m() == 3);
  CHECK(degree_profile(h).degrees == std::vector<int>{2, 2, 2, 3});

  CHECK(delete_edge(Hypergraph(3, 3, {{1, 2, 3}}), {3, 2, 1}).m() == 0);
  CHECK(delete_edge(Hypergraph(3, 4, {{1, 2, 3}, {1, 2, 4}}), {1, 2, 4}).edges() ==
        std::vector<Edge>{{1, 2, 3}});
  CHECK_THROWS_AS(delete_edge(Hypergraph(3, 4, {{1, 2, 3}}), {1, 2, 4}), std::invalid_argument);
}

TEST_CASE("gen_random is deterministic and valid") {
  const Hypergraph a = gen_random(5, 3, 4, 7);
  const Hypergraph b = gen_random(5, 3, 4, 7);
  CHECK(a == b);
  CHECK(a.m() == 4);
  CHECK(degree_profile(a).handshake == 3LL * 4);

  CHECK_FALSE(gen_random(5, 3, 4, 8) == a);  // different seed, almost surely different draw
  CHECK(gen_random(5, 3, 10, 1).m() == 10);  // full edge set
  CHECK_THROWS_AS(gen_random(5, 3, 11, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_random(3, 4, 1, 1), std::invalid_argument);
}

TEST_CASE("handshake holds on random instances") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);
    const int k = 2 + static_cast<int>(seed % 3);
    const int m = static_cast<int>(std::min<std::uint64_t>(binomial(n, k), 1 + seed % 7));
    const Hypergraph h = gen_random(n, k, m, seed);
    CHECK(degree_profile(h).handshake == static_cast<long long>(k) * m);
  }
}

TEST_CASE("enumerate_connected counts small cells") {
  CHECK(enumerate_connected(3, 2).size() == 4);  // three labeled paths and the triangle
  CHECK(enumerate_connected(3, 3).size() == 1);
  CHECK(enumerate_connected(4, 4).size() == 1);
  for (const Hypergraph& h : enumerate_connected(4, 3)) CHECK(is_connected(h));
  CHECK(enumerate_connected(4, 3).size() == 11);
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 3) == 4);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == 118264581564861424ULL);
  CHECK(binomial(70, 35) == INT64_MAX);  // saturates
}

TEST_CASE("constructor rejects invalid edge lists") {
  CHECK_THROWS_AS(Hypergraph(3, 4, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, 4, {{1, 2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, 4, {{1, 2, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, 4, {{1, 2, 3}, {3, 2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(1, 4, {}), std::invalid_argument);
}
