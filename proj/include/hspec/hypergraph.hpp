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
#include <cstdint>
#include <functional>
#include <istream>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hspec/detail/rng.hpp"

namespace hspec {

/// A k-uniform hypergraph edge: strictly increasing sequence of k vertex ids.
using Edge = std::vector<int>;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Immutable k-uniform hypergraph on vertices 1..n, canonical edge list
/// (each edge sorted ascending, edge list sorted lexicographically).
/// All queries are pure; instances are safe to share across threads.
class Hypergraph {
 public:
  Hypergraph(int k, int n, std::vector<Edge> edges) : k_(k), n_(n), edges_(std::move(edges)) {
    if (k_ < 2) throw std::invalid_argument("Hypergraph: uniformity k must be >= 2");
    if (n_ < 1) throw std::invalid_argument("Hypergraph: vertex count must be >= 1");
    for (Edge& e : edges_) {
      if (static_cast<int>(e.size()) != k_)
        throw std::invalid_argument("Hypergraph: edge of wrong arity");
      std::sort(e.begin(), e.end());
      for (std::size_t i = 0; i + 1 < e.size(); ++i)
        if (e[i] == e[i + 1]) throw std::invalid_argument("Hypergraph: repeated vertex in edge");
      if (e.front() < 1 || e.back() > n_)
        throw std::invalid_argument("Hypergraph: vertex id out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i + 1 < edges_.size(); ++i)
      if (edges_[i] == edges_[i + 1]) throw std::invalid_argument("Hypergraph: duplicate edge");
    incidence_.assign(n_ + 1, {});
    for (std::size_t j = 0; j < edges_.size(); ++j)
      for (int v : edges_[j]) incidence_[v].push_back(static_cast<int>(j));
  }

  int k() const { return k_; }
  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int j) const { return edges_[j]; }

  /// Edge indices containing vertex v (1-based).
  const std::vector<int>& incident(int v) const { return incidence_[v]; }

  bool has_edge(const Edge& e) const {
    Edge s = e;
    std::sort(s.begin(), s.end());
    return std::binary_search(edges_.begin(), edges_.end(), s);
  }

  bool operator==(const Hypergraph& o) const {
    return k_ == o.k_ && n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  int k_, n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

struct DegreeProfile {
  std::vector<int> degrees;  // degrees[v-1] for vertex v
  int delta_max = 0;
  int delta_min = 0;
  long long handshake = 0;  // sum of degrees, equals k*m
};

inline DegreeProfile degree_profile(const Hypergraph& H) {
  DegreeProfile p;
  p.degrees.assign(H.n(), 0);
  for (const Edge& e : H.edges())
    for (int v : e) ++p.degrees[v - 1];
  p.delta_max = *std::max_element(p.degrees.begin(), p.degrees.end());
  p.delta_min = *std::min_element(p.degrees.begin(), p.degrees.end());
  p.handshake = std::accumulate(p.degrees.begin(), p.degrees.end(), 0LL);
  return p;
}

inline bool is_regular(const Hypergraph& H) {
  const DegreeProfile p = degree_profile(H);
  return p.delta_min == p.delta_max;
}

/// Alternating vertex/edge sequence u_0, e_1, u_1, ..., e_r, u_r with
/// pairwise-distinct vertices and pairwise-distinct edges. Edges are stored
/// as indices into the owning hypergraph's edge list.
struct HyperPath {
  std::vector<int> vertices;
  std::vector<int> edges;
  int length() const { return static_cast<int>(edges.size()); }
};

inline bool is_valid_path(const Hypergraph& H, const HyperPath& p) {
  if (p.vertices.size() != p.edges.size() + 1) return false;
  std::set<int> vs(p.vertices.begin(), p.vertices.end());
  if (vs.size() != p.vertices.size()) return false;
  std::set<int> es(p.edges.begin(), p.edges.end());
  if (es.size() != p.edges.size()) return false;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (p.edges[i] < 0 || p.edges[i] >= H.m()) return false;
    const Edge& e = H.edge(p.edges[i]);
    if (!std::binary_search(e.begin(), e.end(), p.vertices[i])) return false;
    if (!std::binary_search(e.begin(), e.end(), p.vertices[i + 1])) return false;
  }
  return true;
}

// --- .khg text format ------------------------------------------------------
//
// Optional '#' comment lines, a header "k n m", then m lines of k vertex ids.

inline Hypergraph parse_khg(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_content_line = [&]() -> std::optional<std::string> {
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      if (line[first] == '#') continue;
      return line;
    }
    return std::nullopt;
  };

  auto header = next_content_line();
  if (!header) throw ParseError(lineno == 0 ? 1 : lineno, "missing header line");
  int k = 0, n = 0, m = 0;
  {
    std::istringstream hs(*header);
    std::string extra;
    if (!(hs >> k >> n >> m) || (hs >> extra))
      throw ParseError(lineno, "malformed header, expected 'k n m'");
    if (k < 2) throw ParseError(lineno, "uniformity k must be >= 2");
    if (n < 1) throw ParseError(lineno, "vertex count must be >= 1");
    if (m < 0) throw ParseError(lineno, "edge count must be >= 0");
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<Edge> seen;
  for (int j = 0; j < m; ++j) {
    auto content = next_content_line();
    if (!content) throw ParseError(lineno, "unexpected end of input, expected " +
                                               std::to_string(m - j) + " more edge line(s)");
    std::istringstream es(*content);
    Edge e;
    int v;
    while (es >> v) e.push_back(v);
    if (!es.eof()) throw ParseError(lineno, "malformed edge line");
    if (static_cast<int>(e.size()) != k) throw ParseError(lineno, "edge of wrong arity");
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
      if (e[i] == e[i + 1]) throw ParseError(lineno, "repeated vertex in edge");
    if (e.front() < 1 || e.back() > n) throw ParseError(lineno, "vertex id out of range");
    if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge");
    edges.push_back(std::move(e));
  }
  if (next_content_line()) throw ParseError(lineno, "trailing content after last edge");
  return Hypergraph(k, n, std::move(edges));
}

inline Hypergraph parse_khg(const std::string& text) {
  std::istringstream in(text);
  return parse_khg(in);
}

/// Canonical serialization; parse_khg(to_khg(H)) == H.
inline std::string to_khg(const Hypergraph& H) {
  std::ostringstream os;
  os << H.k() << " " << H.n() << " " << H.m() << "\n";
  for (const Edge& e : H.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
    os << "\n";
  }
  return os.str();
}

// --- connectivity and distances -------------------------------------------

namespace detail {

// BFS distances from u; -1 = unreachable. Optionally records the BFS tree
// (parent vertex and the edge used) for path reconstruction.
inline std::vector<int> bfs_distances(const Hypergraph& H, int u,
                                      std::vector<int>* parent_vertex = nullptr,
                                      std::vector<int>* parent_edge = nullptr) {
  std::vector<int> dist(H.n() + 1, -1);
  std::vector<char> edge_seen(H.m(), 0);
  if (parent_vertex) parent_vertex->assign(H.n() + 1, 0);
  if (parent_edge) parent_edge->assign(H.n() + 1, -1);
  std::queue<int> q;
  dist[u] = 0;
  q.push(u);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int j : H.incident(v)) {
      if (edge_seen[j]) continue;
      edge_seen[j] = 1;
      for (int w : H.edge(j)) {
        if (dist[w] >= 0) continue;
        dist[w] = dist[v] + 1;
        if (parent_vertex) (*parent_vertex)[w] = v;
        if (parent_edge) (*parent_edge)[w] = j;
        q.push(w);
      }
    }
  }
  return dist;
}

inline void check_vertex(const Hypergraph& H, int v, const char* what) {
  if (v < 1 || v > H.n()) throw std::invalid_argument(std::string(what) + ": vertex id out of range");
}

}  // namespace detail

inline std::vector<std::vector<int>> components(const Hypergraph& H) {
  std::vector<std::vector<int>> comps;
  std::vector<char> assigned(H.n() + 1, 0);
  for (int u = 1; u <= H.n(); ++u) {
    if (assigned[u]) continue;
    const std::vector<int> dist = detail::bfs_distances(H, u);
    std::vector<int> comp;
    for (int v = 1; v <= H.n(); ++v)
      if (dist[v] >= 0) {
        comp.push_back(v);
        assigned[v] = 1;
      }
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Hypergraph& H) {
  const std::vector<int> dist = detail::bfs_distances(H, 1);
  for (int v = 1; v <= H.n(); ++v)
    if (dist[v] < 0) return false;
  return true;
}

/// Shortest-path distance in edges traversed; distance(u, u) == 0.
inline int distance(const Hypergraph& H, int u, int v) {
  detail::check_vertex(H, u, "distance");
  detail::check_vertex(H, v, "distance");
  const std::vector<int> dist = detail::bfs_distances(H, u);
  if (dist[v] < 0) throw std::invalid_argument("distance: vertices are in different components");
  return dist[v];
}

inline int diameter(const Hypergraph& H) {
  int d = 0;
  for (int u = 1; u <= H.n(); ++u) {
    const std::vector<int> dist = detail::bfs_distances(H, u);
    for (int v = 1; v <= H.n(); ++v) {
      if (dist[v] < 0) throw std::invalid_argument("diameter: hypergraph is disconnected");
      d = std::max(d, dist[v]);
    }
  }
  return d;
}

/// One shortest u-v hyperpath (BFS tree reconstruction).
inline HyperPath shortest_path(const Hypergraph& H, int u, int v) {
  detail::check_vertex(H, u, "shortest_path");
  detail::check_vertex(H, v, "shortest_path");
  std::vector<int> pv, pe;
  const std::vector<int> dist = detail::bfs_distances(H, u, &pv, &pe);
  if (dist[v] < 0) throw std::invalid_argument("shortest_path: vertices are in different components");
  HyperPath p;
  for (int w = v; w != u; w = pv[w]) {
    p.vertices.push_back(w);
    p.edges.push_back(pe[w]);
  }
  p.vertices.push_back(u);
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

inline Hypergraph delete_edge(const Hypergraph& H, const Edge& e) {
  Edge s = e;
  std::sort(s.begin(), s.end());
  std::vector<Edge> edges;
  edges.reserve(H.m());
  bool found = false;
  for (const Edge& f : H.edges()) {
    if (!found && f == s) {
      found = true;
      continue;
    }
    edges.push_back(f);
  }
  if (!found) throw std::invalid_argument("delete_edge: edge not present");
  return Hypergraph(H.k(), H.n(), std::move(edges));
}

// --- generation and enumeration -------------------------------------------

/// C(n, k), saturating at 2^63-1.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  const std::uint64_t cap = static_cast<std::uint64_t>(INT64_MAX);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    if (r > cap / static_cast<std::uint64_t>(n - k + i)) return cap;
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

/// All k-subsets of {1..n} in lexicographic order.
inline std::vector<Edge> all_k_subsets(int n, int k) {
  std::vector<Edge> out;
  Edge cur(k);
  std::iota(cur.begin(), cur.end(), 1);
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace detail {

inline Hypergraph gen_random_impl(int n, int k, int m, Rng& rng) {
  const std::uint64_t total = binomial(n, k);
  std::vector<Edge> edges;
  if (total <= 200000) {
    // Partial Fisher-Yates over the materialized subset list.
    std::vector<Edge> pool = all_k_subsets(n, k);
    for (int i = 0; i < m; ++i) {
      const std::uint64_t j = static_cast<std::uint64_t>(i) + rng.below(total - i);
      std::swap(pool[i], pool[j]);
      edges.push_back(pool[i]);
    }
  } else {
    std::set<Edge> chosen;
    while (static_cast<int>(chosen.size()) < m) {
      std::set<int> verts;
      while (static_cast<int>(verts.size()) < k) verts.insert(rng.uniform_int(1, n));
      chosen.insert(Edge(verts.begin(), verts.end()));
    }
    edges.assign(chosen.begin(), chosen.end());
  }
  return Hypergraph(k, n, std::move(edges));
}

}  // namespace detail

/// m distinct k-subsets drawn uniformly without replacement, deterministic in seed.
inline Hypergraph gen_random(int n, int k, int m, std::uint64_t seed) {
  if (k < 2 || k > n) throw std::invalid_argument("gen_random: need 2 <= k <= n");
  if (m < 0 || static_cast<std::uint64_t>(m) > binomial(n, k))
    throw std::invalid_argument("gen_random: edge count exceeds C(n, k)");
  detail::Rng rng(detail::mix_seed(seed, static_cast<std::uint64_t>(n),
                                   static_cast<std::uint64_t>(k) << 32 | static_cast<std::uint64_t>(m)));
  return detail::gen_random_impl(n, k, m, rng);
}

/// Every connected k-uniform hypergraph on n labeled vertices, in edge-mask
/// order. Labeled enumeration, no isomorphism reduction; intended for small n.
inline void enumerate_connected(int n, int k, const std::function<void(const Hypergraph&)>& fn) {
  if (k < 2 || k > n) throw std::invalid_argument("enumerate_connected: need 2 <= k <= n");
  const std::vector<Edge> pool = all_k_subsets(n, k);
  const int p = static_cast<int>(pool.size());
  if (p > 30) throw std::invalid_argument("enumerate_connected: edge space too large");

  std::vector<int> parent(n + 1);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::uint64_t mask = 1; mask < (1ULL << p); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int parts = n;
    std::vector<Edge> edges;
    for (int j = 0; j < p; ++j) {
      if (!(mask >> j & 1)) continue;
      edges.push_back(pool[j]);
      const int r0 = find(pool[j][0]);
      for (std::size_t i = 1; i < pool[j].size(); ++i) {
        const int ri = find(pool[j][i]);
        if (ri != r0) {
          parent[ri] = r0;
          --parts;
        }
      }
    }
    if (parts != 1) continue;
    fn(Hypergraph(k, n, std::move(edges)));
  }
}

inline std::vector<Hypergraph> enumerate_connected(int n, int k) {
  std::vector<Hypergraph> out;
  enumerate_connected(n, k, [&](const Hypergraph& H) { out.push_back(H); });
  return out;
}

}  // namespace hspec
