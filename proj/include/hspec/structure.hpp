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
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hspec/hypergraph.hpp"

namespace hspec {

namespace detail {

// Unit-capacity flow network for edge-disjoint hyperpaths: one node per
// vertex (uncapacitated) and a capacity-1 in/out node pair per hyperedge.
// Edge-disjointness, not vertex-disjointness, is the relevant notion, so
// vertex nodes are not split.
class UnitFlowNetwork {
 public:
  explicit UnitFlowNetwork(const Hypergraph& H) : H_(&H) {
    const int n = H.n(), m = H.m();
    node_count_ = n + 2 * m;
    head_.assign(node_count_, {});
    for (int j = 0; j < m; ++j) {
      add_arc(edge_in(j), edge_out(j), 1);
      for (int v : H.edge(j)) {
        add_arc(v - 1, edge_in(j), 1);
        add_arc(edge_out(j), v - 1, 1);
      }
    }
  }

  // Max flow from vertex u to vertex v (1-based), BFS augmenting paths.
  int max_flow(int u, int v) {
    for (Arc& a : arcs_) a.flow = 0;
    const int s = u - 1, t = v - 1;
    int value = 0;
    for (;;) {
      std::vector<int> via(node_count_, -1);
      std::vector<char> seen(node_count_, 0);
      std::queue<int> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty() && !seen[t]) {
        const int x = q.front();
        q.pop();
        for (int a : head_[x]) {
          const Arc& arc = arcs_[a];
          if (seen[arc.to] || arc.cap - arc.flow <= 0) continue;
          seen[arc.to] = 1;
          via[arc.to] = a;
          q.push(arc.to);
        }
      }
      if (!seen[t]) break;
      for (int x = t; x != s; x = arcs_[via[x] ^ 1].to) {
        arcs_[via[x]].flow += 1;
        arcs_[via[x] ^ 1].flow -= 1;
      }
      ++value;
    }
    return value;
  }

  // Decompose the current flow into pairwise edge-disjoint hyperpaths by
  // repeatedly extracting a shortest path in the flow-carrying subgraph
  // (BFS keeps each extraction a simple path, so no cycle chasing).
  std::vector<HyperPath> decompose(int u, int v, int value) {
    const int s = u - 1, t = v - 1;
    std::vector<HyperPath> paths;
    for (int unit = 0; unit < value; ++unit) {
      std::vector<int> via(node_count_, -1);
      std::vector<char> seen(node_count_, 0);
      std::queue<int> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty() && !seen[t]) {
        const int x = q.front();
        q.pop();
        for (int a : head_[x]) {
          const Arc& arc = arcs_[a];
          if (seen[arc.to] || arc.flow <= 0) continue;
          seen[arc.to] = 1;
          via[arc.to] = a;
          q.push(arc.to);
        }
      }
      if (!seen[t]) break;
      std::vector<int> nodes;
      for (int x = t; x != s; x = arcs_[via[x] ^ 1].to) {
        arcs_[via[x]].flow -= 1;
        nodes.push_back(x);
      }
      nodes.push_back(s);
      std::reverse(nodes.begin(), nodes.end());
      HyperPath p;
      for (int x : nodes) {
        if (x < H_->n()) {
          p.vertices.push_back(x + 1);
        } else if ((x - H_->n()) % 2 == 0) {
          p.edges.push_back((x - H_->n()) / 2);
        }
      }
      paths.push_back(std::move(p));
    }
    return paths;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int flow;
  };

  int edge_in(int j) const { return H_->n() + 2 * j; }
  int edge_out(int j) const { return H_->n() + 2 * j + 1; }

  void add_arc(int from, int to, int cap) {
    head_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap, 0});
    head_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0, 0});
  }

  const Hypergraph* H_;
  int node_count_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> head_;
};

}  // namespace detail

/// Maximum number of pairwise edge-disjoint u-v hyperpaths, with witnesses.
inline std::pair<int, std::vector<HyperPath>> edge_disjoint_path_count(const Hypergraph& H, int u,
                                                                       int v) {
  detail::check_vertex(H, u, "edge_disjoint_path_count");
  detail::check_vertex(H, v, "edge_disjoint_path_count");
  if (u == v) throw std::invalid_argument("edge_disjoint_path_count: endpoints must differ");
  if (!is_connected(H))
    throw std::invalid_argument("edge_disjoint_path_count: hypergraph is disconnected");
  detail::UnitFlowNetwork net(H);
  const int value = net.max_flow(u, v);
  return {value, net.decompose(u, v, value)};
}

struct ConnectivityResult {
  int f = 0;                       // global edge-connectivity
  std::pair<int, int> min_pair{};  // vertex pair attaining the minimum
  std::vector<HyperPath> witness;  // f pairwise edge-disjoint paths between min_pair
};

/// Global edge-connectivity: min over v of the u-v disjoint path count with
/// u fixed, which is valid because a minimum edge cut separates vertex 1
/// from some vertex on the other side.
inline ConnectivityResult edge_connectivity(const Hypergraph& H) {
  if (H.n() < 2) throw std::invalid_argument("edge_connectivity: need at least two vertices");
  if (!is_connected(H)) throw std::invalid_argument("edge_connectivity: hypergraph is disconnected");
  ConnectivityResult best;
  best.f = -1;
  for (int v = 2; v <= H.n(); ++v) {
    auto [count, paths] = edge_disjoint_path_count(H, 1, v);
    if (best.f < 0 || count < best.f) {
      best.f = count;
      best.min_pair = {1, v};
      best.witness = std::move(paths);
    }
  }
  return best;
}

/// A proper vertex subset meeting every edge in an odd number of vertices,
/// or absent when no such subset exists.
struct OddBipartition {
  std::optional<std::vector<int>> v1;  // sorted vertex ids
  explicit operator bool() const { return v1.has_value(); }
};

/// GF(2) solve of the parity system (one equation per edge) with 64-bit
/// packed rows, pivoting in vertex-id order; free variables default to 0.
/// The zero vector never satisfies the system once m >= 1, so any solution
/// is nonempty; an all-of-V solution (possible only for odd k) is swapped
/// for another affine representative via a free variable, and the instance
/// is infeasible if the all-of-V solution is unique.
inline OddBipartition odd_bipartition(const Hypergraph& H) {
  if (H.m() == 0) throw std::invalid_argument("odd_bipartition: hypergraph has no edges");
  const int n = H.n(), m = H.m();
  const int words = (n + 1 + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(m, std::vector<std::uint64_t>(words, 0));
  auto get = [&](const std::vector<std::uint64_t>& row, int bit) {
    return (row[bit / 64] >> (bit % 64)) & 1ULL;
  };
  auto set = [&](std::vector<std::uint64_t>& row, int bit) { row[bit / 64] |= 1ULL << (bit % 64); };
  for (int j = 0; j < m; ++j) {
    for (int v : H.edge(j)) set(rows[j], v - 1);
    set(rows[j], n);  // rhs bit
  }

  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int pr = -1;
    for (int r = rank; r < m; ++r)
      if (get(rows[r], col)) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(rows[rank], rows[pr]);
    for (int r = 0; r < m; ++r) {
      if (r == rank || !get(rows[r], col)) continue;
      for (int w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (int r = rank; r < m; ++r)
    if (get(rows[r], n)) return {};  // 0 = 1 row: infeasible

  std::vector<char> in_v1(n, 0);
  for (int r = 0; r < rank; ++r) in_v1[pivot_col[r]] = static_cast<char>(get(rows[r], n));

  int support = 0;
  for (int c = 0; c < n; ++c) support += in_v1[c];
  if (support == n) {
    // Flip one free variable to leave the all-of-V solution.
    std::vector<char> is_pivot(n, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    int free_col = -1;
    for (int c = 0; c < n; ++c)
      if (!is_pivot[c]) {
        free_col = c;
        break;
      }
    if (free_col < 0) return {};  // unique solution is V itself
    in_v1[free_col] ^= 1;
    for (int r = 0; r < rank; ++r) in_v1[pivot_col[r]] ^= static_cast<char>(get(rows[r], free_col));
  }

  std::vector<int> v1;
  for (int c = 0; c < n; ++c)
    if (in_v1[c]) v1.push_back(c + 1);
  return {v1};
}

/// Exhaustive scan over all proper nonempty subsets; oracle for the solver.
inline OddBipartition odd_bipartition_brute(const Hypergraph& H) {
  if (H.m() == 0) throw std::invalid_argument("odd_bipartition_brute: hypergraph has no edges");
  if (H.n() > 20) throw std::invalid_argument("odd_bipartition_brute: too many vertices");
  const int n = H.n();
  for (std::uint32_t mask = 1; mask + 1 < (1U << n); ++mask) {
    bool ok = true;
    for (const Edge& e : H.edges()) {
      int parity = 0;
      for (int v : e) parity ^= static_cast<int>(mask >> (v - 1) & 1);
      if (!parity) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<int> v1;
    for (int v = 1; v <= n; ++v)
      if (mask >> (v - 1) & 1) v1.push_back(v);
    return {v1};
  }
  return {};
}

}  // namespace hspec
