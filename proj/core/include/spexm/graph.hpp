// Copyright 2026 The spexm Authors
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

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace spexm {

using VertexMask = std::uint64_t;

inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }
inline constexpr VertexMask low_mask(int n) { return n >= 64 ? ~VertexMask{0} : bit(n) - 1; }
inline int popcount(VertexMask s) { return std::popcount(s); }

/// Calls f(v) for every set bit v of s, in increasing order.
template <typename F>
inline void for_each_bit(VertexMask s, F&& f) {
  while (s) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

std::vector<int> mask_to_vertices(VertexMask s);
VertexMask vertices_to_mask(std::span<const int> vs, int n);

struct Edge {
  int u;
  int v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1, n <= 64, one adjacency word per
/// vertex. Immutable: the mutators return new graphs.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from adjacency rows; rejects asymmetric rows or loops.
  static Graph from_rows(int n, std::span<const VertexMask> rows);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  VertexMask adj(int v) const noexcept { return rows_[v]; }
  bool has_edge(int u, int v) const noexcept { return (rows_[u] >> v) & 1U; }
  int degree(int v) const noexcept { return popcount(rows_[v]); }
  VertexMask vertex_mask() const noexcept { return low_mask(n_); }

  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;
  int max_degree() const;
  int min_degree() const;
  bool has_isolated() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  /// Appends k isolated vertices.
  Graph with_vertices(int k) const;
  Graph without_vertex(int v) const;
  /// G[S], relabeled to 0..|S|-1 preserving the vertex order.
  Graph induced(VertexMask s) const;
  Graph drop_isolated() const;
  /// Vertex v of the result is vertex order[v] of this graph.
  Graph relabeled(std::span<const int> order) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::array<VertexMask, kMaxVertices> rows_{};
};

std::string to_string(const Graph& g);

// ---- statistics -----------------------------------------------------------

/// Number of edges with one end in S and the other in T. With S == T each
/// edge inside S counts once.
long edges_between(const Graph& g, VertexMask s, VertexMask t);
/// e(S) = edges_between(S, S).
long edges_within(const Graph& g, VertexMask s);
VertexMask common_neighbors(const Graph& g, int u, int v);
/// Vertices at distance exactly two from v.
VertexMask second_neighborhood(const Graph& g, int v);
/// Connected components ordered by their smallest vertex.
std::vector<VertexMask> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
/// Articulation points via DFS low-link.
VertexMask cut_vertices(const Graph& g);

struct GraphStats {
  std::vector<int> degrees;
  std::vector<VertexMask> components;
  VertexMask cut_vertices = 0;
  bool connected = false;
  bool bipartite = false;
  bool has_isolated = false;
};

GraphStats stats(const Graph& g);

}  // namespace spexm
