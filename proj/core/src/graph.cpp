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

#include "spexm/graph.hpp"

#include <algorithm>
#include <sstream>

#include "spexm/errors.hpp"

namespace spexm {

std::vector<int> mask_to_vertices(VertexMask s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  for_each_bit(s, [&](int v) { out.push_back(v); });
  return out;
}

VertexMask vertices_to_mask(std::span<const int> vs, int n) {
  VertexMask s = 0;
  for (int v : vs) {
    if (v < 0 || v >= n) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
    s |= bit(v);
  }
  return s;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw SizeLimitError("graph order " + std::to_string(n) + " outside 0.." +
                         std::to_string(kMaxVertices));
  }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) throw ArgumentError("loop at vertex " + std::to_string(e.u));
    if (has_edge(e.u, e.v)) {
      throw ArgumentError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    rows_[e.u] |= bit(e.v);
    rows_[e.v] |= bit(e.u);
    ++m_;
  }
}

Graph Graph::from_rows(int n, std::span<const VertexMask> rows) {
  Graph g(n);
  if (static_cast<int>(rows.size()) < n) throw ArgumentError("too few adjacency rows");
  long bits = 0;
  for (int v = 0; v < n; ++v) {
    VertexMask r = rows[v];
    if (r & ~low_mask(n)) throw ArgumentError("adjacency row references missing vertex");
    if (r & bit(v)) throw ArgumentError("loop at vertex " + std::to_string(v));
    g.rows_[v] = r;
    bits += popcount(r);
  }
  for (int u = 0; u < n; ++u) {
    for_each_bit(g.rows_[u], [&](int v) {
      if (!g.has_edge(v, u)) throw ArgumentError("adjacency rows are not symmetric");
    });
  }
  g.m_ = static_cast<int>(bits / 2);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw ArgumentError("vertex " + std::to_string(v) + " out of range 0.." +
                        std::to_string(n_ - 1));
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for_each_bit(rows_[u] & ~low_mask(u + 1), [&](int v) { out.push_back({u, v}); });
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

bool Graph::has_isolated() const {
  for (int v = 0; v < n_; ++v) {
    if (rows_[v] == 0) return true;
  }
  return false;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ArgumentError("loop at vertex " + std::to_string(u));
  Graph g = *this;
  if (!has_edge(u, v)) {
    g.rows_[u] |= bit(v);
    g.rows_[v] |= bit(u);
    ++g.m_;
  }
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  Graph g = *this;
  if (has_edge(u, v)) {
    g.rows_[u] &= ~bit(v);
    g.rows_[v] &= ~bit(u);
    --g.m_;
  }
  return g;
}

Graph Graph::with_vertices(int k) const {
  if (n_ + k > kMaxVertices) throw SizeLimitError("graph order would exceed 64");
  Graph g = *this;
  g.n_ += k;
  return g;
}

Graph Graph::without_vertex(int v) const {
  check_vertex(v);
  return induced(vertex_mask() & ~bit(v));
}

Graph Graph::induced(VertexMask s) const {
  if (s & ~vertex_mask()) throw ArgumentError("vertex set references missing vertex");
  return relabeled(mask_to_vertices(s));
}

Graph Graph::drop_isolated() const {
  VertexMask keep = 0;
  for (int v = 0; v < n_; ++v) {
    if (rows_[v]) keep |= bit(v);
  }
  if (keep == vertex_mask()) return *this;
  return induced(keep);
}

Graph Graph::relabeled(std::span<const int> order) const {
  const int k = static_cast<int>(order.size());
  std::array<int, kMaxVertices> pos;
  pos.fill(-1);
  for (int i = 0; i < k; ++i) {
    check_vertex(order[i]);
    if (pos[order[i]] != -1) throw ArgumentError("relabeling repeats a vertex");
    pos[order[i]] = i;
  }
  Graph g(k);
  for (int i = 0; i < k; ++i) {
    VertexMask r = 0;
    for_each_bit(rows_[order[i]], [&](int w) {
      if (pos[w] >= 0) r |= bit(pos[w]);
    });
    g.rows_[i] = r;
    g.m_ += popcount(r);
  }
  g.m_ /= 2;
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_ || a.m_ != b.m_) return false;
  return std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "Graph(n=" << g.n() << ", m=" << g.m() << ", {";
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? "" : ", ") << e.u << '-' << e.v;
    first = false;
  }
  os << "})";
  return os.str();
}

namespace {

void check_mask(const Graph& g, VertexMask s) {
  if (s & ~g.vertex_mask()) throw ArgumentError("vertex set references missing vertex");
}

}  // namespace

long edges_between(const Graph& g, VertexMask s, VertexMask t) {
  check_mask(g, s);
  check_mask(g, t);
  long ordered = 0;
  for_each_bit(s, [&](int a) { ordered += popcount(g.adj(a) & t); });
  // pairs inside S∩T were seen from both ends
  long doubled = 0;
  const VertexMask both = s & t;
  for_each_bit(both, [&](int a) { doubled += popcount(g.adj(a) & both); });
  return ordered - doubled / 2;
}

long edges_within(const Graph& g, VertexMask s) { return edges_between(g, s, s); }

VertexMask common_neighbors(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.n() || v < 0 || v >= g.n()) throw ArgumentError("vertex out of range");
  return g.adj(u) & g.adj(v);
}

VertexMask second_neighborhood(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw ArgumentError("vertex out of range");
  VertexMask reach = 0;
  for_each_bit(g.adj(v), [&](int w) { reach |= g.adj(w); });
  return reach & ~(g.adj(v) | bit(v));
}

std::vector<VertexMask> components(const Graph& g) {
  std::vector<VertexMask> out;
  VertexMask left = g.vertex_mask();
  while (left) {
    VertexMask comp = left & (~left + 1);
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for_each_bit(frontier, [&](int v) { next |= g.adj(v); });
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || components(g).size() == 1; }

bool is_bipartite(const Graph& g) {
  std::array<int, Graph::kMaxVertices> side;
  side.fill(-1);
  for (int s = 0; s < g.n(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      bool clash = false;
      for_each_bit(g.adj(v), [&](int w) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          clash = true;
        }
      });
      if (clash) return false;
    }
  }
  return true;
}

VertexMask cut_vertices(const Graph& g) {
  const int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  VertexMask cuts = 0;
  int timer = 0;
  // iterative DFS; frame = (vertex, remaining neighbours)
  struct Frame {
    int v;
    VertexMask rest;
    int children;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack;
    disc[root] = low[root] = timer++;
    stack.push_back({root, g.adj(root), 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.rest) {
        int w = std::countr_zero(f.rest);
        f.rest &= f.rest - 1;
        if (disc[w] == -1) {
          parent[w] = f.v;
          ++f.children;
          disc[w] = low[w] = timer++;
          stack.push_back({w, g.adj(w), 0});
        } else if (w != parent[f.v]) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2) cuts |= bit(done.v);
      } else {
        int p = stack.back().v;
        low[p] = std::min(low[p], low[done.v]);
        if (parent[p] != -1 && low[done.v] >= disc[p]) cuts |= bit(p);
      }
    }
  }
  return cuts;
}

GraphStats stats(const Graph& g) {
  GraphStats s;
  s.degrees = g.degrees();
  s.components = components(g);
  s.cut_vertices = cut_vertices(g);
  s.connected = s.components.size() <= 1;
  s.bipartite = is_bipartite(g);
  s.has_isolated = g.has_isolated();
  return s;
}

}  // namespace spexm
