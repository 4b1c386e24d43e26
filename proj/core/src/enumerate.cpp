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

#include "spexm/enumerate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "spexm/errors.hpp"
#include "spexm/parallel.hpp"

namespace spexm {

namespace {

struct Node {
  Graph graph;
  CanonicalLabeling label;
};

using EdgeKey = std::tuple<int, int, int>;

EdgeKey edge_key(const Graph& g, int a, int b) {
  const int da = g.degree(a);
  const int db = g.degree(b);
  return {std::min(da, db), std::max(da, db), popcount(g.adj(a) & g.adj(b))};
}

int pair_index(int u, int v, int n) {
  if (u > v) std::swap(u, v);
  return u * n + v;
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

// Representative non-edges and vertices of the parent under its automorphisms.
struct Augmentations {
  std::vector<Edge> non_edges;
  std::vector<int> vertices;
};

Augmentations augmentations(const Node& p) {
  const Graph& g = p.graph;
  const int n = g.n();
  Augmentations out;
  const auto vorb = vertex_orbits(n, p.label.generators);
  for (int v = 0; v < n; ++v) {
    if (vorb[v] == v) out.vertices.push_back(v);
  }
  std::vector<int> parent(static_cast<std::size_t>(n) * n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& gen : p.label.generators) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const int a = find_root(parent, pair_index(u, v, n));
        const int b = find_root(parent, pair_index(gen[u], gen[v], n));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      const int idx = pair_index(u, v, n);
      if (find_root(parent, idx) == idx) out.non_edges.push_back({u, v});
    }
  }
  return out;
}

// Canonical-parent test: the added edge must be, up to the canonical
// labeling, the designated edge of the child, or removing the designated
// edge must give back the parent's class.
bool accept_child(const Graph& child, int a, int b, const CanonicalLabeling& child_label,
                  const CanonicalForm& parent_form) {
  const EdgeKey mine = edge_key(child, a, b);
  const auto edges = child.edges();
  int ties = 0;
  for (const auto& e : edges) {
    const EdgeKey k = edge_key(child, e.u, e.v);
    if (k > mine) return false;
    if (k == mine) ++ties;
  }
  if (ties == 1) return true;
  std::vector<int> pos(child.n());
  for (int i = 0; i < child.n(); ++i) pos[child_label.order[i]] = i;
  Edge designated{-1, -1};
  std::pair<int, int> best{-1, -1};
  for (const auto& e : edges) {
    if (edge_key(child, e.u, e.v) != mine) continue;
    const std::pair<int, int> rank{std::max(pos[e.u], pos[e.v]), std::min(pos[e.u], pos[e.v])};
    if (rank > best) {
      best = rank;
      designated = e;
    }
  }
  if ((designated.u == a && designated.v == b) || (designated.u == b && designated.v == a)) {
    return true;
  }
  const Graph reduced = child.without_edge(designated.u, designated.v).drop_isolated();
  return canonical_form(reduced) == parent_form;
}

class Expander {
 public:
  explicit Expander(const EnumConstraints& c) : c_(c), cap_(c.vertex_cap()) {}

  // Accepted children of p, sorted by canonical form.
  std::vector<Node> children(const Node& p) const {
    const Graph& g = p.graph;
    std::vector<std::pair<Graph, Edge>> candidates;
    const Augmentations aug = augmentations(p);
    for (const auto& e : aug.non_edges) candidates.push_back({g.with_edge(e.u, e.v), e});
    if (g.n() + 1 <= cap_) {
      for (int v : aug.vertices) {
        candidates.push_back({g.with_vertices(1).with_edge(v, g.n()), Edge{v, g.n()}});
      }
    }
    if (g.n() + 2 <= cap_) {
      candidates.push_back({g.with_vertices(2).with_edge(g.n(), g.n() + 1), Edge{g.n(), g.n() + 1}});
    }
    std::vector<Node> out;
    std::set<CanonicalForm> seen;
    for (auto& [child, e] : candidates) {
      if (!key_is_maximal(child, e)) continue;
      if (!free_of_all(child, c_.forbid)) continue;
      CanonicalLabeling label = canonical_labeling(child);
      if (seen.count(label.form)) continue;
      if (!accept_child(child, e.u, e.v, label, p.label.form)) continue;
      seen.insert(label.form);
      out.push_back({std::move(child), std::move(label)});
    }
    std::sort(out.begin(), out.end(),
              [](const Node& x, const Node& y) { return x.label.form < y.label.form; });
    return out;
  }

  void descend(const Node& node, std::vector<EnumeratedGraph>& out) const {
    if (node.graph.m() == c_.m) {
      emit(node, out);
      return;
    }
    for (const auto& child : children(node)) descend(child, out);
  }

  std::vector<Node> level(const Node& root, int depth) const {
    std::vector<Node> frontier{root};
    while (depth-- > 0) {
      std::vector<Node> next;
      for (const auto& n : frontier) {
        auto kids = children(n);
        std::move(kids.begin(), kids.end(), std::back_inserter(next));
      }
      frontier = std::move(next);
    }
    return frontier;
  }

 private:
  static bool key_is_maximal(const Graph& child, const Edge& e) {
    const EdgeKey mine = edge_key(child, e.u, e.v);
    bool ok = true;
    for_each_bit(child.vertex_mask(), [&](int u) {
      if (!ok) return;
      for_each_bit(child.adj(u) & ~low_mask(u + 1), [&](int v) {
        if (ok && edge_key(child, u, v) > mine) ok = false;
      });
    });
    return ok;
  }

  void emit(const Node& node, std::vector<EnumeratedGraph>& out) const {
    if (c_.connected_only && !is_connected(node.graph)) return;
    if (!c_.no_isolated && node.graph.n() < cap_) {
      Graph padded = node.graph.with_vertices(cap_ - node.graph.n());
      CanonicalForm form = canonical_form(padded);
      out.push_back({std::move(padded), std::move(form)});
      return;
    }
    out.push_back({node.graph.relabeled(node.label.order), node.label.form});
  }

  const EnumConstraints& c_;
  int cap_;
};

Node root_node() {
  Graph empty(0);
  return {empty, canonical_labeling(empty)};
}

void sort_by_form(std::vector<EnumeratedGraph>& v) {
  std::sort(v.begin(), v.end(),
            [](const EnumeratedGraph& a, const EnumeratedGraph& b) { return a.form < b.form; });
}

}  // namespace

void validate(const EnumConstraints& c) {
  if (c.m < 1) throw ArgumentError("enumeration needs m >= 1");
  const int cap = c.vertex_cap();
  if (cap < 2 || cap > std::min(2 * c.m, Graph::kMaxVertices)) {
    throw ArgumentError("max_vertices must lie in [2, min(2m, 64)], got " + std::to_string(cap));
  }
  for (const auto& p : c.forbid) validate(p);
}

std::vector<ShardUnit> shard(const EnumConstraints& c, int prefix_depth) {
  validate(c);
  if (prefix_depth < 0 || prefix_depth >= c.m) {
    throw ArgumentError("shard depth must lie in [0, m)");
  }
  Expander ex(c);
  std::vector<ShardUnit> units;
  for (auto& node : ex.level(root_node(), prefix_depth)) {
    units.push_back({std::move(node.graph), std::move(node.label.form), prefix_depth});
  }
  return units;
}

std::vector<EnumeratedGraph> run_shard(const EnumConstraints& c, const ShardUnit& unit) {
  validate(c);
  Expander ex(c);
  std::vector<EnumeratedGraph> out;
  ex.descend(Node{unit.root, canonical_labeling(unit.root)}, out);
  sort_by_form(out);
  return out;
}

std::vector<EnumeratedGraph> enumerate_all(const EnumConstraints& c, int threads) {
  validate(c);
  if (threads <= 0) threads = default_threads();
  const int depth = threads == 1 ? 0 : std::min(c.m - 1, 4);
  const auto units = shard(c, depth);
  std::vector<std::vector<EnumeratedGraph>> parts(units.size());
  parallel_for(units.size(), threads, [&](std::size_t i) { parts[i] = run_shard(c, units[i]); });
  std::vector<EnumeratedGraph> all;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(all));
  sort_by_form(all);
  return all;
}

long enumerate_by_edges(const EnumConstraints& c, const EnumVisitor& visit, int threads) {
  const auto all = enumerate_all(c, threads);
  for (const auto& e : all) visit(e.graph, e.form);
  return static_cast<long>(all.size());
}

long known_class_count(int m) {
  static constexpr std::array<long, 21> kCounts = {
      1,      1,      2,       5,       11,       26,       68,       177,       497,        1476,
      4613,   15216,  52944,   193367,  740226,   2960520,  12334829, 53394755,  239544624,
      1111261697, 5320103098};
  if (m < 0 || m >= static_cast<int>(kCounts.size())) return -1;
  return kCounts[m];
}

}  // namespace spexm
