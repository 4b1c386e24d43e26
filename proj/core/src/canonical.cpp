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

#include "spexm/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "spexm/graph6.hpp"

namespace spexm {

namespace {

using Cells = std::vector<VertexMask>;

class Searcher {
 public:
  explicit Searcher(const Graph& g) : g_(g), n_(g.n()) { seed_twins(); }

  CanonicalLabeling run() {
    CanonicalLabeling out;
    if (n_ == 0) {
      out.form = write_graph6(g_);
      return out;
    }
    Cells cells{g_.vertex_mask()};
    refine(cells, {g_.vertex_mask()});
    search(cells);
    out.order = best_order_;
    out.form = write_graph6(g_.relabeled(best_order_));
    out.generators = std::move(gens_);
    return out;
  }

 private:
  // Transpositions of vertices with equal open or closed neighbourhoods.
  void seed_twins() {
    for (int closed = 0; closed < 2; ++closed) {
      std::vector<bool> seen(n_, false);
      for (int u = 0; u < n_; ++u) {
        if (seen[u]) continue;
        const VertexMask key_u = g_.adj(u) | (closed ? bit(u) : 0);
        int prev = u;
        for (int v = u + 1; v < n_; ++v) {
          if (seen[v]) continue;
          const VertexMask key_v = g_.adj(v) | (closed ? bit(v) : 0);
          if (key_u != key_v) continue;
          seen[v] = true;
          Permutation p(n_);
          std::iota(p.begin(), p.end(), 0);
          std::swap(p[prev], p[v]);
          gens_.push_back(std::move(p));
          prev = v;
        }
      }
    }
  }

  void refine(Cells& cells, Cells queue) const {
    std::size_t head = 0;
    int counts[Graph::kMaxVertices];
    while (head < queue.size() && static_cast<int>(cells.size()) < n_) {
      const VertexMask splitter = queue[head++];
      for (std::size_t i = 0; i < cells.size(); ++i) {
        const VertexMask cell = cells[i];
        if (popcount(cell) <= 1) continue;
        int lo = Graph::kMaxVertices + 1;
        int hi = -1;
        for_each_bit(cell, [&](int v) {
          const int c = popcount(g_.adj(v) & splitter);
          counts[v] = c;
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        });
        if (lo == hi) continue;
        Cells frags;
        for (int c = lo; c <= hi; ++c) {
          VertexMask f = 0;
          for_each_bit(cell, [&](int v) {
            if (counts[v] == c) f |= bit(v);
          });
          if (f) frags.push_back(f);
        }
        cells[i] = frags[0];
        cells.insert(cells.begin() + static_cast<long>(i) + 1, frags.begin() + 1, frags.end());
        queue.insert(queue.end(), frags.begin(), frags.end());
        i += frags.size() - 1;
      }
    }
  }

  bool fixes_prefix(const Permutation& p) const {
    for (int v : prefix_) {
      if (p[v] != v) return false;
    }
    return true;
  }

  // True when v shares an orbit with a vertex of `tried` under the stored
  // generators that fix the current prefix.
  bool equivalent_to_tried(int v, VertexMask tried) const {
    std::vector<Permutation> fixing;
    for (const auto& p : gens_) {
      if (fixes_prefix(p)) fixing.push_back(p);
    }
    if (fixing.empty()) return false;
    const auto orbit = vertex_orbits(n_, fixing);
    bool hit = false;
    for_each_bit(tried, [&](int w) { hit = hit || orbit[w] == orbit[v]; });
    return hit;
  }

  void search(const Cells& cells) {
    if (static_cast<int>(cells.size()) == n_) {
      leaf(cells);
      return;
    }
    std::size_t target = 0;
    int best_size = Graph::kMaxVertices + 1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const int s = popcount(cells[i]);
      if (s > 1 && s < best_size) {
        best_size = s;
        target = i;
      }
    }
    const VertexMask cell = cells[target];
    VertexMask tried = 0;
    for (VertexMask rest = cell; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (tried && equivalent_to_tried(v, tried)) continue;
      tried |= bit(v);
      Cells child = cells;
      child[target] = bit(v);
      child.insert(child.begin() + static_cast<long>(target) + 1, cell & ~bit(v));
      refine(child, {bit(v)});
      prefix_.push_back(v);
      search(child);
      prefix_.pop_back();
    }
  }

  void leaf(const Cells& cells) {
    std::vector<int> order(n_);
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) {
      order[i] = std::countr_zero(cells[i]);
      pos[order[i]] = i;
    }
    std::vector<VertexMask> cert(n_, 0);
    for (int i = 0; i < n_; ++i) {
      VertexMask row = 0;
      for_each_bit(g_.adj(order[i]), [&](int w) { row |= bit(pos[w]); });
      cert[i] = row;
    }
    if (best_order_.empty() || cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_order_ = std::move(order);
    } else if (cert == best_cert_) {
      Permutation p(n_);
      for (int i = 0; i < n_; ++i) p[best_order_[i]] = order[i];
      gens_.push_back(std::move(p));
    }
  }

  const Graph& g_;
  int n_;
  std::vector<Permutation> gens_;
  std::vector<int> prefix_;
  std::vector<VertexMask> best_cert_;
  std::vector<int> best_order_;
};

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

std::vector<int> vertex_orbits(int n, const std::vector<Permutation>& gens) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& p : gens) {
    for (int v = 0; v < n; ++v) {
      const int a = find_root(parent, v);
      const int b = find_root(parent, p[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<int> rep(n);
  for (int v = 0; v < n; ++v) rep[v] = find_root(parent, v);
  return rep;
}

CanonicalLabeling canonical_labeling(const Graph& g) { return Searcher(g).run(); }

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace spexm
