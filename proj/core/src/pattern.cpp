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

#include "spexm/pattern.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "spexm/errors.hpp"
#include "spexm/family.hpp"
#include "spexm/graph6.hpp"

namespace spexm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// ---- exact-length cycles --------------------------------------------------

struct CycleSearch {
  const Graph& g;
  int t;
  int start = 0;
  VertexMask allowed = 0;
  std::array<int, Graph::kMaxVertices> path{};

  bool extend(int depth, VertexMask visited) {
    const int end = path[depth - 1];
    if (depth == t) return g.has_edge(end, start);
    if (popcount(allowed & ~visited) < t - depth) return false;
    VertexMask cand = g.adj(end) & allowed & ~visited;
    if (depth == t - 1) cand &= g.adj(start);
    while (cand) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      path[depth] = w;
      if (extend(depth + 1, visited | bit(w))) return true;
    }
    return false;
  }

  bool run() {
    for (start = 0; start < g.n(); ++start) {
      // the cycle's smallest vertex is `start`
      allowed = g.vertex_mask() & ~low_mask(start + 1);
      if (popcount(allowed) < t - 1) break;
      if (g.degree(start) < 2) continue;
      path[0] = start;
      if (extend(1, bit(start))) return true;
    }
    return false;
  }
};

// path u = p_0 .. p_{t-1} = v avoiding the edge uv, with a common neighbour
// of u and v left off the path
struct CtPlusSearch {
  const Graph& g;
  int t;
  int target = 0;
  VertexMask common = 0;

  bool extend(int end, int depth, VertexMask visited) {
    if (depth == t - 1) {
      return g.has_edge(end, target) && (common & ~visited) != 0;
    }
    VertexMask cand = g.adj(end) & ~visited & ~bit(target);
    if (depth == t - 2) cand &= g.adj(target);
    while (cand) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      if (extend(w, depth + 1, visited | bit(w))) return true;
    }
    return false;
  }

  bool run() {
    for (const Edge& e : g.edges()) {
      common = g.adj(e.u) & g.adj(e.v);
      if (!common) continue;
      target = e.v;
      if (extend(e.u, 1, bit(e.u))) return true;
    }
    return false;
  }
};

bool has_k_st(const Graph& g, int s, int t) {
  if (s > t) std::swap(s, t);
  if (s + t > g.n()) return false;
  if (s == 1) return g.max_degree() >= t;
  // choose s vertices in increasing order keeping >= t common neighbours
  struct Rec {
    const Graph& g;
    int s, t;
    bool go(int next, int chosen, VertexMask common) {
      if (chosen == s) return popcount(common) >= t;
      for (int v = next; v < g.n(); ++v) {
        VertexMask c = common & g.adj(v);
        if (popcount(c) < t) continue;
        if (go(v + 1, chosen + 1, c)) return true;
      }
      return false;
    }
  } rec{g, s, t};
  return rec.go(0, 0, g.vertex_mask());
}

bool has_clique(const Graph& g, int r) {
  if (r <= 1) return g.n() >= r;
  struct Rec {
    const Graph& g;
    bool go(VertexMask cand, int need) {
      if (need == 0) return true;
      if (popcount(cand) < need) return false;
      while (cand) {
        const int v = std::countr_zero(cand);
        cand &= cand - 1;
        if (go(cand & g.adj(v), need - 1)) return true;
      }
      return false;
    }
  } rec{g};
  return rec.go(g.vertex_mask(), r);
}

bool has_path_vertices(const Graph& g, int v) {
  if (v <= 1) return g.n() >= v;
  if (v > g.n()) return false;
  struct Rec {
    const Graph& g;
    int v;
    bool go(int end, int len, VertexMask visited) {
      if (len == v) return true;
      VertexMask cand = g.adj(end) & ~visited;
      while (cand) {
        const int w = std::countr_zero(cand);
        cand &= cand - 1;
        if (go(w, len + 1, visited | bit(w))) return true;
      }
      return false;
    }
  } rec{g, v};
  for (int s = 0; s < g.n(); ++s) {
    if (rec.go(s, 1, bit(s))) return true;
  }
  return false;
}

// ---- generic monomorphism --------------------------------------------------

struct Monomorphism {
  const Graph& g;
  const Graph& p;
  std::vector<int> order;                // pattern vertices in search order
  std::vector<VertexMask> earlier_nbrs;  // pattern neighbours placed before
  std::array<int, Graph::kMaxVertices> image{};

  Monomorphism(const Graph& host, const Graph& pat) : g(host), p(pat) {
    const int k = p.n();
    VertexMask placed = 0;
    for (int step = 0; step < k; ++step) {
      int best = -1;
      int best_conn = -1;
      for (int v = 0; v < k; ++v) {
        if (placed & bit(v)) continue;
        const int conn = popcount(p.adj(v) & placed);
        if (best == -1 || conn > best_conn ||
            (conn == best_conn && p.degree(v) > p.degree(best))) {
          best = v;
          best_conn = conn;
        }
      }
      order.push_back(best);
      earlier_nbrs.push_back(p.adj(best) & placed);
      placed |= bit(best);
    }
  }

  bool go(std::size_t i, VertexMask used) {
    if (i == order.size()) return true;
    const int pv = order[i];
    VertexMask cand = g.vertex_mask() & ~used;
    for_each_bit(earlier_nbrs[i], [&](int q) { cand &= g.adj(image[q]); });
    const int need = p.degree(pv);
    while (cand) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      if (g.degree(w) < need) continue;
      image[pv] = w;
      if (go(i + 1, used | bit(w))) return true;
    }
    return false;
  }
};

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ArgumentError("cannot parse pattern '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

void validate(const Pattern& p) {
  std::visit(overloaded{
                 [](const patterns::Cycle& c) {
                   if (c.t < 3) throw ArgumentError("cycle pattern needs t >= 3");
                 },
                 [](const patterns::CtPlus& c) {
                   if (c.t < 3) throw ArgumentError("C_t+ pattern needs t >= 3");
                 },
                 [](const patterns::CompleteBipartite& c) {
                   if (c.s < 1 || c.t < 1) throw ArgumentError("K_{s,t} pattern needs s, t >= 1");
                 },
                 [](const patterns::Book& b) {
                   if (b.r < 1) throw ArgumentError("book pattern needs r >= 1");
                 },
                 [](const patterns::Clique& c) {
                   if (c.r < 2) throw ArgumentError("clique pattern needs r >= 2");
                 },
                 [](const patterns::PathVertices& pv) {
                   if (pv.v < 2) throw ArgumentError("path pattern needs at least 2 vertices");
                 },
                 [](const patterns::Explicit& e) {
                   if (e.graph.n() > kMaxExplicitPatternVertices) {
                     throw UnsupportedPatternError(
                         "explicit pattern has " + std::to_string(e.graph.n()) +
                         " vertices; at most 8 are supported");
                   }
                   if (e.graph.n() == 0 || e.graph.has_isolated()) {
                     throw ArgumentError("explicit pattern must be non-empty without isolated vertices");
                   }
                 },
             },
             p);
}

Pattern parse_pattern(std::string_view text) {
  Pattern p;
  if (text.starts_with("g6:")) {
    p = patterns::Explicit{parse_graph6(text.substr(3))};
  } else if (text.size() >= 2 && text[0] == 'C' && text.back() == '+') {
    p = patterns::CtPlus{parse_int(text.substr(1, text.size() - 2), text)};
  } else if (text.size() >= 2 && text[0] == 'C') {
    p = patterns::Cycle{parse_int(text.substr(1), text)};
  } else if (text.size() >= 2 && text[0] == 'K') {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) {
      p = patterns::Clique{parse_int(text.substr(1), text)};
    } else {
      p = patterns::CompleteBipartite{parse_int(text.substr(1, comma - 1), text),
                                      parse_int(text.substr(comma + 1), text)};
    }
  } else if (text.size() >= 2 && text[0] == 'B') {
    p = patterns::Book{parse_int(text.substr(1), text)};
  } else if (text.size() >= 2 && text[0] == 'P') {
    p = patterns::PathVertices{parse_int(text.substr(1), text)};
  } else {
    throw ArgumentError("unknown pattern '" + std::string(text) +
                        "' (expected C<t>, C<t>+, K<s>,<t>, K<r>, B<r>, P<v> or g6:<code>)");
  }
  validate(p);
  return p;
}

std::string to_string(const Pattern& p) {
  return std::visit(
      overloaded{
          [](const patterns::Cycle& c) { return "C" + std::to_string(c.t); },
          [](const patterns::CtPlus& c) { return "C" + std::to_string(c.t) + "+"; },
          [](const patterns::CompleteBipartite& c) {
            return "K" + std::to_string(c.s) + "," + std::to_string(c.t);
          },
          [](const patterns::Book& b) { return "B" + std::to_string(b.r); },
          [](const patterns::Clique& c) { return "K" + std::to_string(c.r); },
          [](const patterns::PathVertices& pv) { return "P" + std::to_string(pv.v); },
          [](const patterns::Explicit& e) { return "g6:" + write_graph6(e.graph); },
      },
      p);
}

Graph pattern_graph(const Pattern& p) {
  validate(p);
  return std::visit(
      overloaded{
          [](const patterns::Cycle& c) { return build_family(families::Cycle{c.t}); },
          [](const patterns::CtPlus& c) { return build_family(families::CtPlus{c.t}); },
          [](const patterns::CompleteBipartite& c) {
            return build_family(families::CompleteBipartite{c.s, c.t});
          },
          [](const patterns::Book& b) { return build_family(families::Book{b.r}); },
          [](const patterns::Clique& c) { return build_family(families::Complete{c.r}); },
          [](const patterns::PathVertices& pv) { return build_family(families::Path{pv.v}); },
          [](const patterns::Explicit& e) { return e.graph; },
      },
      p);
}

bool contains_subgraph(const Graph& g, const Graph& pattern) {
  if (pattern.n() > g.n() || pattern.m() > g.m()) return false;
  Monomorphism mono(g, pattern);
  return mono.go(0, 0);
}

bool has_cycle_of_length(const Graph& g, int t) {
  if (t < 3 || t > g.n() || g.m() < t) return false;
  if (t == 3) {
    for (const Edge& e : g.edges()) {
      if (g.adj(e.u) & g.adj(e.v)) return true;
    }
    return false;
  }
  if (t == 4) return has_k_st(g, 2, 2);
  return CycleSearch{g, t}.run();
}

std::optional<std::vector<int>> find_cycle_of_length(const Graph& g, int t) {
  if (t < 3 || t > g.n()) return std::nullopt;
  CycleSearch search{g, t};
  if (!search.run()) return std::nullopt;
  return std::vector<int>(search.path.begin(), search.path.begin() + t);
}

bool is_cycle_in(const Graph& g, const std::vector<int>& seq) {
  const int t = static_cast<int>(seq.size());
  if (t < 3) return false;
  VertexMask seen = 0;
  for (int v : seq) {
    if (v < 0 || v >= g.n() || (seen & bit(v))) return false;
    seen |= bit(v);
  }
  for (int i = 0; i < t; ++i) {
    if (!g.has_edge(seq[i], seq[(i + 1) % t])) return false;
  }
  return true;
}

bool contains(const Graph& g, const Pattern& p) {
  validate(p);
  return std::visit(
      overloaded{
          [&](const patterns::Cycle& c) { return has_cycle_of_length(g, c.t); },
          [&](const patterns::CtPlus& c) {
            if (g.n() < c.t + 1 || g.m() < c.t + 2) return false;
            return CtPlusSearch{g, c.t}.run();
          },
          [&](const patterns::CompleteBipartite& c) { return has_k_st(g, c.s, c.t); },
          [&](const patterns::Book& b) {
            for (const Edge& e : g.edges()) {
              if (popcount(g.adj(e.u) & g.adj(e.v)) >= b.r) return true;
            }
            return false;
          },
          [&](const patterns::Clique& c) { return has_clique(g, c.r); },
          [&](const patterns::PathVertices& pv) { return has_path_vertices(g, pv.v); },
          [&](const patterns::Explicit& e) { return contains_subgraph(g, e.graph); },
      },
      p);
}

bool free_of_all(const Graph& g, const std::vector<Pattern>& ps) {
  for (const Pattern& p : ps) {
    if (contains(g, p)) return false;
  }
  return true;
}

std::optional<int> missing_cycle_length(const Graph& g, int max_len) {
  if (max_len < 3) throw ArgumentError("missing_cycle_length needs a maximum length >= 3");
  for (int t = 3; t <= max_len; ++t) {
    if (!has_cycle_of_length(g, t)) return t;
  }
  return std::nullopt;
}

std::vector<int> longest_path_in(const Graph& g, VertexMask s) {
  if (s & ~g.vertex_mask()) throw ArgumentError("vertex set references missing vertex");
  if (!s) throw ArgumentError("longest_path_in needs a non-empty vertex set");
  if (popcount(s) > kMaxLongestPathSet) {
    throw SizeLimitError("longest_path_in supports at most 32 vertices, got " +
                         std::to_string(popcount(s)));
  }
  struct Rec {
    const Graph& g;
    VertexMask s;
    std::vector<int> cur, best;
    bool done = false;

    VertexMask reachable(int from, VertexMask within) const {
      VertexMask seen = bit(from), frontier = bit(from);
      while (frontier) {
        VertexMask next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.adj(v); });
        frontier = next & within & ~seen;
        seen |= frontier;
      }
      return seen & ~bit(from);
    }

    void go(int end, VertexMask visited) {
      if (cur.size() > best.size()) {
        best = cur;
        if (static_cast<int>(best.size()) == popcount(s)) done = true;
      }
      if (done) return;
      const VertexMask free = s & ~visited;
      if (cur.size() + popcount(reachable(end, free)) <= best.size()) return;
      VertexMask cand = g.adj(end) & free;
      while (cand && !done) {
        const int w = std::countr_zero(cand);
        cand &= cand - 1;
        cur.push_back(w);
        go(w, visited | bit(w));
        cur.pop_back();
      }
    }
  } rec{g, s, {}, {}};
  for_each_bit(s, [&](int start) {
    if (rec.done) return;
    rec.cur = {start};
    rec.go(start, bit(start));
  });
  return rec.best;
}

}  // namespace spexm
