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

#include "spexm/family.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "spexm/errors.hpp"

namespace spexm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw FamilyDomainError(what);
}

void require_order(long n, const std::string& name) {
  require(n <= Graph::kMaxVertices,
          name + " needs " + std::to_string(n) + " vertices, more than the 64-vertex limit");
}

std::vector<Edge> rk_edges(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) {
    int a = 3 * i + 1, b = a + 1, c = a + 2;
    e.insert(e.end(), {{0, a}, {0, b}, {0, c}, {a, b}, {a, c}, {b, c}});
  }
  return e;
}

void validate(const FamilySpec& spec) {
  std::visit(
      overloaded{
          [](const families::Star& f) {
            require(f.m >= 1, "Star requires m >= 1");
            require_order(f.m + 1L, "Star");
          },
          [](const families::Snk& f) {
            require(f.n >= 2, "Snk requires n >= 2");
            require(f.k >= 0, "Snk requires k >= 0");
            require(2 * f.k <= f.n - 1, "Snk requires 2k <= n-1 (the k disjoint edges must fit in the leaf set)");
            require_order(f.n, "Snk");
          },
          [](const families::CompleteSplit& f) {
            require(f.k >= 1, "CompleteSplit requires k >= 1");
            require(f.n >= f.k, "CompleteSplit requires n >= k");
            require(f.n >= 2, "CompleteSplit requires n >= 2");
            require_order(f.n, "CompleteSplit");
          },
          [](const families::CompleteBipartite& f) {
            require(f.s >= 1 && f.t >= 1, "CompleteBipartite requires s, t >= 1");
            require_order(static_cast<long>(f.s) + f.t, "CompleteBipartite");
          },
          [](const families::Book& f) {
            require(f.r >= 1, "Book requires r >= 1");
            require_order(f.r + 2L, "Book");
          },
          [](const families::Rk& f) {
            require(f.k >= 1, "Rk requires k >= 1");
            require_order(3L * f.k + 1, "Rk");
          },
          [](const families::HtsRk& f) {
            require(f.k >= 1, "HtsRk requires k >= 1");
            require(f.t >= 0 && f.s >= 0, "HtsRk requires t, s >= 0");
            require_order(3L * f.k + 1 + f.t + f.s, "HtsRk");
            std::vector<std::pair<int, int>> seen;
            for (auto [i, j] : f.edges) {
              require(i >= 0 && i < f.t && j >= 0 && j < f.s,
                      "HtsRk edge (" + std::to_string(i) + "," + std::to_string(j) +
                          ") is not a subset of T x S");
              seen.emplace_back(i, j);
            }
            std::sort(seen.begin(), seen.end());
            require(std::adjacent_find(seen.begin(), seen.end()) == seen.end(),
                    "HtsRk edge list repeats an edge");
          },
          [](const families::K1rBulletRk& f) {
            require(f.r >= 1, "K1rBulletRk requires r >= 1");
            require(f.k >= 1, "K1rBulletRk requires k >= 1");
            require_order(3L * f.k + 2 + f.r, "K1rBulletRk");
          },
          [](const families::Cycle& f) {
            require(f.t >= 3, "Cycle requires t >= 3");
            require_order(f.t, "Cycle");
          },
          [](const families::CtPlus& f) {
            require(f.t >= 3, "CtPlus requires t >= 3");
            require_order(f.t + 1L, "CtPlus");
          },
          [](const families::Path& f) {
            require(f.v >= 1, "Path requires v >= 1");
            require_order(f.v, "Path");
          },
          [](const families::Complete& f) {
            require(f.n >= 1, "Complete requires n >= 1");
            require_order(f.n, "Complete");
          },
      },
      spec);
}

}  // namespace

Graph build_family(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      overloaded{
          [](const families::Star& f) {
            std::vector<Edge> e;
            for (int i = 1; i <= f.m; ++i) e.push_back({0, i});
            return Graph(f.m + 1, e);
          },
          [](const families::Snk& f) {
            std::vector<Edge> e;
            for (int i = 1; i < f.n; ++i) e.push_back({0, i});
            for (int i = 0; i < f.k; ++i) e.push_back({2 * i + 1, 2 * i + 2});
            return Graph(f.n, e);
          },
          [](const families::CompleteSplit& f) {
            std::vector<Edge> e;
            for (int a = 0; a < f.k; ++a) {
              for (int b = a + 1; b < f.n; ++b) e.push_back({a, b});
            }
            return Graph(f.n, e);
          },
          [](const families::CompleteBipartite& f) {
            std::vector<Edge> e;
            for (int a = 0; a < f.s; ++a) {
              for (int b = 0; b < f.t; ++b) e.push_back({a, f.s + b});
            }
            return Graph(f.s + f.t, e);
          },
          [](const families::Book& f) {
            return build_family(families::CompleteSplit{f.r + 2, 2});
          },
          [](const families::Rk& f) { return Graph(3 * f.k + 1, rk_edges(f.k)); },
          [](const families::HtsRk& f) {
            std::vector<Edge> e = rk_edges(f.k);
            const int t0 = 3 * f.k + 1;
            const int s0 = t0 + f.t;
            for (int i = 0; i < f.t; ++i) e.push_back({0, t0 + i});
            for (auto [i, j] : f.edges) e.push_back({t0 + i, s0 + j});
            return Graph(s0 + f.s, e);
          },
          [](const families::K1rBulletRk& f) {
            std::vector<Edge> e = rk_edges(f.k);
            const int c = 3 * f.k + 1;
            e.push_back({0, c});
            for (int i = 1; i <= f.r; ++i) {
              e.push_back({0, c + i});
              e.push_back({c, c + i});
            }
            return Graph(c + f.r + 1, e);
          },
          [](const families::Cycle& f) {
            std::vector<Edge> e;
            for (int i = 0; i < f.t; ++i) e.push_back({std::min(i, (i + 1) % f.t), std::max(i, (i + 1) % f.t)});
            return Graph(f.t, e);
          },
          [](const families::CtPlus& f) {
            Graph c = build_family(families::Cycle{f.t});
            return c.with_vertices(1).with_edge(0, f.t).with_edge(1, f.t);
          },
          [](const families::Path& f) {
            std::vector<Edge> e;
            for (int i = 0; i + 1 < f.v; ++i) e.push_back({i, i + 1});
            return Graph(f.v, e);
          },
          [](const families::Complete& f) {
            return build_family(families::CompleteSplit{f.n, f.n});
          },
      },
      spec);
}

long family_edge_count(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      overloaded{
          [](const families::Star& f) -> long { return f.m; },
          [](const families::Snk& f) -> long { return f.n - 1L + f.k; },
          [](const families::CompleteSplit& f) -> long {
            return 1L * f.k * (f.n - f.k) + 1L * f.k * (f.k - 1) / 2;
          },
          [](const families::CompleteBipartite& f) -> long { return 1L * f.s * f.t; },
          [](const families::Book& f) -> long { return 2L * f.r + 1; },
          [](const families::Rk& f) -> long { return 6L * f.k; },
          [](const families::HtsRk& f) -> long {
            return 6L * f.k + f.t + static_cast<long>(f.edges.size());
          },
          [](const families::K1rBulletRk& f) -> long { return 6L * f.k + 2L * f.r + 1; },
          [](const families::Cycle& f) -> long { return f.t; },
          [](const families::CtPlus& f) -> long { return f.t + 2L; },
          [](const families::Path& f) -> long { return f.v - 1L; },
          [](const families::Complete& f) -> long { return 1L * f.n * (f.n - 1) / 2; },
      },
      spec);
}

std::string to_string(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const families::Star& f) { return "star:" + std::to_string(f.m); },
          [](const families::Snk& f) {
            return "S:" + std::to_string(f.n) + ":" + std::to_string(f.k);
          },
          [](const families::CompleteSplit& f) {
            return "split:" + std::to_string(f.n) + ":" + std::to_string(f.k);
          },
          [](const families::CompleteBipartite& f) {
            return "K:" + std::to_string(f.s) + ":" + std::to_string(f.t);
          },
          [](const families::Book& f) { return "book:" + std::to_string(f.r); },
          [](const families::Rk& f) { return "R:" + std::to_string(f.k); },
          [](const families::HtsRk& f) {
            std::string s = "H:" + std::to_string(f.t) + ":" + std::to_string(f.s) + ":" +
                            std::to_string(f.k);
            if (!f.edges.empty()) {
              s += ":";
              for (std::size_t i = 0; i < f.edges.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(f.edges[i].first) + "-" + std::to_string(f.edges[i].second);
              }
            }
            return s;
          },
          [](const families::K1rBulletRk& f) {
            return "KR:" + std::to_string(f.r) + ":" + std::to_string(f.k);
          },
          [](const families::Cycle& f) { return "C:" + std::to_string(f.t); },
          [](const families::CtPlus& f) { return "C+:" + std::to_string(f.t); },
          [](const families::Path& f) { return "P:" + std::to_string(f.v); },
          [](const families::Complete& f) { return "Kn:" + std::to_string(f.n); },
      },
      spec);
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find(sep, start);
    out.push_back(s.substr(start, p == std::string_view::npos ? s.npos : p - start));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

int to_int(std::string_view s, std::string_view context) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ArgumentError("bad integer '" + std::string(s) + "' in family spec '" +
                        std::string(context) + "'");
  }
  return v;
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  const auto parts = split(text, ':');
  const std::string_view tag = parts[0];
  auto arity = [&](std::size_t k) {
    if (parts.size() != k + 1) {
      throw ArgumentError("family spec '" + std::string(text) + "' expects " +
                          std::to_string(k) + " parameter(s)");
    }
  };
  auto arg = [&](std::size_t i) { return to_int(parts[i], text); };
  if (tag == "star") {
    arity(1);
    return families::Star{arg(1)};
  }
  if (tag == "S") {
    arity(2);
    return families::Snk{arg(1), arg(2)};
  }
  if (tag == "split") {
    arity(2);
    return families::CompleteSplit{arg(1), arg(2)};
  }
  if (tag == "K") {
    arity(2);
    return families::CompleteBipartite{arg(1), arg(2)};
  }
  if (tag == "book" || tag == "B") {
    arity(1);
    return families::Book{arg(1)};
  }
  if (tag == "R") {
    arity(1);
    return families::Rk{arg(1)};
  }
  if (tag == "H") {
    if (parts.size() != 4 && parts.size() != 5) {
      throw ArgumentError("family spec '" + std::string(text) + "' expects H:t:s:k[:i-j,...]");
    }
    families::HtsRk h{arg(1), arg(2), arg(3), {}};
    if (parts.size() == 5 && !parts[4].empty()) {
      for (std::string_view e : split(parts[4], ',')) {
        auto ij = split(e, '-');
        if (ij.size() != 2) throw ArgumentError("bad H edge '" + std::string(e) + "'");
        h.edges.emplace_back(to_int(ij[0], text), to_int(ij[1], text));
      }
    }
    return h;
  }
  if (tag == "KR") {
    arity(2);
    return families::K1rBulletRk{arg(1), arg(2)};
  }
  if (tag == "C") {
    arity(1);
    return families::Cycle{arg(1)};
  }
  if (tag == "C+") {
    arity(1);
    return families::CtPlus{arg(1)};
  }
  if (tag == "P") {
    arity(1);
    return families::Path{arg(1)};
  }
  if (tag == "Kn") {
    arity(1);
    return families::Complete{arg(1)};
  }
  throw ArgumentError("unknown family '" + std::string(tag) +
                      "' (expected star, S, split, K, book, R, H, KR, C, C+, P, Kn)");
}

// ---- recognizers ----------------------------------------------------------

bool is_star(const Graph& g) {
  const int n = g.n();
  if (n < 2 || g.m() != n - 1) return false;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) return true;
  }
  return false;
}

std::optional<std::pair<int, int>> complete_bipartite_parts(const Graph& g) {
  const int n = g.n();
  if (n < 2 || g.has_isolated() || !is_bipartite(g) || !is_connected(g)) return std::nullopt;
  // in a connected bipartite graph the side of vertex 0 is its even-distance class
  VertexMask side = bit(0), seen = bit(0), frontier = bit(0);
  int dist = 0;
  while (frontier) {
    VertexMask next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.adj(v); });
    next &= ~seen;
    seen |= next;
    ++dist;
    if (dist % 2 == 0) side |= next;
    frontier = next;
  }
  const int s = popcount(side);
  const int t = n - s;
  if (static_cast<long>(s) * t != g.m()) return std::nullopt;
  return std::make_pair(std::min(s, t), std::max(s, t));
}

bool is_complete_bipartite(const Graph& g) { return complete_bipartite_parts(g).has_value(); }

bool is_complete_split(const Graph& g, int k) {
  const int n = g.n();
  if (k < 1 || n < k || n < 2) return false;
  const long expected = 1L * k * (n - k) + 1L * k * (k - 1) / 2;
  if (g.m() != expected) return false;
  int universal = 0;
  for (int v = 0; v < n; ++v) universal += g.degree(v) == n - 1;
  // k universal vertices already carry all `expected` edges
  return universal >= std::min(k, n);
}

bool is_book(const Graph& g) { return g.n() >= 4 && is_complete_split(g, 2); }

std::optional<std::pair<int, int>> snk_parameters(const Graph& g) {
  const int n = g.n();
  if (n < 2) return std::nullopt;
  for (int c = 0; c < n; ++c) {
    if (g.degree(c) != n - 1) continue;
    bool matching = true;
    for (int v = 0; v < n && matching; ++v) {
      if (v != c && popcount(g.adj(v) & ~bit(c)) > 1) matching = false;
    }
    if (matching) return std::make_pair(n, g.m() - (n - 1));
  }
  return std::nullopt;
}

bool is_snk(const Graph& g) { return snk_parameters(g).has_value(); }

bool is_complete_regular_multipartite(const Graph& g, int r) {
  const int n = g.n();
  if (r < 2 || n % r != 0 || n == 0) return false;
  const int part = n / r;
  // complement must be r disjoint cliques of size `part`
  VertexMask left = g.vertex_mask();
  int parts = 0;
  while (left) {
    int v = std::countr_zero(left);
    VertexMask cls = (~g.adj(v)) & g.vertex_mask();
    if (popcount(cls) != part) return false;
    for_each_bit(cls, [&](int w) {
      if (((~g.adj(w)) & g.vertex_mask()) != cls) cls = 0;
    });
    if (cls == 0 || (cls & ~left)) return false;
    left &= ~cls;
    ++parts;
  }
  return parts == r;
}

bool is_complete(const Graph& g) {
  return g.n() >= 1 && 2L * g.m() == 1L * g.n() * (g.n() - 1);
}

std::string recognize_family(const Graph& g) {
  std::ostringstream os;
  if (is_star(g)) {
    os << "star K_{1," << g.m() << "}";
  } else if (auto p = complete_bipartite_parts(g)) {
    os << "complete bipartite K_{" << p->first << "," << p->second << "}";
  } else if (is_book(g)) {
    os << "book S_{" << g.n() << ",2}";
  } else if (auto sk = snk_parameters(g)) {
    os << "S_" << sk->first << "^" << sk->second;
  } else if (is_complete(g)) {
    os << "complete K_" << g.n();
  } else {
    for (int k = 3; k < g.n() - 1; ++k) {
      if (is_complete_split(g, k)) {
        os << "complete split S_{" << g.n() << "," << k << "}";
        break;
      }
    }
  }
  return os.str();
}

}  // namespace spexm
