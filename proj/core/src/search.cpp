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

#include "spexm/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <set>

#include "spexm/errors.hpp"
#include "spexm/family.hpp"
#include "spexm/parallel.hpp"

namespace spexm {

namespace {

constexpr double kImprovement = 1e-12;
constexpr int kRejectionCap = 10'000;
constexpr int kSamplesPerOrder = 100;

enum class MoveKind { Rotation, Shift };

// Rotation: delete (a, b), add (c, d). Shift: vertex_shift(from = a, to = b).
struct Move {
  MoveKind kind;
  int a;
  int b;
  int c;
  int d;
  /// Rayleigh-quotient lower bound on the change of rho.
  double gain;
};

std::vector<Move> candidate_moves(const Graph& g, const std::vector<double>& x, bool rotation,
                                  bool shift) {
  std::vector<Move> out;
  const int n = g.n();
  if (shift) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u == v || x[u] < x[v]) continue;
        const VertexMask moved = g.adj(v) & ~g.adj(u) & ~bit(u);
        if (!moved) continue;
        double s = 0.0;
        for_each_bit(moved, [&](int w) { s += x[w]; });
        out.push_back({MoveKind::Shift, v, u, -1, -1, 2.0 * (x[u] - x[v]) * s});
      }
    }
  }
  if (rotation) {
    for (const auto& e : g.edges()) {
      const Graph h = g.without_edge(e.u, e.v);
      VertexMask allowed = 0;
      int first_isolated = -1;
      for (int v = 0; v < n; ++v) {
        if (h.adj(v)) {
          allowed |= bit(v);
        } else if (first_isolated == -1) {
          first_isolated = v;
        }
      }
      if (first_isolated != -1) allowed |= bit(first_isolated);
      for_each_bit(allowed, [&](int c) {
        for_each_bit(allowed & ~low_mask(c + 1) & ~g.adj(c), [&](int d) {
          if (c == e.u && d == e.v) return;
          out.push_back({MoveKind::Rotation, e.u, e.v, c, d, 2.0 * (x[c] * x[d] - x[e.u] * x[e.v])});
        });
      });
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Move& p, const Move& q) { return p.gain > q.gain; });
  return out;
}

Graph apply(const Graph& g, const Move& mv) {
  if (mv.kind == MoveKind::Shift) return vertex_shift(g, mv.a, mv.b);
  return g.without_edge(mv.a, mv.b).with_edge(mv.c, mv.d);
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Graph padded(const Graph& g, int pool) {
  return g.n() < pool ? g.with_vertices(pool - g.n()) : g;
}

std::optional<Graph> random_start(int m, const std::vector<Pattern>& forbid, std::mt19937_64& rng) {
  int nmin = 2;
  while (nmin * (nmin - 1) / 2 < m) ++nmin;
  const int pool = m + 1;
  int n = 0;
  for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
    if (attempt % kSamplesPerOrder == 0) n = std::uniform_int_distribution<int>(nmin, pool)(rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::set<std::pair<int, int>> chosen;
    while (static_cast<int>(chosen.size()) < m) {
      int u = pick(rng);
      int v = pick(rng);
      if (u == v) continue;
      chosen.insert({std::min(u, v), std::max(u, v)});
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : chosen) edges.push_back({u, v});
    Graph g(pool, edges);
    if (free_of_all(g, forbid)) return g;
  }
  return std::nullopt;
}

std::optional<Graph> fallback_start(int m, const std::vector<Pattern>& forbid) {
  std::vector<FamilySpec> specs{families::Star{m}};
  if (m >= 3 && m % 2 == 1) specs.push_back(families::Book{(m - 1) / 2});
  for (int s = 2; s * s <= m; ++s) {
    if (m % s == 0) specs.push_back(families::CompleteBipartite{s, m / s});
  }
  for (const auto& spec : specs) {
    Graph g = build_family(spec);
    if (free_of_all(g, forbid)) return padded(g, m + 1);
  }
  return std::nullopt;
}

struct RestartResult {
  bool feasible = false;
  bool fallback = false;
  Graph graph;
  double rho = 0.0;
  CanonicalForm form;
  std::vector<TracePoint> trace;
};

RestartResult climb(const SearchConfig& cfg, int restart) {
  RestartResult out;
  std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(restart))));
  std::optional<Graph> start = random_start(cfg.m, cfg.forbid, rng);
  if (!start) {
    start = fallback_start(cfg.m, cfg.forbid);
    out.fallback = true;
  }
  if (!start) return out;
  out.feasible = true;
  Graph g = *start;
  SpectralCertificate cert = spectral_radius(g);
  out.trace.push_back({restart, 0, cert.rho});
  for (int step = 1; step <= cfg.max_steps; ++step) {
    bool improved = false;
    for (const Move& mv : candidate_moves(g, cert.perron, cfg.edge_rotation, cfg.vertex_shift)) {
      const Graph next = apply(g, mv);
      if (next.m() != cfg.m) throw ConsistencyError("search move changed the edge count");
      SpectralCertificate next_cert;
      if (mv.gain > kImprovement) {
        if (!free_of_all(next, cfg.forbid)) continue;
        next_cert = spectral_radius(next);
        if (next_cert.rho <= cert.rho + kImprovement) continue;
      } else {
        next_cert = spectral_radius(next);
        if (next_cert.rho <= cert.rho + kImprovement) continue;
        if (!free_of_all(next, cfg.forbid)) continue;
      }
      g = next;
      cert = std::move(next_cert);
      out.trace.push_back({restart, step, cert.rho});
      improved = true;
      break;
    }
    if (!improved) break;
  }
  out.graph = g.drop_isolated();
  out.rho = cert.rho;
  out.form = canonical_form(out.graph);
  return out;
}

}  // namespace

void validate(const SearchConfig& cfg) {
  if (cfg.m < 1 || cfg.m > Graph::kMaxVertices - 1) throw ArgumentError("search needs 1 <= m <= 63");
  if (cfg.restarts < 1) throw ArgumentError("search needs at least one restart");
  if (cfg.max_steps < 0) throw ArgumentError("max_steps must be non-negative");
  if (!cfg.edge_rotation && !cfg.vertex_shift) throw ArgumentError("no move kind enabled");
  for (const auto& p : cfg.forbid) validate(p);
}

Graph vertex_shift(const Graph& g, int from, int to) {
  if (from < 0 || to < 0 || from >= g.n() || to >= g.n()) {
    throw ArgumentError("vertex_shift: vertex out of range");
  }
  if (from == to) throw ArgumentError("vertex_shift: from and to must differ");
  Graph out = g;
  for_each_bit(g.adj(from) & ~g.adj(to) & ~bit(to), [&](int w) {
    out = out.without_edge(from, w).with_edge(to, w);
  });
  return out;
}

SearchResult maximize_rho(const SearchConfig& cfg) {
  validate(cfg);
  std::vector<RestartResult> results(cfg.restarts);
  parallel_for(results.size(), cfg.threads,
               [&](std::size_t i) { results[i] = climb(cfg, static_cast<int>(i)); });
  SearchResult out;
  for (int r = 0; r < cfg.restarts; ++r) {
    RestartResult& res = results[r];
    if (res.fallback) ++out.fallback_starts;
    if (!res.feasible) continue;
    out.trace.insert(out.trace.end(), res.trace.begin(), res.trace.end());
    const bool better = !out.feasible || res.rho > out.cert.rho + kImprovement ||
                        (std::fabs(res.rho - out.cert.rho) <= kImprovement && res.form < out.best_form);
    if (better) {
      out.feasible = true;
      out.best_restart = r;
      out.best_form = res.form;
      out.cert.rho = res.rho;
      out.best = res.graph;
    }
  }
  if (!out.feasible) {
    out.note = "infeasible: no F-free start with " + std::to_string(cfg.m) +
               " edges found by sampling or among stars, books and complete bipartite graphs";
    return out;
  }
  const auto label = canonical_labeling(out.best);
  out.best = out.best.relabeled(label.order);
  out.cert = spectral_radius(out.best);
  return out;
}

LocalMaxReport local_max_check(const Graph& g, const std::vector<Pattern>& forbid,
                               bool edge_rotation, bool vertex_shift) {
  const Graph core = g.drop_isolated();
  const Graph base = padded(core, std::max(core.n(), g.m() + 1));
  const CanonicalForm base_form = canonical_form(core);
  const SpectralCertificate cert = spectral_radius(base);
  LocalMaxReport out;
  out.rho = cert.rho;
  out.best_neighbour_rho = -std::numeric_limits<double>::infinity();
  for (const Move& mv : candidate_moves(base, cert.perron, edge_rotation, vertex_shift)) {
    const Graph next = apply(base, mv);
    if (!free_of_all(next, forbid)) continue;
    const double r = spectral_radius(next).rho;
    if (std::fabs(r - out.rho) <= kDecisionSlack && canonical_form(next.drop_isolated()) == base_form) {
      continue;
    }
    ++out.neighbours;
    if (r > out.best_neighbour_rho) {
      out.best_neighbour_rho = r;
      out.best_neighbour = next.drop_isolated();
    }
    if (r >= out.rho - kImprovement) out.strict = false;
  }
  return out;
}

}  // namespace spexm
