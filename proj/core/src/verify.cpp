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

#include "spexm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>

#include "spexm/canonical.hpp"
#include "spexm/charpoly.hpp"
#include "spexm/enumerate.hpp"
#include "spexm/errors.hpp"
#include "spexm/family.hpp"
#include "spexm/graph6.hpp"
#include "spexm/parallel.hpp"
#include "spexm/search.hpp"
#include "spexm/spectral.hpp"

#ifndef SPEXM_VERSION
#define SPEXM_VERSION "0.0.0"
#endif

namespace spexm {

namespace {

QuadraticRoot book_root(long m) { return {1, -1, -(m - 1)}; }
QuadraticRoot cycles_root(long m, long k) { return {2, -(2 * k - 1), -2 * m}; }
QuadraticRoot conj61_root(long m, long k) { return {2, -2 * (k - 1), k * k - k - 2 * m}; }
QuadraticRoot turan_root(long m, long r) { return {r, 0, -2 * m * (r - 1)}; }

Graph complete_multipartite(int parts, int size) {
  std::vector<Edge> edges;
  const int n = parts * size;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (u / size != v / size) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

std::vector<Graph> complete_bipartite_with(int m) {
  std::vector<Graph> out;
  for (int s = 1; s * s <= m; ++s) {
    if (m % s == 0 && s + m / s <= Graph::kMaxVertices) {
      out.push_back(build_family(families::CompleteBipartite{s, m / s}));
    }
  }
  return out;
}

std::string certificate_for_equality(const Graph& g, const QuadraticRoot& q) {
  if (g.n() <= kMaxCharPolyOrder) {
    if (q.a == 1 && q.b == 0) {
      if (!certify_rho_equals_sqrt(g).is_exact) {
        throw ConsistencyError("equality screen disagrees with the sqrt(m) certificate");
      }
      return "char_poly vanishes at sqrt(m) in Z[sqrt(m)]";
    }
    const long disc = q.b * q.b - 4 * q.a * q.c;
    const long s = std::lround(std::sqrt(static_cast<double>(std::max(disc, 0L))));
    if (q.a == 1 && disc >= 0 && s * s == disc && (s - q.b) % 2 == 0) {
      if (sign_at(char_poly(g), q) != 0) {
        throw ConsistencyError("equality screen disagrees with the rational-root certificate");
      }
      return "char_poly vanishes at " + std::to_string((s - q.b) / 2);
    }
    if (q.a == 1) {
      if (!certify_quadratic_eigenfactor(g, -q.b, -q.c).is_zero()) {
        throw ConsistencyError("equality screen disagrees with the quadratic-factor certificate");
      }
      return "x^2 + (" + std::to_string(q.b) + ")x + (" + std::to_string(q.c) +
             ") divides char_poly";
    }
  }
  return "char_poly of the achieving component vanishes at the threshold";
}

GraphFinding finding(const Graph& g, const std::string& form, double rho, double threshold,
                     std::string certificate, std::string detail) {
  GraphFinding f;
  f.graph6 = form;
  f.family = recognize_family(g);
  f.rho = rho;
  f.threshold = threshold;
  f.certificate = std::move(certificate);
  f.detail = std::move(detail);
  return f;
}

void file_failure(MRecord& rec, GraphFinding f) {
  switch (rec.hypothesis) {
    case Hypothesis::Inside:
      rec.violations.push_back(std::move(f));
      break;
    case Hypothesis::Outside:
      rec.boundary_findings.push_back(std::move(f));
      break;
    case Hypothesis::Unknown:
      rec.counterexamples.push_back(std::move(f));
      break;
  }
}

// ---- upper-bound statements ----------------------------------------------

struct BoundStatement {
  std::vector<Pattern> forbid;
  std::function<QuadraticRoot(int)> threshold;
  std::function<Hypothesis(int)> hypothesis;
  std::function<bool(const Graph&)> equality_allowed;
  std::function<std::vector<Graph>(int)> expected_equality;
  std::string equality_family;
};

BoundStatement bound_statement(const TheoremId& id) {
  BoundStatement b;
  b.forbid = forbidden_patterns(id);
  auto sqrt_threshold = [](int m) { return sqrt_root(m); };
  auto stars = [](int m) { return std::vector<Graph>{build_family(families::Star{m})}; };
  auto from = [](int m0) {
    return [m0](int m) { return m >= m0 ? Hypothesis::Inside : Hypothesis::Outside; };
  };
  switch (id.tag) {
    case TheoremTag::T1_1: {
      const int r = id.r;
      b.threshold = [r](int m) { return turan_root(m, r); };
      b.hypothesis = [](int) { return Hypothesis::Inside; };
      if (r == 2) {
        b.equality_allowed = [](const Graph& g) { return is_complete_bipartite(g); };
        b.expected_equality = complete_bipartite_with;
        b.equality_family = "complete bipartite";
      } else {
        b.equality_allowed = [r](const Graph& g) { return is_complete_regular_multipartite(g, r); };
        b.expected_equality = [r](int m) {
          std::vector<Graph> out;
          const int pairs = r * (r - 1) / 2;
          for (int s = 1; pairs * s * s <= m; ++s) {
            if (pairs * s * s == m && r * s <= Graph::kMaxVertices) {
              out.push_back(complete_multipartite(r, s));
            }
          }
          return out;
        };
        b.equality_family = "complete regular " + std::to_string(r) + "-partite";
      }
      break;
    }
    case TheoremTag::T1_2:
      b.threshold = sqrt_threshold;
      b.hypothesis = from(10);
      b.equality_allowed = [](const Graph& g) { return is_star(g); };
      b.expected_equality = stars;
      b.equality_family = "star";
      break;
    case TheoremTag::T1_3i: {
      b.threshold = sqrt_threshold;
      b.hypothesis = from(16 * id.r * id.r);
      b.equality_allowed = [](const Graph& g) { return is_star(g); };
      b.expected_equality = stars;
      b.equality_family = "star";
      break;
    }
    case TheoremTag::T1_3ii:
      b.threshold = sqrt_threshold;
      b.hypothesis = from(9);
      b.equality_allowed = [](const Graph& g) {
        if (is_complete_bipartite(g)) return true;
        const auto p = snk_parameters(g);
        return p && (*p == std::pair{7, 3} || *p == std::pair{8, 2} || *p == std::pair{9, 1});
      };
      b.expected_equality = [](int m) {
        auto out = complete_bipartite_with(m);
        if (m == 9) {
          for (auto [n, k] : {std::pair{7, 3}, std::pair{8, 2}, std::pair{9, 1}}) {
            out.push_back(build_family(families::Snk{n, k}));
          }
        }
        return out;
      };
      b.equality_family = "complete bipartite, or S_7^3, S_8^2, S_9^1";
      break;
    case TheoremTag::T1_4_C5:
    case TheoremTag::T1_4_C6:
      b.threshold = [](int m) { return book_root(m); };
      b.hypothesis = from(id.tag == TheoremTag::T1_4_C5 ? 8 : 22);
      b.equality_allowed = [](const Graph& g) { return is_book(g); };
      b.expected_equality = [](int m) {
        std::vector<Graph> out;
        if (m % 2 == 1 && m >= 3) out.push_back(build_family(families::Book{(m - 1) / 2}));
        return out;
      };
      b.equality_family = "book S_{(m+3)/2,2}";
      break;
    case TheoremTag::CONJ6_2:
      b.threshold = sqrt_threshold;
      b.hypothesis = [](int) { return Hypothesis::Unknown; };
      b.equality_allowed = [](const Graph& g) { return is_complete_bipartite(g); };
      b.expected_equality = [](int) { return std::vector<Graph>{}; };
      b.equality_family = "complete bipartite";
      break;
    default:
      throw ArgumentError(to_string(id) + " is not an upper-bound statement");
  }
  return b;
}

enum class Verdict { Below, Equal, Above, UnexpectedEquality, Uncertified };

struct BoundEval {
  Verdict verdict = Verdict::Below;
  GraphFinding f;
};

BoundEval evaluate_bound(const BoundStatement& b, const Graph& g, const CanonicalForm& form, int m) {
  const SpectralCertificate cert = spectral_radius(g);
  const QuadraticRoot q = b.threshold(m);
  const ThresholdComparison cmp = compare_rho(g, cert, q);
  BoundEval out;
  if (cmp.order == Order::Less) return out;
  if (cmp.uncertified) {
    out.verdict = Verdict::Uncertified;
    out.f = finding(g, form, cmp.rho, cmp.threshold, "none: achieving component exceeds " +
                    std::to_string(kMaxCharPolyOrder) + " vertices", "within 1e-6 of the bound");
    return out;
  }
  if (cmp.order == Order::Greater) {
    out.verdict = Verdict::Above;
    out.f = finding(g, form, cmp.rho, cmp.threshold,
                    cmp.escalated ? "char_poly sign at the threshold is negative"
                                  : "float margin above 1e-6",
                    "spectral radius exceeds the bound");
    return out;
  }
  const bool allowed = b.equality_allowed(g);
  out.verdict = allowed ? Verdict::Equal : Verdict::UnexpectedEquality;
  out.f = finding(g, form, cmp.rho, cmp.threshold, certificate_for_equality(g, q),
                  allowed ? "" : "equality outside the family: " + b.equality_family);
  return out;
}

void fold_bound(MRecord& rec, BoundEval&& e) {
  ++rec.graphs_checked;
  switch (e.verdict) {
    case Verdict::Below:
      break;
    case Verdict::Equal:
      rec.equality_cases.push_back(std::move(e.f));
      break;
    case Verdict::Above:
    case Verdict::UnexpectedEquality:
      file_failure(rec, std::move(e.f));
      break;
    case Verdict::Uncertified:
      ++rec.counters["uncertified_near_bound"];
      rec.notes.push_back("uncertified near-equality at " + e.f.graph6);
      break;
  }
}

void check_expected_equalities(MRecord& rec, const BoundStatement& b) {
  std::set<std::string> seen;
  for (const auto& f : rec.equality_cases) seen.insert(f.graph6);
  for (const Graph& g : b.expected_equality(rec.m)) {
    if (!free_of_all(g, b.forbid)) continue;
    const std::string form = canonical_form(g);
    if (seen.count(form)) continue;
    GraphFinding f = finding(g, form, spectral_radius(g).rho, b.threshold(rec.m).value(), "",
                             "expected equality case missing from the enumeration");
    file_failure(rec, std::move(f));
  }
}

std::vector<EnumeratedGraph> enumerate_for(int m, const std::vector<Pattern>& forbid,
                                           bool connected_only, const VerifyOptions& opt) {
  EnumConstraints c;
  c.m = m;
  c.forbid = forbid;
  c.connected_only = connected_only;
  return enumerate_all(c, opt.threads);
}

template <typename Eval, typename Fn>
std::vector<Eval> map_graphs(const std::vector<EnumeratedGraph>& graphs, const VerifyOptions& opt,
                             Fn&& fn) {
  std::vector<Eval> out(graphs.size());
  parallel_for(graphs.size(), opt.threads, [&](std::size_t i) { out[i] = fn(graphs[i]); });
  return out;
}

MRecord bound_exhaustive(const BoundStatement& b, int m, const VerifyOptions& opt) {
  MRecord rec;
  rec.m = m;
  rec.hypothesis = b.hypothesis(m);
  const auto graphs = enumerate_for(m, b.forbid, false, opt);
  auto evals = map_graphs<BoundEval>(graphs, opt, [&](const EnumeratedGraph& e) {
    return evaluate_bound(b, e.graph, e.form, m);
  });
  for (auto& e : evals) fold_bound(rec, std::move(e));
  if (rec.hypothesis == Hypothesis::Inside) check_expected_equalities(rec, b);
  return rec;
}

MRecord bound_search(const TheoremId& id, const BoundStatement& b, int m, const VerifyOptions& opt) {
  MRecord rec;
  rec.m = m;
  rec.hypothesis = b.hypothesis(m);
  SearchConfig cfg;
  cfg.m = m;
  cfg.forbid = b.forbid;
  cfg.restarts = opt.restarts;
  cfg.max_steps = opt.max_steps;
  cfg.seed = opt.seed;
  cfg.threads = opt.threads;
  const SearchResult res = maximize_rho(cfg);
  rec.counters["restarts"] = cfg.restarts;
  rec.counters["fallback_starts"] = res.fallback_starts;
  if (!res.feasible) {
    rec.notes.push_back(res.note);
    return rec;
  }
  BoundEval e = evaluate_bound(b, res.best, res.best_form, m);
  rec.best = e.f.graph6.empty()
                 ? finding(res.best, res.best_form, res.cert.rho, b.threshold(m).value(), "", "")
                 : e.f;
  fold_bound(rec, std::move(e));
  if ((id.tag == TheoremTag::T1_4_C5 || id.tag == TheoremTag::T1_4_C6) && m % 2 == 1) {
    const Graph book = build_family(families::Book{(m - 1) / 2});
    if (free_of_all(book, b.forbid)) {
      const LocalMaxReport lm = local_max_check(book, b.forbid);
      rec.counters["book_strict_local_max"] = lm.strict ? 1 : 0;
      rec.counters["book_neighbours"] = lm.neighbours;
    }
  }
  return rec;
}

// ---- other statements ----------------------------------------------------

struct CycleEval {
  bool above = false;
  bool ok = true;
  GraphFinding f;
};

CycleEval evaluate_cycles(const Graph& g, const CanonicalForm& form, int m, int k) {
  CycleEval out;
  const SpectralCertificate cert = spectral_radius(g);
  const ThresholdComparison cmp = compare_rho(g, cert, cycles_root(m, k));
  if (cmp.order != Order::Greater) return out;
  out.above = true;
  std::string problem;
  try {
    const auto w = thm15_witness(g, k);
    if (!w) {
      problem = "no witness although rho exceeds the threshold";
    } else {
      for (int t = 3; t <= 2 * k + 2; ++t) {
        const auto it = w->cycles.find(t);
        if (it == w->cycles.end() || static_cast<int>(it->second.size()) != t ||
            !is_cycle_in(g, it->second)) {
          problem = "witness cycle of length " + std::to_string(t) + " invalid";
          break;
        }
      }
    }
  } catch (const ConsistencyError& e) {
    problem = e.what();
  }
  if (problem.empty()) {
    if (const auto miss = missing_cycle_length(g, 2 * k + 2)) {
      problem = "no cycle of length " + std::to_string(*miss);
    }
  }
  if (!problem.empty()) {
    out.ok = false;
    out.f = finding(g, form, cmp.rho, cmp.threshold, "", problem);
  }
  return out;
}

struct VertexEval {
  bool violation = false;
  bool equality = false;
  long checks = 0;
  GraphFinding f;
};

VertexEval evaluate_deletion(const Graph& g, const CanonicalForm& form) {
  VertexEval out;
  const bool complete = is_complete(g);
  const bool star = is_star(g);
  std::vector<int> equal_at;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) continue;
    ++out.checks;
    const DeletionBound d = deletion_bound_check(g, v);
    const bool structural = complete || (star && g.degree(v) == 1);
    if (!d.holds || d.equality != structural) {
      out.violation = true;
      out.f = finding(g, form, d.rho, d.bound, "",
                      !d.holds ? "deletion bound fails at vertex " + std::to_string(v)
                               : "equality flag disagrees with K_n / star-leaf at vertex " +
                                     std::to_string(v));
      return out;
    }
    if (d.equality) equal_at.push_back(v);
  }
  if (!equal_at.empty()) {
    out.equality = true;
    const DeletionBound d = deletion_bound_check(g, equal_at.front());
    out.f = finding(g, form, d.rho, d.bound, "tight within 1e-9",
                    "tight at " + std::to_string(equal_at.size()) + " vertices");
  }
  return out;
}

VertexEval evaluate_perron(const Graph& g, const CanonicalForm& form) {
  VertexEval out;
  out.checks = 1;
  const PerronBound p = perron_coordinate_bound_check(g);
  if (!p.holds) {
    out.violation = true;
    out.f = finding(g, form, p.max_coordinate, 1.0 / std::sqrt(2.0), "",
                    "max Perron coordinate exceeds 1/sqrt(2) at vertex " + std::to_string(p.argmax));
  } else if (p.equality) {
    out.equality = true;
    out.f = finding(g, form, p.max_coordinate, 1.0 / std::sqrt(2.0), "tight within 1e-9",
                    "vertex " + std::to_string(p.argmax));
  }
  return out;
}

void fold_vertex(MRecord& rec, VertexEval&& e, const std::string& counter) {
  ++rec.graphs_checked;
  rec.counters[counter] += e.checks;
  if (e.violation) {
    file_failure(rec, std::move(e.f));
  } else if (e.equality) {
    rec.equality_cases.push_back(std::move(e.f));
  }
}

Graph random_connected(std::mt19937_64& rng, int max_n) {
  const int n = std::uniform_int_distribution<int>(2, max_n)(rng);
  const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  for (int v = 1; v < n; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.push_back({u, v});
    used[u][v] = true;
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!used[u][v] && coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

std::vector<MRecord> random_property(const VerifyOptions& opt, bool deletion) {
  std::mt19937_64 rng(opt.seed);
  std::vector<EnumeratedGraph> graphs;
  graphs.reserve(static_cast<std::size_t>(opt.samples));
  for (long i = 0; i < opt.samples; ++i) {
    Graph g = random_connected(rng, opt.random_max_vertices);
    graphs.push_back({g, write_graph6(g)});
  }
  auto evals = map_graphs<VertexEval>(graphs, opt, [&](const EnumeratedGraph& e) {
    return deletion ? evaluate_deletion(e.graph, e.form) : evaluate_perron(e.graph, e.form);
  });
  std::map<int, MRecord> by_m;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const int m = graphs[i].graph.m();
    MRecord& rec = by_m[m];
    rec.m = m;
    fold_vertex(rec, std::move(evals[i]), deletion ? "vertex_checks" : "perron_checks");
  }
  std::vector<MRecord> out;
  for (auto& [m, rec] : by_m) out.push_back(std::move(rec));
  return out;
}

MRecord gap_family_record(int k, int t) {
  MRecord rec;
  const int m = 6 * k + t;
  rec.m = m;
  rec.subject = "H_{" + std::to_string(t) + ",0} R_" + std::to_string(k);
  rec.hypothesis = (k >= 1 && m >= 8) ? Hypothesis::Inside : Hypothesis::Outside;
  rec.graphs_checked = 1;
  const families::HtsRk spec{t, 0, k, {}};
  const Graph g = build_family(spec);
  const IntPoly f = family_rho_polynomial(spec);
  const QuadraticRoot q = book_root(m);
  const int sign = sign_at(f, q);
  const double root = family_rho_closed_form(spec);
  const double rho = spectral_radius(g).rho;
  const double threshold = q.value();
  const std::string form = canonical_form(g);
  GraphFinding best = finding(g, form, root, threshold,
                              "sign of the cubic at the threshold: " + std::to_string(sign),
                              "gap " + std::to_string(threshold - root));
  rec.best = best;
  std::string problem;
  if (std::fabs(rho - root) > kDecisionSlack) problem = "closed form disagrees with power iteration";
  if (sign <= 0 || threshold - root < 1e-10) problem = "largest root not below the threshold by 1e-10";
  if (!problem.empty()) {
    best.detail = problem;
    file_failure(rec, best);
  }
  return rec;
}

MRecord star_plus_edge_record(int m) {
  MRecord rec;
  rec.m = m;
  rec.subject = "S_m^1";
  rec.hypothesis = (m >= 4 && m <= 9) ? Hypothesis::Inside : Hypothesis::Outside;
  rec.graphs_checked = 1;
  const families::Snk spec{m, 1};
  const Graph g = build_family(spec);
  const int sign = sign_at(family_rho_polynomial(spec), sqrt_root(m));
  const SqrtCertificate sc = certify_rho_equals_sqrt(g);
  const std::string form = canonical_form(g);
  GraphFinding f = finding(g, form, sc.rho, sc.sqrt_m,
                           "sign of the cubic at sqrt(m): " + std::to_string(sign), "");
  rec.best = f;
  const bool above = sign < 0 && sc.rho > sc.sqrt_m;
  const bool equal = sign == 0 && sc.is_exact;
  if (m >= 4 && m <= 8) {
    if (above) {
      f.detail = "rho exceeds sqrt(m)";
      rec.boundary_findings.push_back(f);
    } else {
      f.detail = "expected rho > sqrt(m)";
      rec.violations.push_back(f);
    }
  } else if (m == 9) {
    if (equal) {
      f.certificate += "; char_poly vanishes at 3";
      rec.equality_cases.push_back(f);
    } else {
      f.detail = "expected rho = 3 exactly";
      rec.violations.push_back(f);
    }
  } else {
    rec.notes.push_back(above ? "rho exceeds sqrt(m)" : (equal ? "rho equals sqrt(m)" : "rho below sqrt(m)"));
  }
  return rec;
}

MRecord seven_edge_boundary_record() {
  MRecord rec;
  rec.m = 7;
  rec.subject = "H_{1,0} R_1";
  rec.hypothesis = Hypothesis::Outside;
  rec.graphs_checked = 1;
  const families::HtsRk spec{1, 0, 1, {}};
  const Graph g = build_family(spec);
  const IntPoly f = family_rho_polynomial(spec);
  const mpz_class at3 = f.eval(3);
  const SpectralCertificate cert = spectral_radius(g);
  const ThresholdComparison cmp = compare_rho(g, cert, book_root(7));
  const std::string form = canonical_form(g);
  GraphFinding gf = finding(g, form, cmp.rho, cmp.threshold,
                            "cubic at 3 equals " + at3.get_str(), "");
  rec.best = gf;
  const bool ok = g.m() == 7 && !contains(g, patterns::Cycle{5}) && at3 == -1 &&
                  cmp.order == Order::Greater;
  gf.detail = ok ? "C5-free with rho above (1+sqrt(4m-3))/2" : "expected a C5-free graph above the bound";
  if (ok) {
    rec.boundary_findings.push_back(gf);
  } else {
    rec.violations.push_back(gf);
  }
  return rec;
}

void require_exhaustive_cap(int m_hi, const VerifyOptions& opt) {
  if (m_hi > opt.exhaustive_cap) {
    const long est = known_class_count(m_hi);
    throw RefusedError("exhaustive run up to m = " + std::to_string(m_hi) + " exceeds the cap m <= " +
                           std::to_string(opt.exhaustive_cap) + " (about " +
                           (est < 0 ? std::string("unknown") : std::to_string(est)) +
                           " graphs before filtering)",
                       static_cast<double>(est));
  }
}

void require_range(int m_lo, int m_hi) {
  if (m_lo < 1 || m_lo > m_hi) throw ArgumentError("m range must satisfy 1 <= lo <= hi");
}

Report new_report(const std::string& kind, const TheoremId& id, Mode mode, int m_lo, int m_hi) {
  Report r;
  r.kind = kind;
  r.id = to_string(id);
  r.mode = mode;
  r.m_lo = m_lo;
  r.m_hi = m_hi;
  r.tool_version = SPEXM_VERSION;
  return r;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void unsupported_mode(const TheoremId& id, Mode mode) {
  throw ArgumentError(to_string(id) + " does not support mode " + to_string(mode));
}

}  // namespace

// ---- ids -----------------------------------------------------------------

void validate(const TheoremId& id) {
  switch (id.tag) {
    case TheoremTag::T1_1:
    case TheoremTag::T1_3i:
      if (id.r < 2) throw ArgumentError(short_name(id.tag) + " needs r >= 2");
      break;
    case TheoremTag::CONJ6_2:
      if (id.r < 1) throw ArgumentError("C6.2 needs r >= 1");
      break;
    case TheoremTag::T1_5:
    case TheoremTag::CONJ6_1:
      if (id.k < 1) throw ArgumentError(short_name(id.tag) + " needs k >= 1");
      break;
    case TheoremTag::L5_4:
      if (id.k < 1 || id.t < 0) throw ArgumentError("L5.4 needs k >= 1 and t >= 0");
      if (3 * id.k + 1 + id.t > Graph::kMaxVertices) throw ArgumentError("L5.4 graph too large");
      break;
    default:
      break;
  }
}

std::string short_name(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::T1_1: return "T1.1";
    case TheoremTag::T1_2: return "T1.2";
    case TheoremTag::T1_3i: return "T1.3i";
    case TheoremTag::T1_3ii: return "T1.3ii";
    case TheoremTag::T1_4_C5: return "T1.4C5";
    case TheoremTag::T1_4_C6: return "T1.4C6";
    case TheoremTag::T1_5: return "T1.5";
    case TheoremTag::L5_1: return "L5.1";
    case TheoremTag::L5_2: return "L5.2";
    case TheoremTag::L5_4: return "L5.4";
    case TheoremTag::R2_1: return "R2.1";
    case TheoremTag::R4_1: return "R4.1";
    case TheoremTag::CONJ6_1: return "C6.1";
    case TheoremTag::CONJ6_2: return "C6.2";
  }
  return "?";
}

std::string to_string(const TheoremId& id) {
  std::string s = short_name(id.tag);
  switch (id.tag) {
    case TheoremTag::T1_1:
    case TheoremTag::T1_3i:
    case TheoremTag::CONJ6_2:
      return s + "(r=" + std::to_string(id.r) + ")";
    case TheoremTag::T1_5:
    case TheoremTag::CONJ6_1:
      return s + "(k=" + std::to_string(id.k) + ")";
    case TheoremTag::L5_4:
      return s + "(k=" + std::to_string(id.k) + ",t=" + std::to_string(id.t) + ")";
    default:
      return s;
  }
}

TheoremTag parse_theorem_tag(std::string_view text) {
  static const std::vector<std::pair<std::string_view, TheoremTag>> kNames = {
      {"T1.1", TheoremTag::T1_1},       {"T1.2", TheoremTag::T1_2},
      {"T1.3i", TheoremTag::T1_3i},     {"T1.3ii", TheoremTag::T1_3ii},
      {"T1.4C5", TheoremTag::T1_4_C5},  {"T1.4C6", TheoremTag::T1_4_C6},
      {"T1.5", TheoremTag::T1_5},       {"L5.1", TheoremTag::L5_1},
      {"L5.2", TheoremTag::L5_2},       {"L5.4", TheoremTag::L5_4},
      {"R2.1", TheoremTag::R2_1},       {"R4.1", TheoremTag::R4_1},
      {"C6.1", TheoremTag::CONJ6_1},    {"C6.2", TheoremTag::CONJ6_2},
      {"6.1", TheoremTag::CONJ6_1},     {"6.2", TheoremTag::CONJ6_2},
  };
  for (const auto& [name, tag] : kNames) {
    if (name == text) return tag;
  }
  throw ArgumentError("unknown theorem id '" + std::string(text) + "'");
}

std::vector<Pattern> forbidden_patterns(const TheoremId& id) {
  switch (id.tag) {
    case TheoremTag::T1_1:
      return {patterns::Clique{id.r + 1}};
    case TheoremTag::T1_2:
      return {patterns::Cycle{4}};
    case TheoremTag::T1_3i:
      return {k2r(id.r)};
    case TheoremTag::T1_3ii:
      return {patterns::CtPlus{3}, patterns::CtPlus{4}};
    case TheoremTag::T1_4_C5:
      return {patterns::Cycle{5}};
    case TheoremTag::T1_4_C6:
      return {patterns::Cycle{6}};
    case TheoremTag::CONJ6_2:
      return {patterns::Book{id.r + 1}};
    default:
      return {};
  }
}

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Exhaustive: return "exhaustive";
    case Mode::Search: return "search";
    case Mode::Random: return "random";
    case Mode::Direct: return "direct";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  if (text == "exhaustive") return Mode::Exhaustive;
  if (text == "search") return Mode::Search;
  if (text == "random") return Mode::Random;
  if (text == "direct") return Mode::Direct;
  throw ArgumentError("unknown mode '" + std::string(text) + "'");
}

Mode default_mode(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::L5_4:
    case TheoremTag::R2_1:
    case TheoremTag::R4_1:
      return Mode::Direct;
    default:
      return Mode::Exhaustive;
  }
}

std::string to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::Inside: return "inside";
    case Hypothesis::Outside: return "outside";
    case Hypothesis::Unknown: return "unknown";
  }
  return "?";
}

// ---- reports -------------------------------------------------------------

long Report::graphs_checked() const {
  long n = 0;
  for (const auto& r : records) n += r.graphs_checked;
  return n;
}

long Report::violation_count() const {
  long n = 0;
  for (const auto& r : records) n += static_cast<long>(r.violations.size());
  return n;
}

long Report::counterexample_count() const {
  long n = 0;
  for (const auto& r : records) n += static_cast<long>(r.counterexamples.size());
  return n;
}

std::string Report::status() const {
  if (violation_count() > 0) return "FAIL";
  if (counterexample_count() > 0) return "COUNTEREXAMPLE";
  return "PASS";
}

// ---- checks --------------------------------------------------------------

Report check_theorem(const TheoremId& id, int m_lo, int m_hi, Mode mode, const VerifyOptions& opt) {
  validate(id);
  if (id.tag == TheoremTag::CONJ6_1 || id.tag == TheoremTag::CONJ6_2) {
    return scan_conjecture(id, m_lo, m_hi, mode, opt);
  }
  const auto t0 = Clock::now();
  Report rep = new_report("theorem", id, mode, m_lo, m_hi);
  switch (id.tag) {
    case TheoremTag::T1_1:
    case TheoremTag::T1_2:
    case TheoremTag::T1_3i:
    case TheoremTag::T1_3ii:
    case TheoremTag::T1_4_C5:
    case TheoremTag::T1_4_C6: {
      require_range(m_lo, m_hi);
      const BoundStatement b = bound_statement(id);
      if (mode == Mode::Exhaustive) {
        require_exhaustive_cap(m_hi, opt);
        for (int m = m_lo; m <= m_hi; ++m) rep.records.push_back(bound_exhaustive(b, m, opt));
      } else if (mode == Mode::Search) {
        for (int m = m_lo; m <= m_hi; ++m) rep.records.push_back(bound_search(id, b, m, opt));
      } else {
        unsupported_mode(id, mode);
      }
      for (const auto& rec : rep.records) {
        if (rec.hypothesis == Hypothesis::Outside) {
          rep.notes.push_back("m below the hypothesis is boundary exploration; exceedances there are findings, not violations");
          break;
        }
      }
      break;
    }
    case TheoremTag::T1_5: {
      if (mode != Mode::Exhaustive) unsupported_mode(id, mode);
      require_range(m_lo, m_hi);
      require_exhaustive_cap(m_hi, opt);
      for (int m = m_lo; m <= m_hi; ++m) {
        MRecord rec;
        rec.m = m;
        const auto graphs = enumerate_for(m, {}, false, opt);
        auto evals = map_graphs<CycleEval>(graphs, opt, [&](const EnumeratedGraph& e) {
          return evaluate_cycles(e.graph, e.form, m, id.k);
        });
        rec.counters["above_threshold"] = 0;
        rec.counters["witnesses_validated"] = 0;
        for (auto& e : evals) {
          ++rec.graphs_checked;
          if (!e.above) continue;
          ++rec.counters["above_threshold"];
          if (e.ok) {
            ++rec.counters["witnesses_validated"];
          } else {
            file_failure(rec, std::move(e.f));
          }
        }
        rep.records.push_back(std::move(rec));
      }
      break;
    }
    case TheoremTag::L5_1:
    case TheoremTag::L5_2: {
      const bool deletion = id.tag == TheoremTag::L5_1;
      const std::string counter = deletion ? "vertex_checks" : "perron_checks";
      if (mode == Mode::Random) {
        rep.records = random_property(opt, deletion);
        rep.m_lo = rep.records.empty() ? 0 : rep.records.front().m;
        rep.m_hi = rep.records.empty() ? 0 : rep.records.back().m;
        rep.notes.push_back("random connected graphs: " + std::to_string(opt.samples) +
                            " samples, 2.." + std::to_string(opt.random_max_vertices) +
                            " vertices, seed " + std::to_string(opt.seed));
      } else if (mode == Mode::Exhaustive) {
        require_range(m_lo, m_hi);
        require_exhaustive_cap(m_hi, opt);
        for (int m = m_lo; m <= m_hi; ++m) {
          MRecord rec;
          rec.m = m;
          const auto graphs = enumerate_for(m, {}, !deletion, opt);
          auto evals = map_graphs<VertexEval>(graphs, opt, [&](const EnumeratedGraph& e) {
            return deletion ? evaluate_deletion(e.graph, e.form) : evaluate_perron(e.graph, e.form);
          });
          for (auto& e : evals) fold_vertex(rec, std::move(e), counter);
          rep.records.push_back(std::move(rec));
        }
      } else {
        unsupported_mode(id, mode);
      }
      break;
    }
    case TheoremTag::L5_4:
      if (mode != Mode::Direct) unsupported_mode(id, mode);
      rep.records.push_back(gap_family_record(id.k, id.t));
      rep.m_lo = rep.m_hi = rep.records.front().m;
      break;
    case TheoremTag::R2_1:
      if (mode != Mode::Direct) unsupported_mode(id, mode);
      require_range(m_lo, m_hi);
      if (m_lo < 3 || m_hi > Graph::kMaxVertices) throw ArgumentError("R2.1 needs 3 <= m <= 64");
      for (int m = m_lo; m <= m_hi; ++m) {
        if (m > kMaxCharPolyOrder) throw ArgumentError("R2.1 needs m <= 24");
        rep.records.push_back(star_plus_edge_record(m));
      }
      break;
    case TheoremTag::R4_1:
      if (mode != Mode::Direct) unsupported_mode(id, mode);
      rep.records.push_back(seven_edge_boundary_record());
      rep.m_lo = rep.m_hi = 7;
      break;
    default:
      throw ArgumentError("unsupported theorem " + to_string(id));
  }
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

Report scan_conjecture(const TheoremId& id, int m_lo, int m_hi, Mode mode, const VerifyOptions& opt) {
  validate(id);
  require_range(m_lo, m_hi);
  const auto t0 = Clock::now();
  Report rep = new_report("conjecture", id, mode, m_lo, m_hi);
  rep.notes.push_back("the conjecture only claims sufficiently large m; small-m findings do not judge it");
  if (id.tag == TheoremTag::CONJ6_2) {
    const BoundStatement b = bound_statement(id);
    if (mode == Mode::Exhaustive) {
      require_exhaustive_cap(m_hi, opt);
      for (int m = m_lo; m <= m_hi; ++m) rep.records.push_back(bound_exhaustive(b, m, opt));
    } else if (mode == Mode::Search) {
      for (int m = m_lo; m <= m_hi; ++m) rep.records.push_back(bound_search(id, b, m, opt));
    } else {
      unsupported_mode(id, mode);
    }
  } else if (id.tag == TheoremTag::CONJ6_1) {
    if (mode != Mode::Exhaustive) unsupported_mode(id, mode);
    require_exhaustive_cap(m_hi, opt);
    const int k = id.k;
    for (int m = m_lo; m <= m_hi; ++m) {
      MRecord rec;
      rec.m = m;
      rec.hypothesis = Hypothesis::Unknown;
      const QuadraticRoot q = conj61_root(m, k);
      if (q.discriminant() < 0) {
        rec.notes.push_back("threshold undefined: 4m - k^2 + 1 < 0");
        rep.records.push_back(std::move(rec));
        continue;
      }
      std::string exception_form;
      const long twice = 2L * m + static_cast<long>(k) * (k + 1);
      if (twice % (2L * k) == 0) {
        const int n = static_cast<int>(twice / (2L * k));
        if (n >= k && n <= Graph::kMaxVertices) {
          exception_form = canonical_form(build_family(families::CompleteSplit{n, k}));
        }
        rec.notes.push_back("exception S_{" + std::to_string(n) + "," + std::to_string(k) + "} applies");
      } else {
        rec.notes.push_back("m/k + (k+1)/2 is not an integer; the exception is vacuous");
      }
      const auto graphs = enumerate_for(m, {}, false, opt);
      struct ConjEval {
        int kind = 0;  // 0 below, 1 pancyclic, 2 exception, 3 counterexample
        bool equal = false;
        GraphFinding f;
      };
      auto evals = map_graphs<ConjEval>(graphs, opt, [&](const EnumeratedGraph& e) {
        ConjEval out;
        const SpectralCertificate cert = spectral_radius(e.graph);
        const ThresholdComparison cmp = compare_rho(e.graph, cert, q);
        if (cmp.order == Order::Less) return out;
        out.equal = cmp.order == Order::Equal && !cmp.uncertified;
        const std::string certificate =
            out.equal ? certificate_for_equality(e.graph, q) : std::string();
        const auto miss = missing_cycle_length(e.graph, 2 * k + 2);
        if (!miss) {
          out.kind = 1;
        } else if (!exception_form.empty() && e.form == exception_form) {
          out.kind = 2;
        } else {
          out.kind = 3;
        }
        out.f = finding(e.graph, e.form, cmp.rho, cmp.threshold, certificate,
                        out.kind == 3 ? "no cycle of length " + std::to_string(*miss)
                                      : (out.kind == 2 ? "stated exception" : ""));
        return out;
      });
      rec.counters["at_or_above_threshold"] = 0;
      rec.counters["pancyclic"] = 0;
      rec.counters["exception"] = 0;
      for (auto& e : evals) {
        ++rec.graphs_checked;
        if (e.kind == 0) continue;
        ++rec.counters["at_or_above_threshold"];
        if (e.kind == 1) ++rec.counters["pancyclic"];
        if (e.kind == 2) ++rec.counters["exception"];
        if (e.kind == 3) {
          rec.counterexamples.push_back(e.f);
        } else if (e.equal) {
          rec.equality_cases.push_back(e.f);
        }
      }
      rep.records.push_back(std::move(rec));
    }
  } else {
    throw ArgumentError(to_string(id) + " is not a conjecture");
  }
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

// ---- witness -------------------------------------------------------------

namespace {

bool extend_path(const Graph& g, VertexMask allowed, int len, std::vector<int>& path) {
  if (static_cast<int>(path.size()) == len) return true;
  const int last = path.back();
  VertexMask used = 0;
  for (int v : path) used |= bit(v);
  for (VertexMask c = g.adj(last) & allowed & ~used; c; c &= c - 1) {
    path.push_back(std::countr_zero(c));
    if (extend_path(g, allowed, len, path)) return true;
    path.pop_back();
  }
  return false;
}

std::vector<int> path_of_order(const Graph& g, VertexMask s, int len) {
  for (VertexMask c = s; c; c &= c - 1) {
    std::vector<int> path{std::countr_zero(c)};
    if (extend_path(g, s, len, path)) return path;
  }
  return {};
}

}  // namespace

std::optional<Thm15Witness> thm15_witness(const Graph& g, int k) {
  if (k < 1) throw ArgumentError("thm15_witness needs k >= 1");
  const int m = g.m();
  if (m == 0) return std::nullopt;
  const SpectralCertificate cert = spectral_radius(g);
  if (compare_rho(g, cert, cycles_root(m, k)).order != Order::Greater) return std::nullopt;
  Thm15Witness w;
  const int n = g.n();
  w.f_column_sums.assign(n, 0.0);
  long best = 0;
  for (int j = 0; j < n; ++j) {
    long walks = 0;
    for_each_bit(g.adj(j), [&](int i) { walks += g.degree(i); });
    const long twice_f = 2 * walks - (2L * k - 1) * g.degree(j);
    w.f_column_sums[j] = static_cast<double>(twice_f) / 2.0;
    if (w.j_star == -1 || twice_f > best) {
      best = twice_f;
      w.j_star = j;
    }
  }
  if (best <= 2L * m) {
    throw ConsistencyError("spectral radius above the threshold but no column sum exceeds m");
  }
  const VertexMask nb = g.adj(w.j_star);
  w.neighbourhood_edges = edges_within(g, nb);
  if (2 * w.neighbourhood_edges <= (2L * k - 1) * g.degree(w.j_star)) {
    throw ConsistencyError("neighbourhood of the selected column is too sparse");
  }
  w.path = popcount(nb) <= kMaxLongestPathSet ? longest_path_in(g, nb)
                                              : path_of_order(g, nb, 2 * k + 1);
  if (static_cast<int>(w.path.size()) < 2 * k + 1) {
    throw ConsistencyError("neighbourhood has no path on 2k+1 vertices");
  }
  for (int t = 3; t <= 2 * k + 2; ++t) {
    std::vector<int> cycle{w.j_star};
    cycle.insert(cycle.end(), w.path.begin(), w.path.begin() + (t - 1));
    if (!is_cycle_in(g, cycle)) throw ConsistencyError("assembled cycle is invalid");
    w.cycles[t] = std::move(cycle);
  }
  return w;
}

// ---- boundary ------------------------------------------------------------

Report boundary_checks() {
  const auto t0 = Clock::now();
  Report rep;
  rep.kind = "boundary";
  rep.id = "boundary";
  rep.mode = Mode::Direct;
  rep.tool_version = SPEXM_VERSION;
  rep.m_lo = 4;
  rep.m_hi = 40;
  for (int m = 4; m <= 9; ++m) rep.records.push_back(star_plus_edge_record(m));
  rep.records.push_back(seven_edge_boundary_record());
  for (int k = 1; 6 * k <= 40; ++k) {
    for (int t = 0; 6 * k + t <= 40; ++t) {
      if (6 * k + t >= 8) rep.records.push_back(gap_family_record(k, t));
    }
  }
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

// ---- audit ---------------------------------------------------------------

std::vector<AuditResult> extremal_structure_audit(const Graph& g_star,
                                                  const std::vector<Pattern>& forbid) {
  bool two_connected = !forbid.empty();
  bool c4_free = true;
  for (const auto& p : forbid) {
    const Graph pg = pattern_graph(p);
    if (pg.n() < 3 || !is_connected(pg) || cut_vertices(pg) != 0) two_connected = false;
    if (contains(pg, patterns::Cycle{4})) c4_free = false;
  }
  const Graph g = g_star.drop_isolated();
  std::vector<AuditResult> out;

  AuditResult connected{"connected", two_connected, true, ""};
  const auto comps = components(g);
  if (comps.size() > 1) {
    connected.pass = false;
    connected.witness = std::to_string(comps.size()) + " components";
  }
  out.push_back(connected);

  AuditResult cuts{"cut vertices only at an extremal vertex", two_connected, true, ""};
  if (g.n() >= 1) {
    const auto cert = spectral_radius(g);
    const double xmax = *std::max_element(cert.perron.begin(), cert.perron.end());
    VertexMask extremal = 0;
    for (int v = 0; v < g.n(); ++v) {
      if (cert.perron[v] >= xmax - kDecisionSlack) extremal |= bit(v);
    }
    const VertexMask bad = cut_vertices(g) & ~extremal;
    if (bad) {
      cuts.pass = false;
      cuts.witness = "cut vertex " + std::to_string(std::countr_zero(bad));
    }
  }
  out.push_back(cuts);

  AuditResult twins{"non-adjacent degree-two vertices share neighbourhoods", two_connected && c4_free,
                    true, ""};
  for (int u = 0; u < g.n() && twins.pass; ++u) {
    if (g.degree(u) != 2) continue;
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.degree(v) == 2 && !g.has_edge(u, v) && g.adj(u) != g.adj(v)) {
        twins.pass = false;
        twins.witness = "vertices " + std::to_string(u) + " and " + std::to_string(v);
        break;
      }
    }
  }
  out.push_back(twins);
  return out;
}

}  // namespace spexm
