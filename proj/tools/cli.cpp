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

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spexm/canonical.hpp"
#include "spexm/charpoly.hpp"
#include "spexm/enumerate.hpp"
#include "spexm/errors.hpp"
#include "spexm/family.hpp"
#include "spexm/graph6.hpp"
#include "spexm/parallel.hpp"
#include "spexm/pattern.hpp"
#include "spexm/search.hpp"
#include "spexm/spectral.hpp"
#include "spexm/verify.hpp"

namespace spexm::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Globals {
  double tol = kDefaultTolerance;
  int threads = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string format;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fixed15(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(15) << x;
  return os.str();
}

std::string format_or(const Globals& g, const std::string& fallback,
                      std::initializer_list<const char*> allowed) {
  const std::string f = g.format.empty() ? fallback : g.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw UsageError("--format " + f + " is not available here (choose " + list + ")");
}

std::pair<int, int> parse_m_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int m = std::stoi(text);
      return {m, m};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad --m range '" + text + "' (expected N or LO..HI)");
  }
}

std::vector<Pattern> parse_patterns(const std::vector<std::string>& texts) {
  std::vector<Pattern> out;
  for (const auto& t : texts) out.push_back(parse_pattern(t));
  return out;
}

std::vector<std::string> read_graph6_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

std::string compare_word(Order o) {
  switch (o) {
    case Order::Less: return "<";
    case Order::Equal: return "=";
    case Order::Greater: return ">";
  }
  return "?";
}

// ---- subcommands ---------------------------------------------------------

struct FamilyArgs {
  std::string spec;
  bool rho = false;
};

int run_family(const FamilyArgs& a, const Globals& gl, std::ostream& out) {
  const std::string fmt = format_or(gl, "text", {"text", "json", "g6"});
  const FamilySpec spec = parse_family(a.spec);
  const Graph g = build_family(spec);
  const std::string g6 = write_graph6(g);
  if (fmt == "g6" || (fmt == "text" && !a.rho)) {
    out << g6 << '\n';
    return kExitOk;
  }
  const SpectralCertificate cert = spectral_radius(g, gl.tol);
  const ThresholdComparison cmp = compare_rho(g, cert, sqrt_root(g.m()));
  std::string closed_poly;
  double closed = NAN;
  try {
    closed_poly = to_string(family_rho_polynomial(spec));
    closed = family_rho_closed_form(spec);
  } catch (const ArgumentError&) {
    closed_poly.clear();
  }
  const bool exact_known = !cmp.uncertified && (cmp.escalated || cmp.order != Order::Equal);
  if (fmt == "json") {
    ordered_json j;
    j["spec"] = to_string(spec);
    j["graph6"] = g6;
    j["n"] = g.n();
    j["m"] = g.m();
    j["rho"] = cert.rho;
    j["residual"] = cert.residual;
    j["versus_sqrt_m"] = to_string(cmp.order);
    j["exact"] = exact_known;
    if (!closed_poly.empty()) {
      j["closed_form"] = closed;
      j["closed_form_polynomial"] = closed_poly;
    }
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << fixed15(cert.rho) << '\n';
  if (cmp.order == Order::Equal && cmp.escalated && !cmp.uncertified) {
    out << "exact: rho = sqrt(" << g.m() << "), char_poly vanishes at sqrt(" << g.m() << ")\n";
  } else if (cmp.escalated && !cmp.uncertified) {
    out << "exact: rho " << compare_word(cmp.order) << " sqrt(" << g.m()
        << ") by the sign of char_poly at sqrt(" << g.m() << ")\n";
  } else {
    out << "float: rho " << compare_word(cmp.order) << " sqrt(" << g.m() << ") = "
        << fixed15(std::sqrt(static_cast<double>(g.m()))) << '\n';
  }
  if (!closed_poly.empty()) {
    out << "closed form: " << fixed15(closed) << " (largest root of " << closed_poly << ")\n";
  }
  return kExitOk;
}

struct RhoArgs {
  std::vector<std::string> g6;
  bool perron = false;
};

std::string sci15(double x) {
  std::ostringstream os;
  os << std::setprecision(15) << x;
  return os.str();
}

int run_rho(const RhoArgs& a, const Globals& gl, std::istream& in, std::ostream& out) {
  const std::string fmt = format_or(gl, "text", {"text", "json", "csv"});
  const std::vector<std::string> codes = a.g6.empty() ? read_graph6_lines(in) : a.g6;
  if (fmt == "csv") out << "graph6,rho,residual,iterations\n";
  for (const auto& code : codes) {
    const Graph g = parse_graph6(code);
    const SpectralCertificate cert = spectral_radius(g, gl.tol);
    if (fmt == "text") {
      out << fixed15(cert.rho) << " residual=" << sci15(cert.residual) << '\n';
      if (a.perron) {
        out << "perron:";
        for (double x : cert.perron) out << ' ' << fixed15(x);
        out << '\n';
      }
    } else if (fmt == "csv") {
      out << write_graph6(g) << ',' << fixed15(cert.rho) << ',' << sci15(cert.residual) << ','
          << cert.iterations << '\n';
    } else {
      ordered_json j;
      j["graph6"] = write_graph6(g);
      j["rho"] = cert.rho;
      j["residual"] = cert.residual;
      j["iterations"] = cert.iterations;
      j["component"] = cert.component;
      if (a.perron) j["perron"] = cert.perron;
      out << j.dump() << '\n';
    }
  }
  return kExitOk;
}

struct CertifyArgs {
  std::string g6;
  std::optional<long> p;
  std::optional<long> q;
};

int run_certify(const CertifyArgs& a, const Globals& gl, std::ostream& out) {
  const std::string fmt = format_or(gl, "text", {"text", "json"});
  if (a.p.has_value() != a.q.has_value()) throw UsageError("--p and --q must be given together");
  const Graph g = parse_graph6(a.g6);
  const CharPoly poly = char_poly(g);
  const SqrtCertificate sc = certify_rho_equals_sqrt(g);
  std::optional<QuadraticRemainder> rem;
  if (a.p) rem = remainder_mod_quadratic(poly, *a.p, *a.q);
  if (fmt == "json") {
    ordered_json j;
    j["graph6"] = write_graph6(g);
    j["char_poly"] = to_string(poly);
    j["rho"] = sc.rho;
    j["sqrt_m_exact"] = sc.is_exact;
    j["char_poly_sign_at_sqrt_m"] = sc.sign;
    if (rem) {
      j["quadratic"] = {*a.p, *a.q};
      j["remainder"] = {rem->c1.get_str(), rem->c0.get_str()};
      j["divides"] = rem->is_zero();
    }
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "char_poly: " << to_string(poly) << '\n';
  out << "rho: " << fixed15(sc.rho) << '\n';
  if (sc.is_exact) {
    out << "exact: rho = sqrt(" << g.m() << ")\n";
  } else {
    out << "not equal to sqrt(" << g.m() << "): char_poly sign at sqrt(m) is " << sc.sign << '\n';
  }
  if (rem) {
    out << "remainder mod x^2 - (" << *a.p << ")x - (" << *a.q << "): (" << rem->c1.get_str() << ", "
        << rem->c0.get_str() << ")" << (rem->is_zero() ? " divides" : "") << '\n';
  }
  return kExitOk;
}

struct EnumArgs {
  int edges = 0;
  std::vector<std::string> forbid;
  bool connected = false;
  bool allow_isolated = false;
  int max_vertices = 0;
  bool count_only = false;
};

int run_enum(const EnumArgs& a, const Globals& gl, std::ostream& out) {
  const std::string fmt = format_or(gl, "g6", {"g6", "text", "json"});
  EnumConstraints c;
  c.m = a.edges;
  c.forbid = parse_patterns(a.forbid);
  c.connected_only = a.connected;
  c.no_isolated = !a.allow_isolated;
  c.max_vertices = a.max_vertices;
  const auto graphs = enumerate_all(c, gl.threads);
  if (fmt == "json") {
    ordered_json j;
    j["m"] = c.m;
    j["count"] = graphs.size();
    if (!a.count_only) {
      ordered_json arr = ordered_json::array();
      for (const auto& e : graphs) arr.push_back(e.form);
      j["graphs"] = arr;
    }
    out << j.dump() << '\n';
  } else if (a.count_only) {
    out << graphs.size() << '\n';
  } else {
    for (const auto& e : graphs) out << e.form << '\n';
  }
  return kExitOk;
}

struct SearchArgs {
  int edges = 0;
  std::vector<std::string> forbid;
  int restarts = 10;
  int max_steps = 10'000;
  bool no_rotation = false;
  bool no_shift = false;
};

int run_search(const SearchArgs& a, const Globals& gl, std::ostream& out) {
  const std::string fmt = format_or(gl, "text", {"text", "json", "g6"});
  SearchConfig cfg;
  cfg.m = a.edges;
  cfg.forbid = parse_patterns(a.forbid);
  cfg.restarts = a.restarts;
  cfg.max_steps = a.max_steps;
  cfg.seed = gl.seed;
  cfg.edge_rotation = !a.no_rotation;
  cfg.vertex_shift = !a.no_shift;
  cfg.threads = gl.threads;
  const SearchResult res = maximize_rho(cfg);
  ordered_json j;
  j["feasible"] = res.feasible;
  if (res.feasible) {
    j["graph6"] = res.best_form;
    j["family"] = recognize_family(res.best);
    j["rho"] = res.cert.rho;
    j["best_restart"] = res.best_restart;
  } else {
    j["note"] = res.note;
  }
  j["fallback_starts"] = res.fallback_starts;
  ordered_json trace = ordered_json::array();
  for (const auto& t : res.trace) trace.push_back({t.restart, t.step, t.rho});
  j["trace"] = trace;
  if (fmt == "g6") {
    if (res.feasible) out << res.best_form << '\n';
  } else if (fmt == "text") {
    if (res.feasible) out << res.best_form << '\n';
    out << j.dump() << '\n';
  } else {
    out << j.dump() << '\n';
  }
  return res.feasible ? kExitOk : kExitFailure;
}

struct VerifyArgs {
  std::string theorem;
  std::string m;
  std::string mode;
  bool boundary = false;
  int r = 2;
  int k = 1;
  int t = 0;
  int cap = kDefaultExhaustiveCap;
  int restarts = 100;
  int max_steps = 10'000;
  long samples = 10'000;
};

int emit_report(const Report& rep, const std::string& fmt, std::ostream& out) {
  if (fmt == "json") {
    out << to_jsonl(rep);
  } else if (fmt == "csv") {
    out << to_csv(rep);
  } else {
    out << to_text(rep);
  }
  return rep.pass() ? kExitOk : kExitViolations;
}

VerifyOptions options_from(const VerifyArgs& a, const Globals& gl) {
  VerifyOptions opt;
  opt.threads = gl.threads;
  opt.seed = gl.seed;
  opt.exhaustive_cap = a.cap;
  opt.restarts = a.restarts;
  opt.max_steps = a.max_steps;
  opt.samples = a.samples;
  return opt;
}

int run_verify(const VerifyArgs& a, const Globals& gl, std::ostream& out) {
  const std::string fmt = format_or(gl, "json", {"json", "text", "csv"});
  if (a.boundary) return emit_report(boundary_checks(), fmt, out);
  if (a.theorem.empty()) throw UsageError("verify needs --theorem or --boundary");
  TheoremId id;
  id.tag = parse_theorem_tag(a.theorem);
  id.r = a.r;
  id.k = a.k;
  id.t = a.t;
  const Mode mode = a.mode.empty() ? default_mode(id.tag) : parse_mode(a.mode);
  int lo = 0;
  int hi = 0;
  if (!a.m.empty()) {
    std::tie(lo, hi) = parse_m_range(a.m);
  } else if (id.tag == TheoremTag::R2_1) {
    lo = 4;
    hi = 9;
  } else if (mode == Mode::Exhaustive || mode == Mode::Search) {
    throw UsageError("--m is required for " + to_string(mode) + " mode");
  }
  return emit_report(check_theorem(id, lo, hi, mode, options_from(a, gl)), fmt, out);
}

struct ScanArgs {
  std::string conjecture;
  std::string m;
  std::string mode;
  int r = 1;
  int k = 1;
  int cap = kDefaultExhaustiveCap;
  int restarts = 100;
  int max_steps = 10'000;
};

int run_scan(const ScanArgs& a, const Globals& gl, std::ostream& out) {
  const std::string fmt = format_or(gl, "json", {"json", "text", "csv"});
  TheoremId id;
  id.tag = parse_theorem_tag(a.conjecture);
  if (id.tag != TheoremTag::CONJ6_1 && id.tag != TheoremTag::CONJ6_2) {
    throw UsageError("--conjecture must be 6.1 or 6.2");
  }
  id.r = a.r;
  id.k = a.k;
  const auto [lo, hi] = parse_m_range(a.m);
  VerifyArgs va;
  va.cap = a.cap;
  va.restarts = a.restarts;
  va.max_steps = a.max_steps;
  const Mode mode = a.mode.empty() ? Mode::Exhaustive : parse_mode(a.mode);
  return emit_report(scan_conjecture(id, lo, hi, mode, options_from(va, gl)), fmt, out);
}

struct WitnessArgs {
  std::string g6;
  int k = 1;
};

int run_witness(const WitnessArgs& a, const Globals& gl, std::ostream& out) {
  const std::string fmt = format_or(gl, "text", {"text", "json"});
  const Graph g = parse_graph6(a.g6);
  const auto w = thm15_witness(g, a.k);
  if (fmt == "json") {
    ordered_json j;
    j["graph6"] = write_graph6(g);
    j["k"] = a.k;
    if (!w) {
      j["witness"] = nullptr;
    } else {
      ordered_json wj;
      wj["j_star"] = w->j_star;
      wj["f_column_sums"] = w->f_column_sums;
      wj["neighbourhood_edges"] = w->neighbourhood_edges;
      wj["path"] = w->path;
      ordered_json cycles = ordered_json::object();
      for (const auto& [t, c] : w->cycles) cycles[std::to_string(t)] = c;
      wj["cycles"] = cycles;
      j["witness"] = wj;
    }
    out << j.dump() << '\n';
    return kExitOk;
  }
  if (!w) {
    out << "none: rho does not exceed the threshold\n";
    return kExitOk;
  }
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
  };
  out << "j* = " << w->j_star << " (column sum " << w->f_column_sums[w->j_star] << ", e(N(j*)) = "
      << w->neighbourhood_edges << ")\n";
  out << "path: " << join(w->path) << '\n';
  for (const auto& [t, c] : w->cycles) out << "C" << t << ": " << join(c) << '\n';
  return kExitOk;
}

struct AuditArgs {
  std::string g6;
  std::vector<std::string> forbid;
};

int run_audit(const AuditArgs& a, const Globals& gl, std::ostream& out) {
  const std::string fmt = format_or(gl, "text", {"text", "json"});
  const Graph g = parse_graph6(a.g6);
  const auto results = extremal_structure_audit(g, parse_patterns(a.forbid));
  bool ok = true;
  ordered_json arr = ordered_json::array();
  for (const auto& r : results) {
    if (r.applicable && !r.pass) ok = false;
    if (fmt == "json") {
      arr.push_back({{"clause", r.clause}, {"applicable", r.applicable}, {"pass", r.pass},
                     {"witness", r.witness}});
    } else {
      out << r.clause << ": " << (!r.applicable ? "n/a" : (r.pass ? "pass" : "FAIL"));
      if (!r.witness.empty()) out << " (" << r.witness << ")";
      out << '\n';
    }
  }
  if (fmt == "json") out << arr.dump() << '\n';
  return ok ? kExitOk : kExitViolations;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral extremal checks for graphs with a fixed number of edges"};
  app.name("spexm");
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", SPEXM_VERSION);

  Globals gl;
  app.add_option("--tol", gl.tol, "Power-iteration residual tolerance")->default_val(kDefaultTolerance);
  app.add_option("--threads", gl.threads, "Worker threads, 0 = all cores")->default_val(0);
  app.add_option("--seed", gl.seed, "Seed for search restarts and random corpora")->default_val(0);
  app.add_option("--out", gl.out, "Write output to this file (reports are appended)");
  app.add_option("--format", gl.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "g6", "text"}));

  FamilyArgs fa;
  auto* family = app.add_subcommand(
      "family", "Build a named graph: star, S_n^k, complete split, K_{s,t}, book, R_k and friends");
  family->add_option("--spec", fa.spec, "Family, e.g. S:7:3, book:4, K:3:3, H:1:0:1")->required();
  family->add_flag("--rho", fa.rho, "Print the spectral radius and its exact comparison with sqrt(m)");

  RhoArgs ra;
  auto* rho = app.add_subcommand("rho", "Spectral radius by shifted power iteration (graph6 on stdin if no --g6)");
  rho->add_option("--g6", ra.g6, "graph6 code(s)");
  rho->add_flag("--perron", ra.perron, "Also print the Perron vector");

  CertifyArgs ca;
  auto* certify = app.add_subcommand(
      "certify", "Exact characteristic polynomial; decides rho = sqrt(m) and quadratic eigenfactors");
  certify->add_option("--g6", ca.g6, "graph6 code")->required();
  certify->add_option("--p", ca.p, "Divisor x^2 - p x - q: p");
  certify->add_option("--q", ca.q, "Divisor x^2 - p x - q: q");

  EnumArgs ea;
  auto* en = app.add_subcommand(
      "enum", "One graph per isomorphism class with m edges and no isolated vertices, sorted graph6");
  en->add_option("--edges", ea.edges, "Edge count m")->required();
  en->add_option("--forbid", ea.forbid, "Forbidden subgraph: C5, C4+, K2,4, K4, B3, P7, g6:CODE");
  en->add_flag("--connected", ea.connected, "Connected graphs only");
  en->add_flag("--allow-isolated", ea.allow_isolated, "Pad every graph with isolated vertices to the cap");
  en->add_option("--max-vertices", ea.max_vertices, "Vertex cap (default 2m)");
  en->add_flag("--count", ea.count_only, "Print the class count only");

  SearchArgs sa;
  auto* search = app.add_subcommand(
      "search", "Hill climbing for the largest spectral radius over F-free graphs with m edges");
  search->add_option("--edges", sa.edges, "Edge count m")->required();
  search->add_option("--forbid", sa.forbid, "Forbidden subgraph(s)");
  search->add_option("--restarts", sa.restarts, "Seeded restarts")->default_val(10);
  search->add_option("--max-steps", sa.max_steps, "Improving moves per restart")->default_val(10'000);
  search->add_flag("--no-rotation", sa.no_rotation, "Disable edge-rotation moves");
  search->add_flag("--no-shift", sa.no_shift, "Disable vertex-shift moves");

  VerifyArgs va;
  auto* verify = app.add_subcommand(
      "verify",
      "Check a spectral statement over graphs with m edges. Ids: T1.1 (K_{r+1}-free, rho <= "
      "sqrt(2m(1-1/r))), T1.2 (C4-free, m >= 10, rho <= sqrt m, star), T1.3i (K_{2,r+1}-free, "
      "m >= 16r^2), T1.3ii ({C3+,C4+}-free, m >= 9), T1.4C5 / T1.4C6 (C5-free m >= 8, C6-free "
      "m >= 22, rho <= (1+sqrt(4m-3))/2, book), T1.5 (rho above (k-1/2+sqrt(4m+(k-1/2)^2))/2 forces "
      "C_t for t <= 2k+2), L5.1 (vertex deletion bound), L5.2 (Perron entry <= 1/sqrt 2), L5.4 "
      "(H_{t,0} R_k below the book), R2.1 (S_m^1 above sqrt m for m <= 8), R4.1 (m = 7 boundary)");
  verify->add_option("--theorem", va.theorem, "Statement id");
  verify->add_option("--m", va.m, "Edge count or range LO..HI");
  verify->add_option("--mode", va.mode, "exhaustive | search | random | direct");
  verify->add_flag("--boundary", va.boundary, "Run every boundary sign check");
  verify->add_option("--r", va.r, "Parameter r")->default_val(2);
  verify->add_option("--k", va.k, "Parameter k")->default_val(1);
  verify->add_option("--t", va.t, "Parameter t")->default_val(0);
  verify->add_option("--cap", va.cap, "Largest m allowed in exhaustive mode")->default_val(kDefaultExhaustiveCap);
  verify->add_option("--restarts", va.restarts, "Search restarts per m")->default_val(100);
  verify->add_option("--max-steps", va.max_steps, "Search steps per restart")->default_val(10'000);
  verify->add_option("--samples", va.samples, "Random-mode graph count")->default_val(10'000);

  ScanArgs sc;
  auto* scan = app.add_subcommand(
      "scan",
      "Counterexample scan. 6.1: rho >= (k-1+sqrt(4m-k^2+1))/2 forces C_t for t <= 2k+2 unless "
      "G is S_{m/k+(k+1)/2,k}. 6.2: B_{r+1}-free implies rho <= sqrt m, equality only at complete "
      "bipartite graphs");
  scan->add_option("--conjecture", sc.conjecture, "6.1 or 6.2")->required();
  scan->add_option("--m", sc.m, "Edge count or range LO..HI")->required();
  scan->add_option("--mode", sc.mode, "exhaustive | search");
  scan->add_option("--r", sc.r, "Parameter r")->default_val(1);
  scan->add_option("--k", sc.k, "Parameter k")->default_val(1);
  scan->add_option("--cap", sc.cap, "Largest m allowed in exhaustive mode")->default_val(kDefaultExhaustiveCap);
  scan->add_option("--restarts", sc.restarts, "Search restarts per m")->default_val(100);
  scan->add_option("--max-steps", sc.max_steps, "Search steps per restart")->default_val(10'000);

  WitnessArgs wa;
  auto* witness = app.add_subcommand(
      "witness", "Cycles C_3..C_{2k+2} through the vertex with the largest column sum of A^2 - (k-1/2)A");
  witness->add_option("--g6", wa.g6, "graph6 code")->required();
  witness->add_option("--k", wa.k, "Parameter k")->default_val(1);

  AuditArgs aa;
  auto* audit = app.add_subcommand(
      "audit", "Structure of an extremal graph: connected, cut vertices only at the max Perron entry, "
               "degree-two twins");
  audit->add_option("--g6", aa.g6, "graph6 code")->required();
  audit->add_option("--forbid", aa.forbid, "Forbidden subgraph(s)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << SPEXM_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  if (gl.threads <= 0) gl.threads = default_threads();
  const bool append = verify->parsed() || scan->parsed();
  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (family->parsed()) code = run_family(fa, gl, buffer);
    if (rho->parsed()) code = run_rho(ra, gl, in, buffer);
    if (certify->parsed()) code = run_certify(ca, gl, buffer);
    if (en->parsed()) code = run_enum(ea, gl, buffer);
    if (search->parsed()) code = run_search(sa, gl, buffer);
    if (verify->parsed()) code = run_verify(va, gl, buffer);
    if (scan->parsed()) code = run_scan(sc, gl, buffer);
    if (witness->parsed()) code = run_witness(wa, gl, buffer);
    if (audit->parsed()) code = run_audit(aa, gl, buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RefusedError& e) {
    err << "refused: " << e.what() << '\n';
    return kExitRefused;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FamilyDomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Graph6Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedPatternError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  if (gl.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(gl.out, append ? std::ios::app : std::ios::trunc);
    if (!file) {
      err << "error: cannot open " << gl.out << '\n';
      return kExitFailure;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace spexm::cli
