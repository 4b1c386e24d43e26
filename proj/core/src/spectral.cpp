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

#include "spexm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spexm/errors.hpp"

namespace spexm {

namespace {

struct ComponentResult {
  double rho = 0.0;
  std::vector<double> x;
  double residual = 0.0;
  long iterations = 0;
};

ComponentResult power_iterate(const Graph& g, const std::vector<int>& verts, double tol) {
  const int k = static_cast<int>(verts.size());
  ComponentResult out;
  if (k == 1) {
    out.x = {1.0};
    return out;
  }
  std::vector<int> local(g.n(), -1);
  for (int i = 0; i < k; ++i) local[verts[i]] = i;
  std::vector<std::vector<int>> nbrs(k);
  for (int i = 0; i < k; ++i) {
    for_each_bit(g.adj(verts[i]), [&](int w) { nbrs[i].push_back(local[w]); });
  }

  std::vector<double> x(k, 1.0 / std::sqrt(static_cast<double>(k)));
  std::vector<double> ax(k);
  double best_res = std::numeric_limits<double>::infinity();
  double best_rho = 0.0;
  std::vector<double> best_x = x;
  for (long it = 0;; ++it) {
    double rho = 0.0;
    for (int i = 0; i < k; ++i) {
      double s = 0.0;
      for (int w : nbrs[i]) s += x[w];
      ax[i] = s;
      rho += x[i] * s;
    }
    double res = 0.0;
    for (int i = 0; i < k; ++i) res = std::max(res, std::fabs(ax[i] - rho * x[i]));
    if (res < best_res) {
      best_res = res;
      best_rho = rho;
      best_x = x;
    }
    if (res <= tol) {
      out.rho = rho;
      out.x = std::move(x);
      out.residual = res;
      out.iterations = it;
      return out;
    }
    if (it >= kMaxPowerIterations) {
      std::vector<double> padded(g.n(), 0.0);
      for (int i = 0; i < k; ++i) padded[verts[i]] = best_x[i];
      throw ConvergenceError("power iteration did not reach tolerance", best_rho, best_res,
                             std::move(padded));
    }
    double norm = 0.0;
    for (int i = 0; i < k; ++i) {
      x[i] += ax[i];
      norm += x[i] * x[i];
    }
    norm = std::sqrt(norm);
    for (double& v : x) v /= norm;
  }
}

long double eval_ld(const IntPoly& p, long double x) {
  long double acc = 0.0L;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeffs[i].get_d();
  return acc;
}

}  // namespace

SpectralCertificate spectral_radius(const Graph& g, double tol) {
  if (g.n() < 1) throw ArgumentError("spectral_radius needs at least one vertex");
  if (!(tol > 0.0)) throw ArgumentError("spectral_radius tolerance must be positive");
  SpectralCertificate cert;
  cert.perron.assign(g.n(), 0.0);
  const auto comps = components(g);
  int best = -1;
  ComponentResult best_result;
  long total_iterations = 0;
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    auto verts = mask_to_vertices(comps[c]);
    ComponentResult r = power_iterate(g, verts, tol);
    total_iterations += r.iterations;
    if (best == -1 || r.rho > best_result.rho) {
      best = c;
      best_result = std::move(r);
    }
  }
  const auto verts = mask_to_vertices(comps[best]);
  for (std::size_t i = 0; i < verts.size(); ++i) cert.perron[verts[i]] = best_result.x[i];
  cert.rho = best_result.rho;
  cert.residual = best_result.residual;
  cert.iterations = total_iterations;
  cert.component = best;
  cert.component_mask = comps[best];
  return cert;
}

QuadraticRemainder certify_quadratic_eigenfactor(const Graph& g, long p, long q) {
  return remainder_mod_quadratic(char_poly(g), p, q);
}

SqrtCertificate certify_rho_equals_sqrt(const Graph& g) {
  const CharPoly poly = char_poly(g);
  SqrtCertificate out;
  out.sign = sign_at(poly, sqrt_root(g.m()));
  out.rho = spectral_radius(g).rho;
  out.sqrt_m = std::sqrt(static_cast<double>(g.m()));
  out.is_exact = out.sign == 0 && std::fabs(out.rho - out.sqrt_m) <= kDecisionSlack;
  return out;
}

IntPoly family_rho_polynomial(const FamilySpec& spec) {
  using namespace families;
  if (const auto* s = std::get_if<Star>(&spec)) return make_poly({-static_cast<long>(s->m), 0, 1});
  if (const auto* s = std::get_if<Snk>(&spec)) {
    const long n = s->n;
    const long k = s->k;
    return make_poly({n - 1 - 2 * k, -(n - 1), -1, 1});
  }
  if (const auto* s = std::get_if<CompleteSplit>(&spec)) {
    const long n = s->n;
    const long k = s->k;
    return make_poly({-k * (n - k), -(k - 1), 1});
  }
  if (const auto* s = std::get_if<Book>(&spec)) {
    return family_rho_polynomial(CompleteSplit{s->r + 2, 2});
  }
  if (const auto* s = std::get_if<families::CompleteBipartite>(&spec)) {
    return make_poly({-static_cast<long>(s->s) * s->t, 0, 1});
  }
  if (const auto* s = std::get_if<HtsRk>(&spec)) {
    if (s->s == 0 && s->edges.empty()) {
      const long t = s->t;
      const long k = s->k;
      return make_poly({2 * t, -(3 * k + t), -2, 1});
    }
  }
  throw ArgumentError("no closed form for " + to_string(spec) +
                      "; supported: star, S:n:k, split:n:k, book:r, K:s:t, H:t:0:k");
}

double family_rho_closed_form(const FamilySpec& spec) {
  const IntPoly p = family_rho_polynomial(spec);
  const Graph g = build_family(spec);
  return largest_root(p, static_cast<double>(std::max(g.n(), 1)));
}

double largest_root(const IntPoly& p, double hi) {
  if (eval_ld(p, hi) <= 0.0L) throw ConsistencyError("largest_root: polynomial not positive at bracket end");
  const long double step = static_cast<long double>(hi) / 65536.0L;
  long double x = hi;
  while (x > 0.0L && eval_ld(p, x) > 0.0L) x -= step;
  if (x < 0.0L) x = 0.0L;
  long double lo = x;
  long double up = std::min<long double>(x + step, hi);
  if (eval_ld(p, lo) > 0.0L) throw ConsistencyError("largest_root: no root in bracket");
  while (up - lo > 1e-13L) {
    const long double mid = (lo + up) / 2.0L;
    if (eval_ld(p, mid) > 0.0L) {
      up = mid;
    } else {
      lo = mid;
    }
  }
  return static_cast<double>((lo + up) / 2.0L);
}

DeletionBound deletion_bound_check(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw ArgumentError("deletion_bound_check: vertex out of range");
  const int d = g.degree(v);
  if (d == 0) throw PreconditionError("deletion_bound_check: vertex " + std::to_string(v) + " is isolated");
  DeletionBound out;
  out.rho = spectral_radius(g).rho;
  out.rho_without_v = spectral_radius(g.without_vertex(v)).rho;
  out.bound = std::sqrt(out.rho_without_v * out.rho_without_v + 2.0 * d - 1.0);
  out.holds = out.rho <= out.bound + kDecisionSlack;
  out.equality = std::fabs(out.rho - out.bound) <= kDecisionSlack;
  return out;
}

PerronBound perron_coordinate_bound_check(const Graph& g) {
  if (g.n() < 2 || !is_connected(g)) {
    throw PreconditionError("perron_coordinate_bound_check needs a connected graph on >= 2 vertices");
  }
  const auto cert = spectral_radius(g);
  PerronBound out;
  const auto it = std::max_element(cert.perron.begin(), cert.perron.end());
  out.argmax = static_cast<int>(it - cert.perron.begin());
  out.max_coordinate = *it;
  const double limit = 1.0 / std::sqrt(2.0);
  out.holds = out.max_coordinate <= limit + kDecisionSlack;
  out.equality = std::fabs(out.max_coordinate - limit) <= kDecisionSlack;
  return out;
}

std::string to_string(Order o) {
  switch (o) {
    case Order::Less:
      return "less";
    case Order::Equal:
      return "equal";
    case Order::Greater:
      return "greater";
  }
  return "?";
}

ThresholdComparison compare_rho(const Graph& g, const SpectralCertificate& cert,
                                const QuadraticRoot& threshold) {
  ThresholdComparison out;
  out.rho = cert.rho;
  out.threshold = threshold.value();
  const double diff = out.rho - out.threshold;
  if (std::fabs(diff) > kEscalationBand) {
    out.order = diff > 0 ? Order::Greater : Order::Less;
    return out;
  }
  out.escalated = true;
  if (popcount(cert.component_mask) > kMaxCharPolyOrder) {
    out.uncertified = true;
    if (std::fabs(diff) <= kDecisionSlack) {
      out.order = Order::Equal;
    } else {
      out.order = diff > 0 ? Order::Greater : Order::Less;
    }
    return out;
  }
  // rho is the simple largest root of the component's characteristic
  // polynomial, so the sign at the threshold locates it.
  const int s = sign_at(char_poly(g.induced(cert.component_mask)), threshold);
  out.order = s == 0 ? Order::Equal : (s < 0 ? Order::Greater : Order::Less);
  return out;
}

}  // namespace spexm
