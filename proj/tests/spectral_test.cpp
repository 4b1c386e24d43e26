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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spexm/charpoly.hpp"
#include "spexm/errors.hpp"
#include "spexm/family.hpp"
#include "spexm/search.hpp"
#include "spexm/spectral.hpp"

namespace spexm {
namespace {

using namespace families;

IntPoly from_longs(const std::vector<long long>& c) {
  IntPoly p;
  for (long long x : c) p.coeffs.emplace_back(static_cast<long>(x));
  return p;
}

TEST(CharPoly, SmallGraphs) {
  EXPECT_EQ(char_poly(build_family(Complete{2})), make_poly({-1, 0, 1}));
  EXPECT_EQ(char_poly(build_family(Complete{3})), make_poly({-2, -3, 0, 1}));
  EXPECT_EQ(char_poly(build_family(Cycle{5})), make_poly({-2, 5, 0, -5, 0, 1}));
  EXPECT_EQ(to_string(char_poly(build_family(Cycle{5}))), "x^5 - 5x^3 + 5x - 2");
}

TEST(CharPoly, SporadicStarWithOneEdgeFactorsThroughThree) {
  const CharPoly p = char_poly(build_family(Snk{9, 1}));
  const auto [q, r] = divide_monic(p, make_poly({-3, 1}));
  EXPECT_EQ(r, make_poly({0}));
  const auto [q2, r2] = divide_monic(q, make_poly({-2, 2, 1}));
  EXPECT_EQ(r2, make_poly({0}));
}

TEST(CharPoly, MatchesPrincipalMinorOracle) {
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = oracle::graph_from_pair_mask(n, mask);
      ASSERT_EQ(char_poly(g), from_longs(oracle::principal_minor_char_poly(g))) << to_string(g);
    }
  }
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(rng, 6 + trial % 5, 0.4);
    ASSERT_EQ(char_poly(g), from_longs(oracle::principal_minor_char_poly(g))) << to_string(g);
  }
}

TEST(CharPoly, TraceAndEdgeCoefficients) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 23, 0.3);
    const CharPoly p = char_poly(g);
    ASSERT_EQ(p.degree(), g.n());
    EXPECT_EQ(p.coeffs[g.n()], 1);
    EXPECT_EQ(p.coeffs[g.n() - 1], 0);
    EXPECT_EQ(p.coeffs[g.n() - 2], -g.m());
  }
}

TEST(CharPoly, SizeGuard) {
  EXPECT_NO_THROW(char_poly(Graph(24)));
  EXPECT_THROW(char_poly(Graph(25)), SizeLimitError);
}

TEST(CharPoly, QuadraticRemainders) {
  EXPECT_TRUE(certify_quadratic_eigenfactor(build_family(CompleteSplit{6, 2}), 1, 8).is_zero());
  EXPECT_TRUE(certify_quadratic_eigenfactor(build_family(Star{4}), 0, 4).is_zero());
  const auto r = certify_quadratic_eigenfactor(build_family(Cycle{5}), 1, 1);
  EXPECT_FALSE(r.is_zero());
  EXPECT_EQ(r.c1, 0);
  EXPECT_EQ(r.c0, -4);
}

TEST(CharPoly, SignAtQuadraticRoot) {
  // x^3 - x^2 - 3x + 1 at 2 is -1.
  EXPECT_EQ(sign_at(make_poly({1, -3, -1, 1}), sqrt_root(4)), -1);
  EXPECT_EQ(sign_at(make_poly({-9, 0, 1}), sqrt_root(9)), 0);
  EXPECT_EQ(sign_at(make_poly({-2, 0, 1}), sqrt_root(2)), 0);
  EXPECT_EQ(sign_at(make_poly({-8, -1, 1}), QuadraticRoot{1, -1, -8}), 0);
  EXPECT_EQ(sign_at(make_poly({0, 1}), QuadraticRoot{1, 0, -3}), 1);
  EXPECT_EQ(sign_at(make_poly({-2, 1}), QuadraticRoot{1, 0, -3}), -1);
}

TEST(SignAt, AgreesWithFloatingEvaluationAwayFromZero) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> coef(-20, 20);
  for (int trial = 0; trial < 2000; ++trial) {
    IntPoly p;
    const int deg = 1 + trial % 5;
    for (int i = 0; i <= deg; ++i) p.coeffs.emplace_back(coef(rng));
    p.coeffs.back() = 1;
    const QuadraticRoot q{1 + trial % 3, coef(rng), -std::abs(coef(rng)) - 1};
    const double x = q.value();
    double v = 0;
    for (int i = deg; i >= 0; --i) v = v * x + p.coeffs[i].get_d();
    if (std::abs(v) < 1e-6) continue;
    ASSERT_EQ(sign_at(p, q), v > 0 ? 1 : -1) << to_string(p) << " at " << x;
  }
}

TEST(Spectral, NamedGraphs) {
  for (int m = 1; m <= 30; ++m) {
    EXPECT_NEAR(spectral_radius(build_family(Star{m})).rho, std::sqrt(m), 1e-12);
  }
  for (int s = 1; s <= 6; ++s) {
    for (int t = s; t <= 6; ++t) {
      EXPECT_NEAR(spectral_radius(build_family(CompleteBipartite{s, t})).rho, std::sqrt(s * t), 1e-12);
    }
  }
  EXPECT_NEAR(spectral_radius(build_family(Snk{7, 3})).rho, 3.0, 1e-12);
  EXPECT_NEAR(spectral_radius(build_family(CompleteSplit{7, 2})).rho, 3.701562118716424, 1e-12);
}

TEST(Spectral, MatchesDenseEigensolver) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 40;
    const Graph g = oracle::random_graph(rng, n, trial % 2 ? 0.1 : 0.4);
    const auto cert = spectral_radius(g);
    ASSERT_NEAR(cert.rho, oracle::dense_rho(g), 1e-9) << to_string(g);
  }
}

TEST(Spectral, CertificateContract) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 30, 0.15);
    const auto cert = spectral_radius(g);
    EXPECT_LE(cert.residual, kDefaultTolerance);
    EXPECT_LE(g.min_degree(), cert.rho + 1e-12);
    EXPECT_LE(cert.rho, g.max_degree() + 1e-12);
    EXPECT_LE(cert.rho, std::sqrt(2.0 * g.m()) + 1e-12);
    ASSERT_EQ(static_cast<int>(cert.perron.size()), g.n());
    double norm = 0;
    for (int v = 0; v < g.n(); ++v) {
      const bool inside = (cert.component_mask >> v) & 1U;
      if (inside) {
        EXPECT_GT(cert.perron[v], 0.0);
      } else {
        EXPECT_EQ(cert.perron[v], 0.0);
      }
      norm += cert.perron[v] * cert.perron[v];
      double ax = 0;
      for_each_bit(g.adj(v), [&](int w) { ax += cert.perron[w]; });
      EXPECT_LE(std::abs(ax - cert.rho * cert.perron[v]), cert.residual + 1e-15);
    }
    EXPECT_NEAR(norm, 1.0, 1e-12);
  }
}

TEST(Spectral, TwoStepWalkIdentity) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 3 + trial % 20, 0.2);
    const auto cert = spectral_radius(g);
    const auto& x = cert.perron;
    for (int u = 0; u < g.n(); ++u) {
      double walks = 0;
      for (int v = 0; v < g.n(); ++v) {
        walks += popcount(g.adj(u) & g.adj(v)) * x[v];
      }
      EXPECT_LE(std::abs(cert.rho * cert.rho * x[u] - walks), g.n() * kDefaultTolerance);
    }
  }
}

TEST(Spectral, AddingAnEdgeToAConnectedGraphIncreasesRho) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 3 + trial % 15, 0.1);
    const double rho = spectral_radius(g).rho;
    for (int u = 0; u < g.n(); ++u) {
      for (int v = u + 1; v < g.n(); ++v) {
        if (g.has_edge(u, v)) continue;
        EXPECT_GT(spectral_radius(g.with_edge(u, v)).rho, rho + 1e-12);
      }
    }
  }
}

TEST(Spectral, VertexShiftTowardLargerPerronEntryIncreasesRho) {
  std::mt19937_64 rng(53);
  int shifts = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 4 + trial % 12, 0.15);
    const auto cert = spectral_radius(g);
    for (int u = 0; u < g.n(); ++u) {
      for (int v = 0; v < g.n(); ++v) {
        if (u == v || cert.perron[u] < cert.perron[v]) continue;
        const VertexMask moved = g.adj(v) & ~g.adj(u) & ~bit(u);
        if (moved == 0) continue;
        const Graph h = vertex_shift(g, v, u);
        ASSERT_EQ(h.m(), g.m());
        EXPECT_GT(spectral_radius(h).rho, cert.rho + 1e-12) << to_string(g) << " " << v << "->" << u;
        ++shifts;
      }
    }
  }
  EXPECT_GT(shifts, 1000);
}

TEST(Spectral, SqrtCertification) {
  for (int s = 1; s <= 5; ++s) {
    for (int t = s; t <= 5; ++t) {
      EXPECT_TRUE(certify_rho_equals_sqrt(build_family(CompleteBipartite{s, t})).is_exact);
    }
  }
  EXPECT_TRUE(certify_rho_equals_sqrt(build_family(Snk{8, 2})).is_exact);
  const auto s10 = certify_rho_equals_sqrt(build_family(Snk{10, 1}));
  EXPECT_FALSE(s10.is_exact);
  EXPECT_GT(s10.sign, 0);
  EXPECT_LT(s10.rho, std::sqrt(10.0));
}

TEST(Spectral, CompareWithThreshold) {
  const Graph star = build_family(Star{9});
  const auto eq = compare_rho(star, spectral_radius(star), sqrt_root(9));
  EXPECT_EQ(eq.order, Order::Equal);
  EXPECT_TRUE(eq.escalated);
  const Graph s51 = build_family(Snk{5, 1});
  EXPECT_EQ(compare_rho(s51, spectral_radius(s51), sqrt_root(5)).order, Order::Greater);
  const Graph c6 = build_family(Cycle{6});
  const auto lt = compare_rho(c6, spectral_radius(c6), sqrt_root(6));
  EXPECT_EQ(lt.order, Order::Less);
  EXPECT_FALSE(lt.escalated);
}

TEST(ClosedForm, NamedValues) {
  EXPECT_NEAR(family_rho_closed_form(Snk{5, 1}), 2.342923082777170, 1e-12);
  EXPECT_GT(family_rho_closed_form(Snk{5, 1}), std::sqrt(5.0));
  const double h = family_rho_closed_form(HtsRk{1, 0, 1, {}});
  EXPECT_NEAR(h, 3.086130197651496, 1e-12);
  EXPECT_GT(h, 3.0);
  for (int r = 1; r <= 15; ++r) {
    const int m = 2 * r + 1;
    EXPECT_NEAR(family_rho_closed_form(Book{r}), (1 + std::sqrt(4.0 * m - 3)) / 2, 1e-12);
  }
  EXPECT_THROW(family_rho_closed_form(Cycle{5}), ArgumentError);
}

TEST(ClosedForm, AgreesWithPowerIteration) {
  std::vector<FamilySpec> specs;
  for (int m = 1; m <= 39; ++m) specs.push_back(Star{m});
  for (int n = 3; n <= 40; ++n) {
    for (int k = 0; 2 * k <= n - 1; ++k) specs.push_back(Snk{n, k});
    specs.push_back(CompleteSplit{n, 2});
  }
  for (int s = 1; s <= 20; ++s) {
    for (int t = s; s + t <= 40; ++t) specs.push_back(CompleteBipartite{s, t});
  }
  for (int r = 1; r <= 38; ++r) specs.push_back(Book{r});
  for (int k = 1; k <= 13; ++k) {
    for (int t = 0; 3 * k + 1 + t <= 40; ++t) specs.push_back(HtsRk{t, 0, k, {}});
  }
  for (const auto& spec : specs) {
    ASSERT_NEAR(spectral_radius(build_family(spec)).rho, family_rho_closed_form(spec), 1e-9)
        << to_string(spec);
  }
}

TEST(DeletionBound, EqualityCases) {
  const Graph k5 = build_family(Complete{5});
  for (int v = 0; v < 5; ++v) {
    const auto r = deletion_bound_check(k5, v);
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.equality);
    EXPECT_NEAR(r.rho, r.bound, 1e-9);
  }
  const Graph s6 = build_family(Star{6});
  const auto leaf = deletion_bound_check(s6, 1);
  EXPECT_TRUE(leaf.equality);
  EXPECT_NEAR(leaf.rho, leaf.bound, 1e-9);
  EXPECT_FALSE(deletion_bound_check(s6, 0).equality);
  const auto c6 = deletion_bound_check(build_family(Cycle{6}), 0);
  EXPECT_TRUE(c6.holds);
  EXPECT_FALSE(c6.equality);
  EXPECT_NEAR(c6.bound, std::sqrt(6.0), 1e-9);
  EXPECT_THROW(deletion_bound_check(Graph(3, {{0, 1}}), 2), PreconditionError);
}

TEST(PerronBound, Examples) {
  const auto k2 = perron_coordinate_bound_check(build_family(Complete{2}));
  EXPECT_TRUE(k2.holds);
  EXPECT_TRUE(k2.equality);
  const auto s8 = perron_coordinate_bound_check(build_family(Star{8}));
  EXPECT_NEAR(s8.max_coordinate, 1 / std::sqrt(2.0), 1e-12);
  EXPECT_EQ(s8.argmax, 0);
  const auto k5 = perron_coordinate_bound_check(build_family(Complete{5}));
  EXPECT_NEAR(k5.max_coordinate, 1 / std::sqrt(5.0), 1e-12);
  EXPECT_FALSE(k5.equality);
  EXPECT_THROW(perron_coordinate_bound_check(Graph(4, {{0, 1}, {2, 3}})), PreconditionError);
}

}  // namespace
}  // namespace spexm
