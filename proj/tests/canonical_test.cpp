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

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spexm/canonical.hpp"
#include "spexm/family.hpp"
#include "spexm/graph6.hpp"

namespace spexm {
namespace {

using namespace families;

TEST(Canonical, CycleUnderEveryLabeling) {
  const Graph c4 = build_family(Cycle{4});
  const CanonicalForm form = canonical_form(c4);
  std::vector<int> order = {0, 1, 2, 3};
  do {
    EXPECT_EQ(canonical_form(c4.relabeled(order)), form);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(Canonical, PathAndClawDiffer) {
  EXPECT_NE(canonical_form(build_family(Path{4})), canonical_form(build_family(Star{3})));
}

TEST(Canonical, MatchesPermutationOracleOnAllGraphsUpToSixVertices) {
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::map<std::string, std::string> oracle_to_form;
    std::set<std::string> forms;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = oracle::graph_from_pair_mask(n, mask);
      const std::string key = oracle::permutation_canonical(g);
      const CanonicalForm form = canonical_form(g);
      auto [it, fresh] = oracle_to_form.emplace(key, form);
      ASSERT_EQ(it->second, form) << to_string(g);
      forms.insert(form);
    }
    EXPECT_EQ(forms.size(), oracle_to_form.size()) << "n=" << n;
  }
}

TEST(Canonical, MatchesPermutationOrbitsOnSevenVertices) {
  constexpr int n = 7;
  constexpr int pairs = 21;
  int index[n][n];
  int p = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) index[u][v] = index[v][u] = p++;
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> image(pairs);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) image[index[u][v]] = index[perm[u]][perm[v]];
    }
    perms.push_back(image);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<bool> seen(std::size_t{1} << pairs, false);
  std::set<std::string> forms;
  std::mt19937_64 rng(59);
  long classes = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    if (seen[mask]) continue;
    ++classes;
    std::vector<std::uint64_t> orbit;
    for (const auto& image : perms) {
      std::uint64_t out = 0;
      for (int b = 0; b < pairs; ++b) {
        if ((mask >> b) & 1U) out |= std::uint64_t{1} << image[b];
      }
      if (!seen[out]) {
        seen[out] = true;
        orbit.push_back(out);
      }
    }
    const CanonicalForm form = canonical_form(oracle::graph_from_pair_mask(n, mask));
    for (int s = 0; s < 8; ++s) {
      const auto pick = orbit[std::uniform_int_distribution<std::size_t>(0, orbit.size() - 1)(rng)];
      ASSERT_EQ(canonical_form(oracle::graph_from_pair_mask(n, pick)), form);
    }
    forms.insert(form);
  }
  EXPECT_EQ(classes, 1044);
  EXPECT_EQ(static_cast<long>(forms.size()), classes);
}

TEST(Canonical, LabelingProducesFormAndAutomorphisms) {
  std::mt19937_64 rng(61);
  std::vector<Graph> graphs = {build_family(CompleteBipartite{3, 4}), build_family(Book{5}),
                               build_family(Snk{9, 2}), parse_graph6("IheA@GUAo")};
  for (int i = 0; i < 60; ++i) graphs.push_back(oracle::random_graph(rng, 3 + i % 30, 0.3));
  for (const auto& g : graphs) {
    const auto lab = canonical_labeling(g);
    EXPECT_EQ(write_graph6(g.relabeled(lab.order)), lab.form);
    for (const auto& gen : lab.generators) {
      ASSERT_EQ(static_cast<int>(gen.size()), g.n());
      for (const auto& e : g.edges()) ASSERT_TRUE(g.has_edge(gen[e.u], gen[e.v]));
    }
  }
}

TEST(Canonical, PetersenOrbitIsTransitive) {
  const auto lab = canonical_labeling(parse_graph6("IheA@GUAo"));
  const auto orbits = vertex_orbits(10, lab.generators);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(orbits[v], 0);
}

TEST(Canonical, InvariantUnderRandomRelabelingOfLargerGraphs) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 10 + trial % 50;
    const Graph g = oracle::random_graph(rng, n, trial % 3 == 0 ? 0.5 : 0.1);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const Graph h = g.relabeled(order);
    ASSERT_EQ(canonical_form(g), canonical_form(h));
    ASSERT_TRUE(isomorphic(g, h));
  }
}

TEST(Canonical, RegularNonIsomorphicPairsDiffer) {
  // Two 3-regular graphs on 6 vertices: the prism and K_{3,3}.
  const Graph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_FALSE(isomorphic(prism, build_family(CompleteBipartite{3, 3})));
  // C_8 against two disjoint C_4.
  const Graph two_c4(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  EXPECT_FALSE(isomorphic(two_c4, build_family(Cycle{8})));
}

}  // namespace
}  // namespace spexm
