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

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spexm/enumerate.hpp"
#include "spexm/errors.hpp"
#include "spexm/family.hpp"
#include "spexm/graph6.hpp"
#include "spexm/pattern.hpp"

namespace spexm {
namespace {

namespace fam = families;
namespace pat = patterns;

TEST(Pattern, SmallCases) {
  const Graph k4 = build_family(fam::Complete{4});
  EXPECT_TRUE(contains(k4, pat::Cycle{3}));
  EXPECT_FALSE(contains(k4, pat::Cycle{5}));
  for (int m = 1; m <= 20; ++m) EXPECT_FALSE(contains(build_family(fam::Star{m}), k2r(1)));
  const Graph s91 = build_family(fam::Snk{9, 1});
  EXPECT_FALSE(contains(s91, pat::CtPlus{3}));
  EXPECT_FALSE(contains(s91, pat::CtPlus{4}));
  EXPECT_TRUE(contains(build_family(fam::Book{2}), pat::Book{2}));
  EXPECT_FALSE(contains(build_family(fam::Cycle{5}), pat::Book{1}));
}

TEST(Pattern, FreeOfAll) {
  for (int m = 9; m <= 31; m += 2) {
    const Graph book = build_family(fam::CompleteSplit{(m + 3) / 2, 2});
    EXPECT_TRUE(free_of_all(book, {pat::Cycle{5}, pat::Cycle{6}})) << m;
  }
  EXPECT_FALSE(free_of_all(build_family(fam::Complete{4}), {pat::Cycle{3}}));
  EXPECT_TRUE(free_of_all(build_family(fam::Cycle{6}), {pat::CtPlus{3}, pat::CtPlus{4}}));
}

TEST(Pattern, MissingCycleLength) {
  EXPECT_EQ(missing_cycle_length(build_family(fam::Complete{5}), 5), std::nullopt);
  EXPECT_EQ(missing_cycle_length(build_family(fam::CompleteBipartite{3, 3}), 4), 3);
  EXPECT_EQ(missing_cycle_length(build_family(fam::Book{3}), 6), 5);
}

TEST(Pattern, LongestPath) {
  const Graph k4 = build_family(fam::Complete{4});
  EXPECT_EQ(longest_path_in(k4, bit(0) | bit(1) | bit(2)).size(), 3U);
  EXPECT_EQ(longest_path_in(k4, k4.vertex_mask()), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_THROW(longest_path_in(Graph(40), low_mask(33)), SizeLimitError);
}

TEST(Pattern, LongestPathMeetsErdosGallaiBound) {
  for (int n = 1; n <= 7; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = oracle::graph_from_pair_mask(n, mask);
      const auto path = longest_path_in(g, g.vertex_mask());
      ASSERT_FALSE(path.empty());
      for (std::size_t i = 1; i < path.size(); ++i) ASSERT_TRUE(g.has_edge(path[i - 1], path[i]));
      for (int k = 1; 2 * k + 1 <= n; ++k) {
        if (2 * g.m() > (2 * k - 1) * n) {
          ASSERT_GE(static_cast<int>(path.size()), 2 * k + 1) << to_string(g);
        }
      }
    }
  }
}

TEST(Pattern, ParseRoundTrip) {
  for (const char* text : {"C5", "C4+", "K2,4", "B3", "K4", "P7", "g6:Bw"}) {
    EXPECT_EQ(to_string(parse_pattern(text)), text);
  }
  EXPECT_THROW(parse_pattern("C2"), ArgumentError);
  EXPECT_THROW(parse_pattern("X9"), ArgumentError);
}

TEST(Pattern, ExplicitAboveEightVerticesIsUnsupported) {
  EXPECT_THROW(contains(Graph(3), pat::Explicit{build_family(fam::Path{9})}), UnsupportedPatternError);
}

std::vector<Pattern> fast_path_patterns() {
  return {pat::Cycle{3},  pat::Cycle{4},  pat::Cycle{5},  pat::Cycle{6},
          pat::CtPlus{3}, pat::CtPlus{4}, pat::CtPlus{5}, pat::CompleteBipartite{2, 2},
          pat::CompleteBipartite{2, 3},   pat::CompleteBipartite{1, 3},
          pat::Book{1},   pat::Book{2},   pat::Book{3},   pat::Clique{3},
          pat::Clique{4}, pat::PathVertices{4},           pat::PathVertices{6}};
}

TEST(Pattern, FastPathsAgreeWithGenericSearchOnAllSmallGraphs) {
  const auto ps = fast_path_patterns();
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = oracle::graph_from_pair_mask(n, mask);
      for (const auto& p : ps) {
        ASSERT_EQ(contains(g, p), contains_subgraph(g, pattern_graph(p)))
            << to_string(g) << " " << to_string(p);
      }
    }
  }
}

TEST(Pattern, FastPathsAgreeWithInjectiveMapOracle) {
  const auto ps = fast_path_patterns();
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 7 + trial % 2;
    const Graph g = oracle::random_graph(rng, n, 0.15 + 0.1 * (trial % 5));
    for (const auto& p : ps) {
      const bool expected = oracle::brute_contains(g, pattern_graph(p));
      ASSERT_EQ(contains(g, p), expected) << to_string(g) << " " << to_string(p);
      ASSERT_EQ(contains_subgraph(g, pattern_graph(p)), expected);
    }
  }
}

TEST(Pattern, CycleSearchMatchesCycleEnumeration) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 6;
    const Graph g = oracle::random_graph(rng, n, 0.3);
    const auto lengths = oracle::cycle_lengths(g);
    for (int t = 3; t <= n + 1; ++t) {
      ASSERT_EQ(has_cycle_of_length(g, t), lengths.count(t) == 1) << to_string(g) << " t=" << t;
      const auto cyc = find_cycle_of_length(g, t);
      ASSERT_EQ(cyc.has_value(), lengths.count(t) == 1);
      if (cyc) {
        EXPECT_EQ(static_cast<int>(cyc->size()), t);
        EXPECT_TRUE(is_cycle_in(g, *cyc));
      }
    }
  }
}

TEST(Pattern, ContainmentIsMonotone) {
  std::mt19937_64 rng(19);
  const auto ps = fast_path_patterns();
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(rng, 8, 0.2);
    std::vector<bool> before;
    for (const auto& p : ps) before.push_back(contains(g, p));
    for (int u = 0; u < g.n(); ++u) {
      for (int v = u + 1; v < g.n(); ++v) {
        if (g.has_edge(u, v)) continue;
        const Graph h = g.with_edge(u, v);
        for (std::size_t i = 0; i < ps.size(); ++i) {
          if (before[i]) ASSERT_TRUE(contains(h, ps[i]));
        }
      }
    }
  }
}

TEST(Pattern, NoCycleLongerThanOrder) {
  for (int n = 3; n <= 10; ++n) {
    const Graph kn = build_family(fam::Complete{n});
    EXPECT_TRUE(contains(kn, pat::Cycle{n}));
    for (int t = n + 1; t <= n + 3; ++t) EXPECT_FALSE(contains(kn, pat::Cycle{t}));
  }
}

TEST(Pattern, TriangleFreeOrC4FreeImpliesCtPlusFree) {
  for (int m = 1; m <= 9; ++m) {
    EnumConstraints c;
    c.m = m;
    for (const auto& e : enumerate_all(c)) {
      const Graph& g = e.graph;
      if (!contains(g, pat::Cycle{3}) || !contains(g, pat::Cycle{4})) {
        ASSERT_TRUE(free_of_all(g, {pat::CtPlus{3}, pat::CtPlus{4}})) << e.form;
      }
    }
  }
}

}  // namespace
}  // namespace spexm
