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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spexm/graph.hpp"

namespace spexm {

namespace patterns {

struct Cycle {
  int t;
};
struct CtPlus {
  int t;
};
/// K_{s,t}; K_{2,r+1} is CompleteBipartite{2, r + 1}.
struct CompleteBipartite {
  int s;
  int t;
};
struct Book {
  int r;
};
struct Clique {
  int r;
};
struct PathVertices {
  int v;
};
/// Arbitrary pattern with at most 8 vertices and no isolated vertex.
struct Explicit {
  Graph graph;
};

}  // namespace patterns

using Pattern = std::variant<patterns::Cycle, patterns::CtPlus, patterns::CompleteBipartite,
                             patterns::Book, patterns::Clique, patterns::PathVertices,
                             patterns::Explicit>;

inline constexpr int kMaxExplicitPatternVertices = 8;

inline Pattern k2r(int r) { return patterns::CompleteBipartite{2, r + 1}; }

/// Checks the domain invariants (t >= 3 for cycles, r >= 1 for books, ...).
void validate(const Pattern& p);

/// Grammar (whitespace not allowed):
///   C<t>        cycle of length t              "C5"
///   C<t>+       C_t with a triangle on an edge "C4+"
///   K<s>,<t>    complete bipartite             "K2,4"
///   K<r>        clique                          "K4"
///   B<r>        book with r pages               "B3"
///   P<v>        path on v vertices              "P7"
///   g6:<code>   explicit graph in graph6        "g6:Bw"
/// to_string(parse_pattern(s)) == s for every string in this form.
Pattern parse_pattern(std::string_view text);
std::string to_string(const Pattern& p);

/// The pattern as a concrete graph.
Graph pattern_graph(const Pattern& p);

/// Subgraph (not induced) containment.
bool contains(const Graph& g, const Pattern& p);
bool free_of_all(const Graph& g, const std::vector<Pattern>& ps);

/// Backtracking monomorphism search, used for Explicit patterns and as the
/// reference the fast paths are tested against.
bool contains_subgraph(const Graph& g, const Graph& pattern);

bool has_cycle_of_length(const Graph& g, int t);
/// A cycle of length t as a vertex sequence, if one exists.
std::optional<std::vector<int>> find_cycle_of_length(const Graph& g, int t);
/// Checks that seq is a cycle of g (distinct vertices, consecutive and
/// closing pairs adjacent).
bool is_cycle_in(const Graph& g, const std::vector<int>& seq);

/// Smallest t in 3..max_len with no C_t in g, or nullopt if none is missing.
std::optional<int> missing_cycle_length(const Graph& g, int max_len);

inline constexpr int kMaxLongestPathSet = 32;

/// Longest path in G[S], the lexicographically least among the longest ones.
std::vector<int> longest_path_in(const Graph& g, VertexMask s);

}  // namespace spexm
