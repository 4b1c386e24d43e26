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
#include <utility>
#include <variant>
#include <vector>

#include "spexm/graph.hpp"

namespace spexm {

namespace families {

/// K_{1,m}.
struct Star {
  int m;
};
/// Star K_{1,n-1} plus k disjoint edges inside the leaf set.
struct Snk {
  int n;
  int k;
};
/// K_k joined to n-k independent vertices.
struct CompleteSplit {
  int n;
  int k;
};
struct CompleteBipartite {
  int s;
  int t;
};
/// r triangles sharing one edge; same graph as CompleteSplit{r + 2, 2}.
struct Book {
  int r;
};
/// k copies of K_4 sharing one dominating vertex.
struct Rk {
  int k;
};
/// R_k whose dominating vertex is joined to every vertex of T, plus the
/// bipartite edges (i, j) between T[i] and S[j].
struct HtsRk {
  int t;
  int s;
  int k;
  std::vector<std::pair<int, int>> edges;
};
/// R_k whose dominating vertex is joined to every vertex of a star K_{1,r}.
struct K1rBulletRk {
  int r;
  int k;
};
struct Cycle {
  int t;
};
/// C_t with one extra vertex adjacent to two consecutive cycle vertices.
struct CtPlus {
  int t;
};
/// Path on v vertices.
struct Path {
  int v;
};
struct Complete {
  int n;
};

}  // namespace families

using FamilySpec =
    std::variant<families::Star, families::Snk, families::CompleteSplit,
                 families::CompleteBipartite, families::Book, families::Rk, families::HtsRk,
                 families::K1rBulletRk, families::Cycle, families::CtPlus, families::Path,
                 families::Complete>;

/// Builds the named graph. Hub and dominating vertices get the lowest labels:
///   Star           0 = centre
///   Snk            0 = centre, matching edges (1,2), (3,4), ...
///   CompleteSplit  0..k-1 = clique
///   Book           0, 1 = spine
///   Rk             0 = dominating vertex, block i is {0, 3i+1, 3i+2, 3i+3}
///   HtsRk          as Rk, then T = 3k+1 .. 3k+t, then S
///   K1rBulletRk    as Rk, then star centre 3k+1, leaves after it
///   CtPlus         cycle 0..t-1, extra vertex t adjacent to 0 and 1
/// Throws FamilyDomainError naming the violated constraint.
Graph build_family(const FamilySpec& spec);

/// Edge count implied by the definition (no graph is built).
long family_edge_count(const FamilySpec& spec);

/// Text form used by the CLI, e.g. "S:7:3", "book:4", "H:1:0:1", "H:2:2:1:0-0,1-1".
std::string to_string(const FamilySpec& spec);
FamilySpec parse_family(std::string_view text);

// ---- recognizers (isomorphism-invariant) ----------------------------------

bool is_star(const Graph& g);
/// Returns the part sizes (s <= t) when g is K_{s,t}.
std::optional<std::pair<int, int>> complete_bipartite_parts(const Graph& g);
bool is_complete_bipartite(const Graph& g);
bool is_complete_split(const Graph& g, int k);
/// Complete split graph S_{n,2} with n >= 4.
bool is_book(const Graph& g);
/// Returns (n, k) when g is S_n^k.
std::optional<std::pair<int, int>> snk_parameters(const Graph& g);
bool is_snk(const Graph& g);
/// Complete r-partite graph with all parts of equal size.
bool is_complete_regular_multipartite(const Graph& g, int r);
bool is_complete(const Graph& g);

/// Short human label of the first matching named family, or "" if none.
std::string recognize_family(const Graph& g);

}  // namespace spexm
