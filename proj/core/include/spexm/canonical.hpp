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

#include <string>
#include <vector>

#include "spexm/graph.hpp"

namespace spexm {

/// graph6 text of the canonically relabeled graph.
using CanonicalForm = std::string;

/// A vertex permutation: perm[v] is the image of v.
using Permutation = std::vector<int>;

struct CanonicalLabeling {
  CanonicalForm form;
  /// Vertex i of the canonical graph is vertex order[i] of the input.
  std::vector<int> order;
  /// Generators of (a subgroup of, usually all of) Aut(G).
  std::vector<Permutation> generators;
};

/// Equitable refinement plus a search tree over individualized vertices,
/// keeping the lexicographically largest relabeled adjacency matrix.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// Orbit representative (smallest vertex) of every vertex under the group
/// generated by gens.
std::vector<int> vertex_orbits(int n, const std::vector<Permutation>& gens);

}  // namespace spexm
