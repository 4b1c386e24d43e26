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

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "spexm/graph.hpp"

namespace spexm::oracle {

/// Lexicographically largest upper-triangle bit string over all n! relabelings.
std::string permutation_canonical(const Graph& g);

/// Canonical forms of every graph with m edges and no isolated vertices,
/// from all edge subsets of K_{2m}. Feasible for m <= 4.
std::set<std::string> labeled_subset_classes(int m);

/// Canonical forms of every graph with m edges and no isolated vertices,
/// by adding every possible edge to every class with m - 1 edges.
std::vector<std::set<std::string>> naive_augmentation_classes(int max_m);

/// Characteristic polynomial coefficients (low to high) from sums of
/// principal minors. Feasible for n <= 10.
std::vector<long long> principal_minor_char_poly(const Graph& g);

/// Largest adjacency eigenvalue from a dense symmetric eigensolver.
double dense_rho(const Graph& g);

/// Does g contain h as a (not necessarily induced) subgraph, by trying every
/// injective vertex map.
bool brute_contains(const Graph& g, const Graph& h);

/// Lengths of all cycles of g.
std::set<int> cycle_lengths(const Graph& g);

/// Random spanning tree on n vertices plus each other pair with probability p.
Graph random_connected_graph(std::mt19937_64& rng, int n, double p);

/// Uniform random labeled graph with edge probability p.
Graph random_graph(std::mt19937_64& rng, int n, double p);

/// Every labeled graph on n vertices, as edge-bit masks over the pairs i<j in
/// row order.
Graph graph_from_pair_mask(int n, std::uint64_t mask);

}  // namespace spexm::oracle
