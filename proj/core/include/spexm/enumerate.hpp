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

#include <functional>
#include <vector>

#include "spexm/canonical.hpp"
#include "spexm/graph.hpp"
#include "spexm/pattern.hpp"

namespace spexm {

struct EnumConstraints {
  int m = 1;
  bool no_isolated = true;
  bool connected_only = false;
  std::vector<Pattern> forbid;
  /// 0 means 2m.
  int max_vertices = 0;

  int vertex_cap() const { return max_vertices == 0 ? 2 * m : max_vertices; }
};

/// Throws ArgumentError on m < 1, a vertex cap outside [2, min(2m, 64)] or an
/// invalid pattern.
void validate(const EnumConstraints& c);

struct EnumeratedGraph {
  Graph graph;
  CanonicalForm form;
};

/// A node of the generation tree: every unit expands to a disjoint part of
/// the output.
struct ShardUnit {
  Graph root;
  CanonicalForm root_form;
  int depth = 0;
};

/// Tree nodes at the given depth (edge count), sorted by canonical form.
/// Depth 0 is the single empty graph.
std::vector<ShardUnit> shard(const EnumConstraints& c, int prefix_depth);

/// Every graph of the output below `unit`, sorted by canonical form.
std::vector<EnumeratedGraph> run_shard(const EnumConstraints& c, const ShardUnit& unit);

/// Full output sorted by canonical form. threads = 0 uses all cores; the
/// result does not depend on the thread count.
std::vector<EnumeratedGraph> enumerate_all(const EnumConstraints& c, int threads = 1);

using EnumVisitor = std::function<void(const Graph&, const CanonicalForm&)>;

/// Visits one representative per isomorphism class, in canonical-form order,
/// and returns the count.
long enumerate_by_edges(const EnumConstraints& c, const EnumVisitor& visit, int threads = 1);

/// Known number of isomorphism classes of graphs with m edges and no
/// isolated vertices, for m <= 20; -1 beyond.
long known_class_count(int m);

}  // namespace spexm
