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
#include <string>
#include <vector>

#include "spexm/canonical.hpp"
#include "spexm/graph.hpp"
#include "spexm/pattern.hpp"
#include "spexm/spectral.hpp"

namespace spexm {

struct SearchConfig {
  int m = 1;
  std::vector<Pattern> forbid;
  int restarts = 10;
  int max_steps = 10'000;
  std::uint64_t seed = 0;
  bool edge_rotation = true;
  bool vertex_shift = true;
  /// 0 uses all cores. Does not affect the result.
  int threads = 1;
};

/// Throws ArgumentError on m < 1, restarts < 1, max_steps < 0, m > 63 or
/// both move kinds disabled.
void validate(const SearchConfig& cfg);

struct TracePoint {
  int restart = 0;
  int step = 0;
  double rho = 0.0;
};

struct SearchResult {
  bool feasible = false;
  /// Best graph without isolated vertices, canonically labeled.
  Graph best;
  CanonicalForm best_form;
  SpectralCertificate cert;
  int best_restart = -1;
  /// Sorted by (restart, step).
  std::vector<TracePoint> trace;
  /// Restarts whose start was a fallback family instead of a random graph.
  int fallback_starts = 0;
  std::string note;
};

/// Moves every edge vw with w outside {to} and N(to) over to (to, w).
/// Throws ArgumentError when from == to or a vertex is out of range.
Graph vertex_shift(const Graph& g, int from, int to);

/// Strict-improvement hill climbing with seeded restarts.
SearchResult maximize_rho(const SearchConfig& cfg);

struct LocalMaxReport {
  bool strict = true;
  /// F-free neighbours not isomorphic to the input.
  long neighbours = 0;
  double rho = 0.0;
  /// Largest rho among those neighbours (-inf when there are none).
  double best_neighbour_rho = 0.0;
  Graph best_neighbour;
};

/// Checks every single move from g (padded to m + 1 vertices) against the
/// forbidden patterns; strict means every non-isomorphic F-free neighbour has
/// rho below rho(g) - 1e-12.
LocalMaxReport local_max_check(const Graph& g, const std::vector<Pattern>& forbid,
                               bool edge_rotation = true, bool vertex_shift = true);

}  // namespace spexm
