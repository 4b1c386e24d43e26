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

#include "spexm/charpoly.hpp"
#include "spexm/family.hpp"
#include "spexm/graph.hpp"

namespace spexm {

inline constexpr double kDefaultTolerance = 1e-12;
/// Slack used by theorem predicates.
inline constexpr double kDecisionSlack = 1e-9;
/// Values closer than this to a threshold are settled with exact arithmetic.
inline constexpr double kEscalationBand = 1e-6;
inline constexpr long kMaxPowerIterations = 1'000'000;

struct SpectralCertificate {
  double rho = 0.0;
  /// Unit, non-negative, zero outside the achieving component.
  std::vector<double> perron;
  /// max_u |(A x)_u - rho x_u|
  double residual = 0.0;
  long iterations = 0;
  /// Index into components(g) of the component attaining rho.
  int component = 0;
  VertexMask component_mask = 0;
};

/// Power iteration on A + I per connected component, all-ones start.
/// Throws ConvergenceError carrying the best iterate when the cap is hit.
SpectralCertificate spectral_radius(const Graph& g, double tol = kDefaultTolerance);

/// Exact remainder of char_poly(g) modulo x^2 - p x - q.
QuadraticRemainder certify_quadratic_eigenfactor(const Graph& g, long p, long q);

struct SqrtCertificate {
  bool is_exact = false;
  /// Sign of char_poly(g) at sqrt(m).
  int sign = 0;
  double rho = 0.0;
  double sqrt_m = 0.0;
};

/// Decides rho(g) == sqrt(m) exactly.
SqrtCertificate certify_rho_equals_sqrt(const Graph& g);

/// Largest real root of the defining polynomial of a supported family:
/// Star, Snk, CompleteSplit (Book), CompleteBipartite and HtsRk with s = 0
/// and no extra edges. Throws ArgumentError for anything else.
double family_rho_closed_form(const FamilySpec& spec);

/// The integer polynomial whose largest root family_rho_closed_form returns.
IntPoly family_rho_polynomial(const FamilySpec& spec);

/// Largest root in [0, hi] by a downward grid scan and bisection to 1e-13.
double largest_root(const IntPoly& p, double hi);

struct DeletionBound {
  bool holds = false;
  /// Numerically tight within kDecisionSlack.
  bool equality = false;
  double rho = 0.0;
  double rho_without_v = 0.0;
  /// sqrt(rho(G - v)^2 + 2 d(v) - 1)
  double bound = 0.0;
};

/// rho(G)^2 <= rho(G - v)^2 + 2 d(v) - 1. Throws PreconditionError if v is
/// isolated.
DeletionBound deletion_bound_check(const Graph& g, int v);

struct PerronBound {
  bool holds = false;
  bool equality = false;
  double max_coordinate = 0.0;
  int argmax = -1;
};

/// Max Perron coordinate <= 1/sqrt(2). Throws PreconditionError unless g is
/// connected with at least two vertices.
PerronBound perron_coordinate_bound_check(const Graph& g);

enum class Order { Less, Equal, Greater };
std::string to_string(Order o);

struct ThresholdComparison {
  Order order = Order::Less;
  double rho = 0.0;
  double threshold = 0.0;
  /// The float values were within kEscalationBand and exact arithmetic decided.
  bool escalated = false;
  /// Escalation was needed but the achieving component is too large.
  bool uncertified = false;
};

/// Compares rho(g) with the larger root of an integer quadratic.
ThresholdComparison compare_rho(const Graph& g, const SpectralCertificate& cert,
                                const QuadraticRoot& threshold);

}  // namespace spexm
