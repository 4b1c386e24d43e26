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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spexm/graph.hpp"
#include "spexm/pattern.hpp"

namespace spexm {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr int kDefaultExhaustiveCap = 14;

enum class TheoremTag {
  T1_1,
  T1_2,
  T1_3i,
  T1_3ii,
  T1_4_C5,
  T1_4_C6,
  T1_5,
  L5_1,
  L5_2,
  L5_4,
  R2_1,
  R4_1,
  CONJ6_1,
  CONJ6_2,
};

/// Tag plus the parameters it uses: r for T1_1, T1_3i, CONJ6_2; k for T1_5,
/// CONJ6_1 and L5_4; t for L5_4.
struct TheoremId {
  TheoremTag tag = TheoremTag::T1_2;
  int r = 0;
  int k = 0;
  int t = 0;
};

/// Checks parameter domains (r >= 2 for T1_1 and T1_3i, r >= 1 for
/// CONJ6_2, k >= 1, t >= 0).
void validate(const TheoremId& id);

/// Short name: "T1.1", "T1.2", "T1.3i", "T1.3ii", "T1.4C5", "T1.4C6", "T1.5",
/// "L5.1", "L5.2", "L5.4", "R2.1", "R4.1", "C6.1", "C6.2".
std::string short_name(TheoremTag tag);
/// Name with parameters, e.g. "T1.5(k=2)".
std::string to_string(const TheoremId& id);
/// Parses a short name; "6.1" and "6.2" are accepted for the conjectures.
TheoremTag parse_theorem_tag(std::string_view text);

/// Forbidden family of the theorem's graph class (empty when unrestricted).
std::vector<Pattern> forbidden_patterns(const TheoremId& id);

enum class Mode { Exhaustive, Search, Random, Direct };
std::string to_string(Mode mode);
Mode parse_mode(std::string_view text);
/// Mode used when none is requested.
Mode default_mode(TheoremTag tag);

enum class Hypothesis { Inside, Outside, Unknown };
std::string to_string(Hypothesis h);

struct GraphFinding {
  std::string graph6;
  std::string family;
  double rho = 0.0;
  double threshold = 0.0;
  std::string certificate;
  std::string detail;
};

struct MRecord {
  int m = 0;
  std::string subject;
  Hypothesis hypothesis = Hypothesis::Inside;
  long graphs_checked = 0;
  std::map<std::string, long> counters;
  std::vector<GraphFinding> equality_cases;
  std::vector<GraphFinding> violations;
  std::vector<GraphFinding> boundary_findings;
  std::vector<GraphFinding> counterexamples;
  std::optional<GraphFinding> best;
  std::vector<std::string> notes;
};

struct Report {
  std::string kind;
  std::string id;
  Mode mode = Mode::Exhaustive;
  int m_lo = 0;
  int m_hi = 0;
  std::vector<MRecord> records;
  std::vector<std::string> notes;
  double wall_seconds = 0.0;
  std::string tool_version;

  long graphs_checked() const;
  long violation_count() const;
  long counterexample_count() const;
  /// "PASS", "FAIL" (violations) or "COUNTEREXAMPLE".
  std::string status() const;
  bool pass() const { return status() == "PASS"; }
};

struct VerifyOptions {
  int threads = 1;
  int exhaustive_cap = kDefaultExhaustiveCap;
  int restarts = 100;
  int max_steps = 10'000;
  std::uint64_t seed = 0;
  /// Graph count for Random mode.
  long samples = 10'000;
  /// Vertex range of random connected graphs.
  int random_max_vertices = 16;
};

/// Exhaustive and search checks of a theorem or lemma over m_lo..m_hi.
/// Throws RefusedError when an exhaustive run exceeds the cost cap and
/// ArgumentError on a mode the theorem does not support.
Report check_theorem(const TheoremId& id, int m_lo, int m_hi, Mode mode,
                     const VerifyOptions& opt = {});

/// Conjecture scan; counterexamples are reported, never dropped.
Report scan_conjecture(const TheoremId& id, int m_lo, int m_hi, Mode mode,
                       const VerifyOptions& opt = {});

struct Thm15Witness {
  int j_star = -1;
  /// Column sums of A^2 - (2k-1)/2 A.
  std::vector<double> f_column_sums;
  long neighbourhood_edges = 0;
  std::vector<int> path;
  /// t -> cycle of length t through j_star, for 3 <= t <= 2k + 2.
  std::map<int, std::vector<int>> cycles;
};

/// Witness cycles for a graph above the consecutive-cycle threshold, nullopt
/// when rho does not exceed it. Throws ConsistencyError if the threshold is
/// exceeded but the construction fails.
std::optional<Thm15Witness> thm15_witness(const Graph& g, int k);

/// Sign checks on the boundary families (star plus one edge, the R_1
/// example at m = 7, and the H_{t,0} R_k sweep).
Report boundary_checks();

struct AuditResult {
  std::string clause;
  bool applicable = true;
  bool pass = true;
  std::string witness;
};

/// Structural properties every extremal graph has when each forbidden graph
/// is 2-connected: connectivity, cut vertices only at vertices of maximum
/// Perron coordinate, and (for C4-free forbidden graphs) equal
/// neighbourhoods of non-adjacent degree-two vertices.
std::vector<AuditResult> extremal_structure_audit(const Graph& g_star,
                                                  const std::vector<Pattern>& forbid);

// ---- serialization -------------------------------------------------------

/// One summary line followed by one line per record. Wall time and tool
/// version live under "meta".
std::string to_jsonl(const Report& r);
/// The same text with every "meta" member removed.
std::string strip_meta(const std::string& jsonl);
/// Schema problems in a JSON-lines report, empty when valid.
std::vector<std::string> report_schema_errors(const std::string& jsonl);
/// Compact human summary.
std::string to_text(const Report& r);
/// CSV summary table, one row per record.
std::string to_csv(const Report& r);

}  // namespace spexm
