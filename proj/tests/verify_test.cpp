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

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "spexm/canonical.hpp"
#include "spexm/enumerate.hpp"
#include "spexm/errors.hpp"
#include "spexm/family.hpp"
#include "spexm/graph6.hpp"
#include "spexm/pattern.hpp"
#include "spexm/spectral.hpp"
#include "spexm/verify.hpp"

namespace spexm {
namespace {

namespace fam = families;

TheoremId theorem(TheoremTag tag, int r = 0, int k = 0, int t = 0) { return {tag, r, k, t}; }

std::set<std::string> equality_forms(const MRecord& rec) {
  std::set<std::string> out;
  for (const auto& f : rec.equality_cases) out.insert(f.graph6);
  return out;
}

std::string form_of(const FamilySpec& spec) { return canonical_form(build_family(spec)); }

TEST(TheoremId, NamesAndParsing) {
  for (auto tag : {TheoremTag::T1_1, TheoremTag::T1_2, TheoremTag::T1_3i, TheoremTag::T1_3ii,
                   TheoremTag::T1_4_C5, TheoremTag::T1_4_C6, TheoremTag::T1_5, TheoremTag::L5_1,
                   TheoremTag::L5_2, TheoremTag::L5_4, TheoremTag::R2_1, TheoremTag::R4_1,
                   TheoremTag::CONJ6_1, TheoremTag::CONJ6_2}) {
    EXPECT_EQ(parse_theorem_tag(short_name(tag)), tag);
  }
  EXPECT_EQ(parse_theorem_tag("6.1"), TheoremTag::CONJ6_1);
  EXPECT_EQ(to_string(theorem(TheoremTag::T1_5, 0, 2)), "T1.5(k=2)");
  EXPECT_THROW(parse_theorem_tag("T9.9"), ArgumentError);
  EXPECT_THROW(validate(theorem(TheoremTag::T1_3i, 1)), ArgumentError);
  EXPECT_THROW(validate(theorem(TheoremTag::T1_5, 0, 0)), ArgumentError);
}

TEST(CheckTheorem, SquareFreeEqualityIsTheStar) {
  const Report rep = check_theorem(theorem(TheoremTag::T1_2), 10, 10, Mode::Exhaustive);
  EXPECT_EQ(rep.status(), "PASS");
  ASSERT_EQ(rep.records.size(), 1U);
  EXPECT_EQ(equality_forms(rep.records[0]), std::set<std::string>{form_of(fam::Star{10})});
}

TEST(CheckTheorem, BelowHypothesisIsBoundaryExploration) {
  const Report rep = check_theorem(theorem(TheoremTag::T1_2), 8, 9, Mode::Exhaustive);
  EXPECT_EQ(rep.status(), "PASS");
  EXPECT_FALSE(rep.notes.empty());
  long findings = 0;
  for (const auto& rec : rep.records) {
    EXPECT_EQ(rec.hypothesis, Hypothesis::Outside);
    findings += static_cast<long>(rec.boundary_findings.size());
  }
  EXPECT_GT(findings, 0);
}

TEST(CheckTheorem, TrianglePlusSquarePlusFreeAtNineEdges) {
  const Report rep = check_theorem(theorem(TheoremTag::T1_3ii), 9, 9, Mode::Exhaustive);
  EXPECT_EQ(rep.status(), "PASS");
  const std::set<std::string> expected = {form_of(fam::Star{9}), form_of(fam::CompleteBipartite{3, 3}),
                                          form_of(fam::Snk{7, 3}), form_of(fam::Snk{8, 2}),
                                          form_of(fam::Snk{9, 1})};
  EXPECT_EQ(equality_forms(rep.records[0]), expected);
  for (const auto& f : rep.records[0].equality_cases) EXPECT_FALSE(f.certificate.empty());
}

TEST(CheckTheorem, PentagonFreeBookBound) {
  const Report rep = check_theorem(theorem(TheoremTag::T1_4_C5), 8, 9, Mode::Exhaustive);
  EXPECT_EQ(rep.status(), "PASS");
  EXPECT_TRUE(rep.records[0].equality_cases.empty());
  EXPECT_EQ(equality_forms(rep.records[1]), std::set<std::string>{form_of(fam::Book{4})});
}

TEST(CheckTheorem, PentagonFreeAtSevenEdgesFindsTheBoundaryGraph) {
  const Report rep = check_theorem(theorem(TheoremTag::T1_4_C5), 7, 7, Mode::Exhaustive);
  EXPECT_EQ(rep.status(), "PASS");
  std::set<std::string> found;
  for (const auto& f : rep.records[0].boundary_findings) found.insert(f.graph6);
  EXPECT_TRUE(found.count(form_of(fam::HtsRk{1, 0, 1, {}})));
}

TEST(CheckTheorem, TriangleFreeEqualityIsCompleteBipartite) {
  const Report rep = check_theorem(theorem(TheoremTag::T1_1, 2), 4, 9, Mode::Exhaustive);
  EXPECT_EQ(rep.status(), "PASS");
  for (const auto& rec : rep.records) {
    std::set<std::string> expected;
    for (int s = 1; s * s <= rec.m; ++s) {
      if (rec.m % s == 0) expected.insert(form_of(fam::CompleteBipartite{s, rec.m / s}));
    }
    EXPECT_EQ(equality_forms(rec), expected) << rec.m;
  }
}

TEST(CheckTheorem, ConsecutiveCyclesSmallRange) {
  const Report rep = check_theorem(theorem(TheoremTag::T1_5, 0, 1), 4, 9, Mode::Exhaustive);
  EXPECT_EQ(rep.status(), "PASS");
  long above = 0;
  for (const auto& rec : rep.records) {
    EXPECT_EQ(rec.counters.at("above_threshold"), rec.counters.at("witnesses_validated"));
    above += rec.counters.at("above_threshold");
  }
  EXPECT_GT(above, 0);
}

TEST(CheckTheorem, RefusesAboveCap) {
  try {
    check_theorem(theorem(TheoremTag::T1_2), 10, 15, Mode::Exhaustive);
    FAIL();
  } catch (const RefusedError& e) {
    EXPECT_EQ(e.estimated_classes(), static_cast<double>(known_class_count(15)));
  }
}

TEST(CheckTheorem, UnsupportedModeIsAnArgumentError) {
  EXPECT_THROW(check_theorem(theorem(TheoremTag::T1_5, 0, 1), 5, 5, Mode::Search), ArgumentError);
}

TEST(CheckTheorem, RandomSpectralProperties) {
  VerifyOptions opt;
  opt.samples = 300;
  const Report del = check_theorem(theorem(TheoremTag::L5_1), 0, 0, Mode::Random, opt);
  EXPECT_EQ(del.status(), "PASS");
  EXPECT_EQ(del.graphs_checked(), 300);
  const Report per = check_theorem(theorem(TheoremTag::L5_2), 0, 0, Mode::Random, opt);
  EXPECT_EQ(per.status(), "PASS");
}

TEST(CheckTheorem, PerronBoundExhaustiveFindsOnlyTheEdge) {
  const Report rep = check_theorem(theorem(TheoremTag::L5_2), 1, 6, Mode::Exhaustive);
  EXPECT_EQ(rep.status(), "PASS");
  std::set<std::string> tight;
  for (const auto& rec : rep.records) {
    for (const auto& f : rec.equality_cases) tight.insert(f.graph6);
  }
  std::set<std::string> stars;
  for (int m = 1; m <= 6; ++m) stars.insert(form_of(fam::Star{m}));
  EXPECT_EQ(tight, stars);
}

TEST(Witness, CompleteGraphOnFourVertices) {
  const Graph k4 = build_family(fam::Complete{4});
  const auto w = thm15_witness(k4, 1);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->neighbourhood_edges, 3);
  ASSERT_EQ(w->cycles.size(), 2U);
  for (const auto& [t, cyc] : w->cycles) {
    EXPECT_EQ(static_cast<int>(cyc.size()), t);
    EXPECT_TRUE(is_cycle_in(k4, cyc));
  }
  for (int v : w->path) EXPECT_TRUE(k4.has_edge(w->j_star, v));
  EXPECT_GT(w->f_column_sums[w->j_star], k4.m());
}

TEST(Witness, BelowThreshold) {
  EXPECT_FALSE(thm15_witness(build_family(fam::CompleteBipartite{3, 3}), 1).has_value());
  EXPECT_FALSE(thm15_witness(build_family(fam::Cycle{5}), 1).has_value());
}

TEST(Witness, LargerK) {
  const Graph k8 = build_family(fam::Complete{8});
  const auto w = thm15_witness(k8, 2);
  ASSERT_TRUE(w.has_value());
  for (int t = 3; t <= 6; ++t) {
    ASSERT_TRUE(w->cycles.count(t));
    EXPECT_TRUE(is_cycle_in(k8, w->cycles.at(t)));
  }
  EXPECT_GE(static_cast<int>(w->path.size()), 5);
}

TEST(Boundary, AllChecksPass) {
  const Report rep = boundary_checks();
  EXPECT_EQ(rep.status(), "PASS");
  int gap_sweep = 0;
  for (const auto& rec : rep.records) {
    if (rec.subject.rfind("H_{", 0) == 0 && rec.subject != "H_{1,0} R_1") ++gap_sweep;
  }
  int expected = 0;
  for (int k = 1; 6 * k <= 40; ++k) {
    for (int t = 0; 6 * k + t <= 40; ++t) {
      if (6 * k + t >= 8) ++expected;
    }
  }
  EXPECT_EQ(gap_sweep, expected);
}

TEST(Audit, BookPassesEveryClause) {
  const auto results = extremal_structure_audit(build_family(fam::Book{4}), {patterns::Cycle{5}});
  for (const auto& r : results) {
    if (r.applicable) EXPECT_TRUE(r.pass) << r.clause << " " << r.witness;
  }
}

TEST(Audit, StarCutVertexIsTheExtremalVertex) {
  const auto results = extremal_structure_audit(build_family(fam::Star{9}), {patterns::Cycle{4}});
  ASSERT_GE(results.size(), 2U);
  EXPECT_TRUE(results[1].applicable);
  EXPECT_TRUE(results[1].pass);
}

TEST(Audit, DisconnectedGraphFailsConnectivity) {
  const auto results =
      extremal_structure_audit(Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}}), {patterns::Cycle{5}});
  ASSERT_FALSE(results.empty());
  EXPECT_FALSE(results[0].pass);
  EXPECT_FALSE(results[0].witness.empty());
}

TEST(Report, SerializationIsSchemaValidAndMetaIsStrippable) {
  const Report rep = check_theorem(theorem(TheoremTag::T1_3ii), 9, 10, Mode::Exhaustive);
  const std::string jsonl = to_jsonl(rep);
  EXPECT_TRUE(report_schema_errors(jsonl).empty());
  EXPECT_NE(jsonl.find("\"meta\""), std::string::npos);
  EXPECT_EQ(strip_meta(jsonl).find("\"meta\""), std::string::npos);
  EXPECT_EQ(strip_meta(jsonl), strip_meta(to_jsonl(check_theorem(theorem(TheoremTag::T1_3ii), 9, 10,
                                                                  Mode::Exhaustive))));
  EXPECT_FALSE(report_schema_errors("{\"type\":\"record\"}\n").empty());
}

TEST(Scan, ConjecturesProduceValidReports) {
  const Report c2 = scan_conjecture(theorem(TheoremTag::CONJ6_2, 1), 6, 9, Mode::Exhaustive);
  EXPECT_TRUE(report_schema_errors(to_jsonl(c2)).empty());
  for (const auto& rec : c2.records) {
    EXPECT_EQ(rec.hypothesis, Hypothesis::Unknown);
    for (const auto& f : rec.equality_cases) EXPECT_TRUE(is_complete_bipartite(parse_graph6(f.graph6)));
  }
  const Report c1 = scan_conjecture(theorem(TheoremTag::CONJ6_1, 0, 2), 9, 9, Mode::Exhaustive);
  EXPECT_TRUE(report_schema_errors(to_jsonl(c1)).empty());
  EXPECT_GE(c1.records[0].counters.at("exception"), 1);
}

}  // namespace
}  // namespace spexm
