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

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "spexm/verify.hpp"

namespace spexm {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

ordered_json finding_json(const GraphFinding& f) {
  ordered_json j;
  j["graph6"] = f.graph6;
  j["family"] = f.family;
  j["rho"] = f.rho;
  j["threshold"] = f.threshold;
  j["certificate"] = f.certificate;
  j["detail"] = f.detail;
  return j;
}

ordered_json findings_json(const std::vector<GraphFinding>& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& f : v) arr.push_back(finding_json(f));
  return arr;
}

const std::vector<std::string>& finding_lists() {
  static const std::vector<std::string> kLists = {"equality_cases", "violations", "boundary_findings",
                                                  "counterexamples"};
  return kLists;
}

void expect(std::vector<std::string>& errs, bool ok, std::size_t line, const std::string& what) {
  if (!ok) errs.push_back("line " + std::to_string(line) + ": " + what);
}

void check_finding(std::vector<std::string>& errs, const json& f, std::size_t line,
                   const std::string& where) {
  expect(errs, f.is_object(), line, where + " is not an object");
  if (!f.is_object()) return;
  for (const char* key : {"graph6", "family", "certificate", "detail"}) {
    expect(errs, f.contains(key) && f[key].is_string(), line, where + "." + key + " must be a string");
  }
  for (const char* key : {"rho", "threshold"}) {
    expect(errs, f.contains(key) && f[key].is_number(), line, where + "." + key + " must be a number");
  }
}

std::string fixed15(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(15) << x;
  return os.str();
}

}  // namespace

std::string to_jsonl(const Report& r) {
  std::ostringstream out;
  ordered_json head;
  head["schema_version"] = kReportSchemaVersion;
  head["type"] = "report";
  head["kind"] = r.kind;
  head["id"] = r.id;
  head["mode"] = to_string(r.mode);
  head["m_range"] = {r.m_lo, r.m_hi};
  head["status"] = r.status();
  head["graphs_checked"] = r.graphs_checked();
  head["violations"] = r.violation_count();
  head["counterexamples"] = r.counterexample_count();
  head["records"] = r.records.size();
  head["notes"] = r.notes;
  head["meta"] = {{"tool_version", r.tool_version}, {"wall_seconds", r.wall_seconds}};
  out << head.dump() << '\n';
  for (const auto& rec : r.records) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["type"] = "record";
    j["id"] = r.id;
    j["m"] = rec.m;
    j["subject"] = rec.subject;
    j["hypothesis"] = to_string(rec.hypothesis);
    j["graphs_checked"] = rec.graphs_checked;
    ordered_json counters = ordered_json::object();
    for (const auto& [k, v] : rec.counters) counters[k] = v;
    j["counters"] = counters;
    j["equality_cases"] = findings_json(rec.equality_cases);
    j["violations"] = findings_json(rec.violations);
    j["boundary_findings"] = findings_json(rec.boundary_findings);
    j["counterexamples"] = findings_json(rec.counterexamples);
    j["best"] = rec.best ? finding_json(*rec.best) : ordered_json(nullptr);
    j["notes"] = rec.notes;
    out << j.dump() << '\n';
  }
  return out.str();
}

std::string strip_meta(const std::string& jsonl) {
  std::istringstream in(jsonl);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ordered_json j = ordered_json::parse(line);
    j.erase("meta");
    out << j.dump() << '\n';
  }
  return out.str();
}

std::vector<std::string> report_schema_errors(const std::string& jsonl) {
  std::vector<std::string> errs;
  std::istringstream in(jsonl);
  std::string line;
  std::size_t lineno = 0;
  std::size_t expected_records = 0;
  std::size_t seen_records = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      errs.push_back("line " + std::to_string(lineno) + ": invalid JSON: " + e.what());
      continue;
    }
    expect(errs, j.is_object(), lineno, "not an object");
    if (!j.is_object()) continue;
    expect(errs, j.value("schema_version", -1) == kReportSchemaVersion, lineno, "schema_version mismatch");
    const std::string type = j.value("type", "");
    if (type == "report") {
      if (have_header) {
        expect(errs, seen_records == expected_records, lineno, "previous report has a wrong record count");
      }
      have_header = true;
      seen_records = 0;
      for (const char* key : {"kind", "id", "mode", "status"}) {
        expect(errs, j.contains(key) && j[key].is_string(), lineno, std::string(key) + " must be a string");
      }
      const std::string status = j.value("status", "");
      expect(errs, status == "PASS" || status == "FAIL" || status == "COUNTEREXAMPLE", lineno,
             "unknown status");
      expect(errs, j.contains("m_range") && j["m_range"].is_array() && j["m_range"].size() == 2, lineno,
             "m_range must be a pair");
      for (const char* key : {"graphs_checked", "violations", "counterexamples", "records"}) {
        expect(errs, j.contains(key) && j[key].is_number_integer(), lineno,
               std::string(key) + " must be an integer");
      }
      expect(errs, j.contains("notes") && j["notes"].is_array(), lineno, "notes must be an array");
      expect(errs, j.contains("meta") && j["meta"].is_object(), lineno, "meta must be an object");
      expected_records = j.value("records", 0UL);
      const bool pass = status == "PASS";
      expect(errs, pass == (j.value("violations", 1L) == 0 && j.value("counterexamples", 1L) == 0),
             lineno, "status inconsistent with violation counts");
    } else if (type == "record") {
      expect(errs, have_header, lineno, "record before report header");
      ++seen_records;
      expect(errs, j.contains("m") && j["m"].is_number_integer(), lineno, "m must be an integer");
      const std::string hyp = j.value("hypothesis", "");
      expect(errs, hyp == "inside" || hyp == "outside" || hyp == "unknown", lineno, "unknown hypothesis");
      expect(errs, j.contains("graphs_checked") && j["graphs_checked"].is_number_integer(), lineno,
             "graphs_checked must be an integer");
      expect(errs, j.contains("counters") && j["counters"].is_object(), lineno, "counters must be an object");
      for (const auto& list : finding_lists()) {
        const bool ok = j.contains(list) && j[list].is_array();
        expect(errs, ok, lineno, list + " must be an array");
        if (!ok) continue;
        for (const auto& f : j[list]) check_finding(errs, f, lineno, list + "[]");
      }
      for (const auto& f : j.value("equality_cases", json::array())) {
        expect(errs, !f.value("certificate", "").empty(), lineno, "equality case without certificate");
      }
      expect(errs, j.contains("best"), lineno, "best missing");
      if (j.contains("best") && !j["best"].is_null()) check_finding(errs, j["best"], lineno, "best");
      expect(errs, j.contains("notes") && j["notes"].is_array(), lineno, "notes must be an array");
    } else {
      errs.push_back("line " + std::to_string(lineno) + ": unknown type '" + type + "'");
    }
  }
  expect(errs, have_header, lineno, "no report header");
  if (have_header) expect(errs, seen_records == expected_records, lineno, "record count mismatch");
  return errs;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.id << " [" << to_string(r.mode) << "] m=" << r.m_lo << ".." << r.m_hi << ": " << r.status()
     << " (" << r.graphs_checked() << " graphs, " << r.violation_count() << " violations, "
     << r.counterexample_count() << " counterexamples)\n";
  for (const auto& note : r.notes) os << "  note: " << note << '\n';
  for (const auto& rec : r.records) {
    os << "  m=" << rec.m;
    if (!rec.subject.empty()) os << " " << rec.subject;
    os << " [" << to_string(rec.hypothesis) << "] checked=" << rec.graphs_checked
       << " equality=" << rec.equality_cases.size() << " violations=" << rec.violations.size()
       << " boundary=" << rec.boundary_findings.size()
       << " counterexamples=" << rec.counterexamples.size() << '\n';
    auto list = [&](const char* label, const std::vector<GraphFinding>& v) {
      for (const auto& f : v) {
        os << "    " << label << ' ' << f.graph6;
        if (!f.family.empty()) os << " (" << f.family << ")";
        os << " rho=" << fixed15(f.rho) << " bound=" << fixed15(f.threshold);
        if (!f.detail.empty()) os << " " << f.detail;
        os << '\n';
      }
    };
    list("equality", rec.equality_cases);
    list("VIOLATION", rec.violations);
    list("boundary", rec.boundary_findings);
    list("COUNTEREXAMPLE", rec.counterexamples);
    if (rec.best) {
      os << "    best " << rec.best->graph6 << " rho=" << fixed15(rec.best->rho) << '\n';
    }
    for (const auto& [k, v] : rec.counters) os << "    " << k << "=" << v << '\n';
    for (const auto& note : rec.notes) os << "    note: " << note << '\n';
  }
  return os.str();
}

std::string to_csv(const Report& r) {
  std::ostringstream os;
  os << "id,m,subject,hypothesis,graphs_checked,equality_cases,violations,boundary_findings,"
        "counterexamples\n";
  for (const auto& rec : r.records) {
    os << r.id << ',' << rec.m << ",\"" << rec.subject << "\"," << to_string(rec.hypothesis) << ','
       << rec.graphs_checked << ',' << rec.equality_cases.size() << ',' << rec.violations.size() << ','
       << rec.boundary_findings.size() << ',' << rec.counterexamples.size() << '\n';
  }
  return os.str();
}

}  // namespace spexm
