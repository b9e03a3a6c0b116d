#pragma once

/// The reproduction suite: the bundled golden scripts followed by the corpus
/// property sweeps.

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "closure_lab/corpus.hpp"
#include "closure_lab/script/output.hpp"
#include "golden_scripts.hpp"

namespace closure_lab::tools {

using script::Json;

struct SuiteLine {
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<std::string> diffs;  // expected vs computed, for failures
};

struct SuiteResult {
  std::vector<SuiteLine> lines;
  Json document;
  int exit_code = 0;
};

namespace detail {

inline std::string assertion_diff(const script::StatementReport& s) {
  const auto& r = s.report;
  std::string out = s.loc.to_string() + " " + s.statement;
  const Quantity* lhs = nullptr;
  const Quantity* rhs = nullptr;
  for (const auto& [k, v] : r.quantities) {
    if (k == "lhs") lhs = &v;
    if (k == "rhs") rhs = &v;
  }
  if (lhs && rhs) {
    out += "\n      expected: " + quantity_to_string(*rhs) + "\n      computed: " + quantity_to_string(*lhs);
  } else if (!r.reason.empty()) {
    out += "\n      " + r.reason;
  }
  return out;
}

template <CoefficientField F>
std::vector<script::StatementReport> property_reports(const F& field, const script::RunConfig& cfg,
                                                      std::vector<SuiteLine>& lines) {
  DetectorOptions opts{cfg.multiplicity(), cfg.limit()};
  std::vector<script::StatementReport> out;
  auto run = [&](const std::string& name, auto&& body) {
    script::StatementReport s{name, {}, {}};
    try {
      s.report = body();
    } catch (const std::exception& e) {
      s.report.check = "property: " + name;
      s.report.verdict = Verdict::fails;
      s.report.reason = std::string("engine error: ") + e.what();
    }
    SuiteLine line{"corpus: " + name, s.report.verdict == Verdict::holds, {}, {}};
    std::ostringstream detail;
    bool first = true;
    for (const auto& [k, v] : s.report.quantities) {
      detail << (first ? "" : ", ") << k << " " << quantity_to_string(v);
      first = false;
    }
    line.detail = detail.str();
    if (!line.passed) {
      if (!s.report.reason.empty()) line.diffs.push_back(s.report.reason);
      for (const auto& w : s.report.witnesses) line.diffs.push_back(w);
    }
    lines.push_back(std::move(line));
    out.push_back(std::move(s));
  };
  std::vector<CorpusEntry<F>> entries;
  try {
    entries = corpus(field);
  } catch (const std::exception& e) {
    lines.push_back({"corpus", false, "", {std::string("engine error: ") + e.what()}});
    return out;
  }
  run("colength bound", [&] { return property_colength_bound(entries, opts.multiplicity); });
  run("parameter chain", [&] { return property_parameter_chain(entries, opts); });
  run("regularity", [&] { return property_regularity(entries, opts); });
  return out;
}

}  // namespace detail

inline SuiteResult paper_examples(const script::RunConfig& cfg) {
  SuiteResult res;
  Json reports = Json::array();
  Json summary = Json::array();
  long long total = 0, failed = 0;
  bool engine_error = false;
  std::string field_name;

  for (const auto& [name, source] : golden_scripts()) {
    auto run = script::run_source(source, cfg);
    if (field_name.empty()) field_name = run.field;
    SuiteLine line{name, run.outcome() == script::Outcome::ok, {}, {}};
    line.detail = std::to_string(run.assertions - run.assertions_failed) + "/" + std::to_string(run.assertions) +
                  " assertions";
    for (const auto& s : run.reports) {
      reports.push_back(script::to_json(s, name));
      if (s.report.check == "assert" && s.report.verdict != Verdict::holds) line.diffs.push_back(detail::assertion_diff(s));
    }
    if (run.error) {
      engine_error = true;
      line.diffs.push_back("error (" + run.error_kind + "): " + *run.error);
      reports.push_back(Json{{"script", name}, {"error", script::error_json(run)}});
    }
    total += run.assertions;
    failed += run.assertions_failed;
    res.lines.push_back(std::move(line));
  }

  std::vector<script::StatementReport> props;
  if (cfg.field == script::FieldChoice::prime) {
    props = detail::property_reports(PrimeField(cfg.prime), cfg, res.lines);
  } else {
    props = detail::property_reports(RationalField{}, cfg, res.lines);
  }
  for (const auto& s : props) reports.push_back(script::to_json(s, "corpus"));

  bool all = true;
  for (const auto& l : res.lines) {
    all = all && l.passed;
    summary.push_back(Json{{"name", l.name}, {"passed", l.passed}, {"detail", l.detail}});
  }

  Json doc = Json::object();
  doc["version"] = script::kReportFormatVersion;
  doc["seed"] = cfg.seed;
  doc["config"] = script::config_json(cfg, field_name);
  doc["reports"] = std::move(reports);
  doc["assertions"] = Json{{"total", total}, {"failed", failed}};
  doc["summary"] = std::move(summary);
  res.document = std::move(doc);
  res.exit_code = all ? 0 : (engine_error ? 2 : 1);
  return res;
}

inline std::string summary_table(const SuiteResult& res) {
  std::size_t width = 4;
  for (const auto& l : res.lines) width = std::max(width, l.name.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width) + 2) << "case" << "result  detail\n";
  for (const auto& l : res.lines) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << l.name << (l.passed ? "pass    " : "FAIL    ")
        << l.detail << "\n";
    for (const auto& d : l.diffs) out << "    " << d << "\n";
  }
  int passed = 0;
  for (const auto& l : res.lines) passed += l.passed;
  out << passed << "/" << res.lines.size() << " cases pass\n";
  return out.str();
}

}  // namespace closure_lab::tools
