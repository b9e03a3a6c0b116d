#pragma once

/// JSON and text rendering of run results.

#include <string>

#include "json.hpp"

#include "closure_lab/script/runner.hpp"

namespace closure_lab::script {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportFormatVersion = "1.0";

inline Json to_json(const Quantity& q) {
  return std::visit([](const auto& x) { return Json(x); }, q);
}

inline Json to_json(const Report& r) {
  Json out = Json::object();
  out["check"] = r.check;
  out["ring"] = r.ring;
  out["input"] = r.input;
  Json qs = Json::object();
  for (const auto& [k, v] : r.quantities) qs[k] = to_json(v);
  out["quantities"] = std::move(qs);
  out["verdict"] = to_string(r.verdict);
  out["reason"] = r.reason;
  Json hs = Json::array();
  for (const auto& h : r.hypotheses) {
    hs.push_back(Json{{"name", h.name}, {"status", to_string(h.status)}, {"detail", h.detail}});
  }
  out["hypotheses"] = std::move(hs);
  out["witnesses"] = r.witnesses;
  return out;
}

inline Json to_json(const StatementReport& s, const std::string& script = {}) {
  Json out = Json::object();
  if (!script.empty()) out["script"] = script;
  out["statement"] = s.statement;
  out["location"] = Json{{"line", s.loc.line}, {"column", s.loc.column}};
  Json body = to_json(s.report);
  for (auto& [k, v] : body.items()) out[k] = v;
  return out;
}

inline Json config_json(const RunConfig& cfg, const std::string& field) {
  Json c = Json::object();
  c["field"] = field.empty() ? Json(nullptr) : Json(field);
  c["window"] = cfg.window ? Json(*cfg.window) : Json(nullptr);
  c["max_n"] = cfg.max_n ? Json(*cfg.max_n) : Json(nullptr);
  c["policy"] = to_string(cfg.policy);
  return c;
}

inline Json error_json(const RunResult& r, const std::string& script = {}) {
  Json e = Json::object();
  if (!script.empty()) e["script"] = script;
  e["kind"] = r.error_kind;
  e["message"] = *r.error;
  e["location"] = Json{{"line", r.error_loc.line}, {"column", r.error_loc.column}};
  return e;
}

/// Document for a single script run.
inline Json to_json(const RunResult& r, const RunConfig& cfg) {
  Json out = Json::object();
  out["version"] = kReportFormatVersion;
  out["seed"] = cfg.seed;
  out["config"] = config_json(cfg, r.field);
  Json reports = Json::array();
  for (const auto& s : r.reports) reports.push_back(to_json(s));
  out["reports"] = std::move(reports);
  out["assertions"] = Json{{"total", r.assertions}, {"failed", r.assertions_failed}};
  if (r.error) out["error"] = error_json(r);
  return out;
}

inline std::string to_text(const RunResult& r) {
  std::string out;
  for (const auto& s : r.reports) out += "[" + s.loc.to_string() + "] " + to_text(s.report) + "\n";
  if (r.assertions) {
    out += std::to_string(r.assertions - r.assertions_failed) + "/" + std::to_string(r.assertions) +
           " assertions hold\n";
  }
  if (r.error) out += "error (" + r.error_kind + "): " + *r.error + "\n";
  return out;
}

}  // namespace closure_lab::script
