#pragma once

/// Detector reports: computed quantities, a verdict, the hypotheses behind
/// it and any witnesses.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "closure_lab/errors.hpp"

namespace closure_lab {

enum class Verdict {
  holds,
  fails,
  inconclusive,
  unsupported,
  cohen_macaulay,
  not_cohen_macaulay,
  regular,
  not_regular,
  partial,
};

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::unsupported: return "unsupported";
    case Verdict::cohen_macaulay: return "cohen-macaulay";
    case Verdict::not_cohen_macaulay: return "not-cohen-macaulay";
    case Verdict::regular: return "regular";
    case Verdict::not_regular: return "not-regular";
    case Verdict::partial: return "partial";
  }
  return "?";
}

/// How a hypothesis entered the verdict.
enum class HypothesisStatus {
  verified,    // checked by the engine
  refuted,     // checked by the engine and false
  asserted,    // supplied by the caller
  unverified,  // neither checked nor asserted
  automatic,   // holds for every ring the engine can present
};

inline std::string to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::verified: return "verified";
    case HypothesisStatus::refuted: return "refuted";
    case HypothesisStatus::asserted: return "asserted";
    case HypothesisStatus::unverified: return "unverified";
    case HypothesisStatus::automatic: return "automatic";
  }
  return "?";
}

struct Hypothesis {
  std::string name;
  HypothesisStatus status;
  std::string detail;
};

using Quantity = std::variant<long long, bool, std::string>;

struct Report {
  std::string check;
  std::string ring;
  std::string input;
  std::vector<std::pair<std::string, Quantity>> quantities;
  Verdict verdict = Verdict::inconclusive;
  std::string reason;
  std::vector<Hypothesis> hypotheses;
  std::vector<std::string> witnesses;

  Report& set(std::string key, Quantity value) {
    for (auto& [k, v] : quantities) {
      if (k == key) {
        v = std::move(value);
        return *this;
      }
    }
    quantities.emplace_back(std::move(key), std::move(value));
    return *this;
  }

  const Quantity* get(const std::string& key) const {
    for (const auto& [k, v] : quantities) {
      if (k == key) return &v;
    }
    return nullptr;
  }

  long long integer(const std::string& key) const {
    const Quantity* q = get(key);
    return q ? std::get<long long>(*q) : 0;
  }

  Report& hypothesis(std::string name, HypothesisStatus status, std::string detail = {}) {
    hypotheses.push_back({std::move(name), status, std::move(detail)});
    return *this;
  }
  /// Status of a recorded hypothesis; throws if absent.
  HypothesisStatus status(const std::string& name) const {
    for (const auto& h : hypotheses) {
      if (h.name == name) return h.status;
    }
    throw UsageError("report has no hypothesis '" + name + "'");
  }
};

inline std::string quantity_to_string(const Quantity& q) {
  if (const auto* i = std::get_if<long long>(&q)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&q)) return *b ? "true" : "false";
  return std::get<std::string>(q);
}

inline std::string to_text(const Report& r) {
  std::string out = r.check + ": " + to_string(r.verdict);
  if (!r.reason.empty()) out += " (" + r.reason + ")";
  if (!r.ring.empty()) out += "\n  ring: " + r.ring;
  if (!r.input.empty()) out += "\n  input: " + r.input;
  for (const auto& [k, v] : r.quantities) out += "\n  " + k + " = " + quantity_to_string(v);
  for (const auto& h : r.hypotheses) {
    out += "\n  hypothesis " + h.name + ": " + to_string(h.status);
    if (!h.detail.empty()) out += " (" + h.detail + ")";
  }
  for (const auto& w : r.witnesses) out += "\n  witness: " + w;
  return out;
}

}  // namespace closure_lab
