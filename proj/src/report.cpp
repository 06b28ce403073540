// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#include "ergosplit/report.hpp"

#include <cmath>

namespace ergosplit {

namespace {

using nlohmann::json;

// numeric fields must be finite or explicitly marked
json finite_or_marked(double v) {
  if (std::isfinite(v)) return v;
  return "inconclusive";
}

json complex_to_json(const Complex& z) {
  return json::array({finite_or_marked(z.real()), finite_or_marked(z.imag())});
}

// FNV-1a over the canonical config text: a deterministic job id
std::string job_id_of(const ConfigMap& map) {
  const std::string text = serialize_config(map);
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

}  // namespace

const char* to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::Pass:
      return "pass";
    case RecordStatus::Fail:
      return "fail";
    case RecordStatus::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

json to_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(complex_to_json(v(i)));
  return arr;
}

json to_json(const LimitEstimate& est) {
  json j;
  j["value"] = to_json(est.value);
  j["r_history"] = est.r_history;
  j["residuals"] = est.residuals;
  j["converged"] = est.converged;
  j["tol"] = est.tol;
  return j;
}

json to_json(const SplitReport& rep) {
  json j;
  // the decomposition is the spectral realization: weighted means over the
  // certified unimodular frequencies, not an abstract minimal idempotent
  j["method"] = "spectral-unimodular-frequencies";
  j["x_a"] = to_json(rep.x_a);
  j["x_0"] = to_json(rep.x_0);
  j["frequencies"] = rep.frequencies;
  json comps = json::array();
  for (const Vector& c : rep.components) comps.push_back(to_json(c));
  j["components"] = comps;
  j["residual_sum"] = finite_or_marked(rep.residual_sum);
  j["flight_mean_history"] = to_json(rep.flight_mean_history);
  json ests = json::array();
  for (const LimitEstimate& e : rep.component_estimates) ests.push_back(to_json(e));
  j["component_estimates"] = ests;
  return j;
}

json to_json(const DoubleLimitReport& rep) {
  json j;
  j["nu"] = rep.nu ? complex_to_json(*rep.nu) : json();
  j["mu"] = rep.mu ? complex_to_json(*rep.mu) : json();
  j["discrepancy"] = finite_or_marked(rep.discrepancy);
  switch (rep.verdict) {
    case DoubleLimitVerdict::Consistent:
      j["verdict"] = "consistent";
      break;
    case DoubleLimitVerdict::Violation:
      j["verdict"] = "violation";
      break;
    case DoubleLimitVerdict::Inconclusive:
      j["verdict"] = "inconclusive";
      break;
  }
  const auto table_to_json = [](const std::vector<TailEntry>& table) {
    json arr = json::array();
    for (const TailEntry& e : table) {
      json t;
      t["outer_index"] = e.outer_index;
      t["inner_count"] = e.inner_count;
      t["inner_cauchy"] = e.inner_cauchy;
      t["inner_limit"] = complex_to_json(e.inner_limit);
      arr.push_back(t);
    }
    return arr;
  };
  j["nu_table"] = table_to_json(rep.nu_table);
  j["mu_table"] = table_to_json(rep.mu_table);
  j["tol"] = rep.tol;
  j["separation"] = rep.separation;
  j["detail"] = rep.detail;
  return j;
}

json to_json(const WapSearchResult& res) {
  json j;
  j["verdict"] =
      res.verdict == WapVerdict::ViolationFound ? "violation_found" : "no_violation_found";
  j["pairs_probed"] = res.pairs_probed;
  if (res.pair_index) j["pair_index"] = *res.pair_index;
  if (res.counterexample) j["counterexample"] = to_json(*res.counterexample);
  return j;
}

json to_json(const ReproResult& res) {
  json j;
  j["claim_id"] = res.claim_id;
  json values = json::array();
  for (const ReproEntry& e : res.values) {
    json v;
    v["label"] = e.label;
    v["computed"] = finite_or_marked(e.computed);
    v["target"] = finite_or_marked(e.target);
    v["deviation"] = finite_or_marked(e.deviation);
    values.push_back(v);
  }
  j["values"] = values;
  j["tolerance"] = res.tolerance;
  j["max_deviation"] = finite_or_marked(res.max_deviation);
  j["pass"] = res.pass;
  return j;
}

json make_record(const std::string& command, RecordStatus status, json results,
                 const ConfigMap& effective_config, double wall_time_ms) {
  json rec;
  rec["job_id"] = job_id_of(effective_config);
  rec["command"] = command;
  rec["status"] = to_string(status);
  rec["results"] = std::move(results);
  rec["wall_time_ms"] = wall_time_ms;
  rec["tool_version"] = kToolVersion;
  rec["config_echo"] = serialize_config(effective_config);
  return rec;
}

}  // namespace ergosplit
