// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#include "ergosplit/runner.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "ergosplit/claims.hpp"
#include "ergosplit/report.hpp"

namespace ergosplit {

namespace {

using nlohmann::json;

MatrixSemigroup build_matrix_model(const JobConfig& cfg) {
  if (!cfg.model || cfg.model->kind != "matrix")
    throw ConfigError("this command needs a matrix model ([model] kind = matrix)");
  const ModelSpec& ms = *cfg.model;
  Matrix a(ms.dim, ms.dim);
  for (int r = 0; r < ms.dim; ++r)
    for (int c = 0; c < ms.dim; ++c) a(r, c) = ms.entries[static_cast<std::size_t>(r * ms.dim + c)];
  return MatrixSemigroup(a);
}

Vector require_x(const JobConfig& cfg, Eigen::Index dim) {
  if (!cfg.x) throw ConfigError("this command needs [input] x = (re,im) ...");
  if (cfg.x->size() != dim)
    throw ConfigError("input.x: expected " + std::to_string(dim) + " entries, got " +
                      std::to_string(cfg.x->size()));
  return *cfg.x;
}

Signal build_signal(const JobConfig& cfg) {
  if (!cfg.signal) throw ConfigError("this command needs a [signal] section");
  const SignalSpec& ss = cfg.signal.value();
  if (ss.name == "log_sine") return make_log_sine_signal();
  if (ss.name == "binary_log_sine") return make_binary_log_sine_signal();
  if (ss.name == "windowed_binary_log_sine") return make_windowed_binary_log_sine_signal();
  if (ss.name == "constant") return Signal::constant(ss.constant_value);
  if (ss.name == "sine_sum") {
    if (ss.freqs.empty()) throw ConfigError("signal sine_sum needs signal.freqs");
    return Signal::sine_sum(ss.freqs);
  }
  throw ConfigError("unknown signal builtin '" + ss.name + "'");
}

SequenceFamily build_family(const FamilySpec& fs) {
  if (fs.kind == "exponential")
    return SequenceFamily::exponential(fs.tau, fs.m_min, fs.m_max, fs.stride);
  if (fs.kind == "power16") return SequenceFamily::power16(fs.m_min, fs.m_max, fs.stride);
  if (fs.kind == "power16_shift")
    return SequenceFamily::power16_shift(fs.m_min, fs.m_max, fs.stride);
  if (fs.kind == "arithmetic")
    return SequenceFamily::arithmetic(fs.a, fs.d, fs.m_min, fs.m_max, fs.stride);
  throw ConfigError("unknown family kind '" + fs.kind + "'");
}

struct Emitter {
  std::ostream& out;
  std::ofstream file;
  bool to_file = false;

  Emitter(std::ostream& o, const std::string& dir) : out(o) {
    if (!dir.empty()) {
      std::filesystem::create_directories(dir);
      file.open(std::filesystem::path(dir) / "report.jsonl", std::ios::app);
      to_file = file.is_open();
    }
  }

  void emit(const json& record) {
    const std::string line = record.dump();
    out << line << "\n";
    if (to_file) file << line << "\n";
  }
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int run_split(const JobConfig& cfg, Emitter& emitter) {
  const auto t0 = std::chrono::steady_clock::now();
  const MatrixSemigroup model = build_matrix_model(cfg);
  const Vector x = require_x(cfg, model.dim());

  SplitOptions opt;
  opt.schedule = {cfg.r0, cfg.k_max};
  opt.tol = cfg.tol;
  opt.quad.h = cfg.quad_h;
  if (cfg.seed != 0) {
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss;
    Vector probe(model.dim());
    for (Eigen::Index i = 0; i < model.dim(); ++i) probe(i) = Complex(gauss(rng), gauss(rng));
    opt.extra_probes.push_back(probe);
  }

  const SplitReport rep = jdlg_split(model, x, opt);
  bool converged = true;
  for (const LimitEstimate& est : rep.component_estimates) converged = converged && est.converged;

  json results;
  results["split"] = to_json(rep);
  const RecordStatus status = converged ? RecordStatus::Pass : RecordStatus::Inconclusive;
  emitter.emit(make_record("split", status, results, cfg.raw, ms_since(t0)));
  return status == RecordStatus::Pass ? kExitPass : kExitInconclusive;
}

int run_mean(const JobConfig& cfg, Emitter& emitter) {
  const auto t0 = std::chrono::steady_clock::now();
  const MatrixSemigroup model = build_matrix_model(cfg);
  const Vector x = require_x(cfg, model.dim());

  const LimitEstimate est =
      weighted_mean(model, x, cfg.mean_omega, Schedule{cfg.r0, cfg.k_max}, cfg.tol,
                    QuadOptions{cfg.quad_h, 6});
  json results;
  results["mean"] = to_json(est);
  results["omega"] = cfg.mean_omega;
  const RecordStatus status = est.converged ? RecordStatus::Pass : RecordStatus::Inconclusive;
  emitter.emit(make_record("mean", status, results, cfg.raw, ms_since(t0)));
  return status == RecordStatus::Pass ? kExitPass : kExitInconclusive;
}

int run_wap(const JobConfig& cfg, Emitter& emitter) {
  const auto t0 = std::chrono::steady_clock::now();
  const Signal signal = build_signal(cfg);

  ProbeOptions opt;
  opt.tol = cfg.tol;
  opt.separation = cfg.separation;

  json results;
  RecordStatus status = RecordStatus::Pass;
  if (!cfg.use_default_bank) {
    const DoubleLimitReport rep =
        double_limit_probe(signal, build_family(*cfg.family_a), build_family(*cfg.family_b), opt);
    results["double_limit"] = to_json(rep);
    if (rep.verdict == DoubleLimitVerdict::Inconclusive) status = RecordStatus::Inconclusive;
  } else {
    const WapSearchResult res = wap_verdict(signal, default_family_bank(), 64, opt);
    results["wap_search"] = to_json(res);
  }
  emitter.emit(make_record("wap", status, results, cfg.raw, ms_since(t0)));
  return status == RecordStatus::Pass ? kExitPass : kExitInconclusive;
}

int run_repro(const JobConfig& cfg, Emitter& emitter) {
  if (cfg.claim.empty()) throw ConfigError("repro needs a claim id ([repro] claim = ... )");
  const auto t0 = std::chrono::steady_clock::now();
  const ReproResult res = run_claim(cfg.claim);
  json results;
  results["repro"] = to_json(res);
  const RecordStatus status = res.pass ? RecordStatus::Pass : RecordStatus::Fail;
  emitter.emit(make_record("repro", status, results, cfg.raw, ms_since(t0)));
  return status == RecordStatus::Pass ? kExitPass : kExitFail;
}

std::ofstream open_orbit_csv(const JobConfig& cfg, std::filesystem::path& csv_path) {
  std::ofstream csv;
  if (!cfg.out_dir.empty()) {
    std::filesystem::create_directories(cfg.out_dir);
    csv_path = std::filesystem::path(cfg.out_dir) / "orbit.csv";
    csv.open(csv_path);
  }
  return csv;
}

int run_orbit(const JobConfig& cfg, Emitter& emitter) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!(cfg.orbit_t_step > 0) || !(cfg.orbit_t_max > 0))
    throw ConfigError("orbit needs positive t_max and t_step");
  if (!cfg.model) throw ConfigError("orbit needs a [model] section");

  json results;
  std::filesystem::path csv_path;
  std::ofstream csv = open_orbit_csv(cfg, csv_path);
  int rows = 0;

  if (cfg.model->kind == "matrix") {
    const MatrixSemigroup model = build_matrix_model(cfg);
    const Vector x = require_x(cfg, model.dim());
    const bool has_dual = cfg.x_sun.has_value() && cfg.x_sun->size() == model.dim();
    const Signal f = has_dual ? model.orbit_function(x, *cfg.x_sun) : Signal();
    if (csv.is_open()) {
      csv << "t";
      for (Eigen::Index i = 0; i < model.dim(); ++i) csv << ",re_" << i << ",im_" << i;
      if (has_dual) csv << ",pair_re,pair_im";
      csv << "\n";
    }
    for (double t = 0.0; t <= cfg.orbit_t_max + 1e-12; t += cfg.orbit_t_step) {
      const Vector v = model.apply(t, x);
      if (csv.is_open()) {
        csv << t;
        for (Eigen::Index i = 0; i < model.dim(); ++i)
          csv << "," << v(i).real() << "," << v(i).imag();
        if (has_dual) {
          const Complex p = f(t);
          csv << "," << p.real() << "," << p.imag();
        }
        csv << "\n";
      }
      ++rows;
    }
  } else if (cfg.model->kind == "sequence") {
    const SequenceSpaceModel model(cfg.model->truncation);
    if (csv.is_open()) {
      csv << "t";
      for (int i = 1; i <= model.truncation(); ++i) csv << ",coord_" << i;
      csv << "\n";
    }
    for (double t = 0.0; t <= cfg.orbit_t_max + 1e-12; t += cfg.orbit_t_step) {
      const Eigen::VectorXd v = model.value(t);
      if (csv.is_open()) {
        csv << t;
        for (int i = 0; i < v.size(); ++i) csv << "," << v(i);
        csv << "\n";
      }
      ++rows;
    }
  } else if (cfg.model->kind == "translation") {
    const Signal f = build_signal(cfg);
    if (csv.is_open()) csv << "t,re,im\n";
    for (double t = 0.0; t <= cfg.orbit_t_max + 1e-12; t += cfg.orbit_t_step) {
      const Complex v = f(t);
      if (csv.is_open()) csv << t << "," << v.real() << "," << v.imag() << "\n";
      ++rows;
    }
  } else {
    throw ConfigError("orbit: unsupported model kind '" + cfg.model->kind + "'");
  }

  results["rows"] = rows;
  if (!csv_path.empty()) results["csv"] = csv_path.string();
  emitter.emit(make_record("orbit", RecordStatus::Pass, results, cfg.raw, ms_since(t0)));
  return kExitPass;
}

}  // namespace

int run_job(const JobConfig& cfg, std::ostream& out) {
  Emitter emitter(out, cfg.out_dir);
  switch (cfg.command) {
    case Command::Split:
      return run_split(cfg, emitter);
    case Command::Mean:
      return run_mean(cfg, emitter);
    case Command::Wap:
      return run_wap(cfg, emitter);
    case Command::Repro:
      return run_repro(cfg, emitter);
    case Command::Orbit:
      return run_orbit(cfg, emitter);
  }
  throw std::logic_error("unreachable command");
}

}  // namespace ergosplit
