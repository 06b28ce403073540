// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ergosplit/types.hpp"

namespace ergosplit {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric literal with the closed forms the index sequences are written in:
// decimal, pi, sqrt(x), exp(x), a^b, and +-*/ combinations, e.g.
// "exp(2*pi + pi/2)", "16^3", "3*pi/2".
double parse_number(const std::string& text);

// Flat key/value store with sections: keys are "section.key" (or bare for the
// preamble). Deterministic (sorted) iteration.
using ConfigMap = std::map<std::string, std::string>;

ConfigMap parse_config_text(const std::string& text);
ConfigMap load_config_file(const std::string& path);

// Applies ERGOSPLIT_<SECTION>_<KEY> environment overrides (ERGOSPLIT_COMMAND
// for the preamble key) on top of the parsed map.
void apply_env_overrides(ConfigMap& map);

// Canonical text form; parses back to an equal map.
std::string serialize_config(const ConfigMap& map);

enum class Command { Split, Mean, Wap, Repro, Orbit };

struct ModelSpec {
  std::string kind;  // matrix | translation | sequence
  int dim = 0;
  std::vector<Complex> entries;  // row-major, dim*dim
  std::string domain = "R+";     // translation: R | R+
  int truncation = 12;           // sequence model
};

struct SignalSpec {
  std::string name;                 // builtin name
  std::vector<double> freqs;        // sine_sum
  Complex constant_value{0.0, 0.0}; // constant
};

struct FamilySpec {
  std::string kind;
  double tau = 0.0, a = 0.0, d = 1.0;
  int m_min = 0, m_max = 0, stride = 1;
};

// One batch job: exactly one command plus its validated inputs.
struct JobConfig {
  Command command = Command::Repro;
  ConfigMap raw;  // effective key/value view (echoed into reports)

  std::optional<ModelSpec> model;
  std::optional<Vector> x;
  std::optional<Vector> x_sun;
  std::optional<SignalSpec> signal;
  std::optional<FamilySpec> family_a, family_b;
  bool use_default_bank = true;

  double tol = 1e-6;
  double separation = 1e-2;
  double r0 = 16.0;
  int k_max = 20;
  double quad_h = 1.0 / 64;

  std::string claim;
  double mean_omega = 0.0;
  double orbit_t_max = 20.0;
  double orbit_t_step = 0.25;
  std::string out_dir;
  unsigned long seed = 0;

  static JobConfig from_map(ConfigMap map);
};

}  // namespace ergosplit
