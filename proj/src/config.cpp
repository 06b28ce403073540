// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#include "ergosplit/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <numbers>
#include <sstream>

extern char** environ;

namespace ergosplit {

namespace {

// --- tiny expression grammar for numeric literals ---------------------------

struct NumberParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit NumberParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool consume_word(const char* w) {
    skip_ws();
    const std::size_t len = std::strlen(w);
    if (s.compare(pos, len, w) == 0) {
      pos += len;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ConfigError("number literal '" + s + "': " + what + " at position " +
                      std::to_string(pos));
  }

  double parse_expr() {
    double v = parse_term();
    for (;;) {
      if (consume('+'))
        v += parse_term();
      else if (consume('-'))
        v -= parse_term();
      else
        return v;
    }
  }

  double parse_term() {
    double v = parse_factor();
    for (;;) {
      if (consume('*'))
        v *= parse_factor();
      else if (consume('/')) {
        const double d = parse_factor();
        if (d == 0.0) fail("division by zero");
        v /= d;
      } else
        return v;
    }
  }

  double parse_factor() {
    double base = parse_primary();
    if (consume('^')) {
      const double e = parse_primary();
      return std::pow(base, e);
    }
    return base;
  }

  double parse_primary() {
    skip_ws();
    if (consume('-')) return -parse_primary();
    if (consume('(')) {
      const double v = parse_expr();
      if (!consume(')')) fail("missing ')'");
      return v;
    }
    if (consume_word("pi")) return std::numbers::pi;
    if (consume_word("exp")) return wrapped(&NumberParser::identity_exp);
    if (consume_word("sqrt")) return wrapped(&NumberParser::identity_sqrt);
    // plain decimal
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s.substr(pos), &used);
    } catch (const std::exception&) {
      fail("expected a number");
    }
    pos += used;
    return v;
  }

  static double identity_exp(double v) { return std::exp(v); }
  static double identity_sqrt(double v) {
    if (v < 0) throw ConfigError("sqrt of a negative literal");
    return std::sqrt(v);
  }

  double wrapped(double (*fn)(double)) {
    if (!consume('(')) fail("expected '('");
    const double v = parse_expr();
    if (!consume(')')) fail("missing ')'");
    return fn(v);
  }
};

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// "(re,im) (re,im) ..." with each part a numeric literal
std::vector<Complex> parse_complex_list(const std::string& text, const std::string& field) {
  std::vector<Complex> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    if (text[pos] != '(')
      throw ConfigError(field + ": expected '(' in complex entry near '" + text.substr(pos, 12) +
                        "'");
    const std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw ConfigError(field + ": unterminated complex entry");
    const std::string body = text.substr(pos + 1, close - pos - 1);
    const std::size_t comma = body.find(',');
    if (comma == std::string::npos)
      throw ConfigError(field + ": complex entry needs 're,im' in '" + body + "'");
    out.emplace_back(parse_number(body.substr(0, comma)), parse_number(body.substr(comma + 1)));
    pos = close + 1;
  }
  return out;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(parse_number(tok));
  return out;
}

const std::string* find(const ConfigMap& map, const std::string& key) {
  const auto it = map.find(key);
  return it == map.end() ? nullptr : &it->second;
}

double get_number(const ConfigMap& map, const std::string& key, double fallback) {
  const std::string* v = find(map, key);
  return v ? parse_number(*v) : fallback;
}

}  // namespace

double parse_number(const std::string& text) {
  NumberParser p(text);
  const double v = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw ConfigError("number literal '" + text + "': trailing characters");
  if (!std::isfinite(v)) throw ConfigError("number literal '" + text + "': not finite");
  return v;
}

ConfigMap parse_config_text(const std::string& text) {
  ConfigMap map;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw ConfigError("line " + std::to_string(lineno) + ": unterminated section header");
      section = lower(trim(t.substr(1, t.size() - 2)));
      continue;
    }
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = lower(trim(t.substr(0, eq)));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    map[section.empty() ? key : section + "." + key] = value;
  }
  return map;
}

ConfigMap load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

void apply_env_overrides(ConfigMap& map) {
  static const std::string prefix = "ERGOSPLIT_";
  for (char** e = environ; e && *e; ++e) {
    const std::string entry(*e);
    if (entry.compare(0, prefix.size(), prefix) != 0) continue;
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos) continue;
    std::string name = lower(entry.substr(prefix.size(), eq - prefix.size()));
    const std::string value = entry.substr(eq + 1);
    const std::size_t us = name.find('_');
    if (us == std::string::npos) {
      map[name] = value;  // preamble key, e.g. ERGOSPLIT_COMMAND
    } else {
      map[name.substr(0, us) + "." + name.substr(us + 1)] = value;
    }
  }
}

std::string serialize_config(const ConfigMap& map) {
  std::ostringstream out;
  std::string section;
  bool first = true;
  for (const auto& [key, value] : map) {  // std::map: sorted, deterministic
    const std::size_t dot = key.find('.');
    const std::string sec = dot == std::string::npos ? "" : key.substr(0, dot);
    const std::string bare = dot == std::string::npos ? key : key.substr(dot + 1);
    if (sec != section || first) {
      if (!sec.empty()) out << "[" << sec << "]\n";
      section = sec;
    }
    first = false;
    out << bare << " = " << value << "\n";
  }
  return out.str();
}

JobConfig JobConfig::from_map(ConfigMap map) {
  JobConfig cfg;

  const std::string* cmd = find(map, "command");
  if (!cmd) throw ConfigError("missing 'command'");
  const std::string c = lower(*cmd);
  if (c == "split")
    cfg.command = Command::Split;
  else if (c == "mean")
    cfg.command = Command::Mean;
  else if (c == "wap")
    cfg.command = Command::Wap;
  else if (c == "repro")
    cfg.command = Command::Repro;
  else if (c == "orbit")
    cfg.command = Command::Orbit;
  else
    throw ConfigError("unknown command '" + *cmd + "'");

  if (const std::string* kind = find(map, "model.kind")) {
    ModelSpec ms;
    ms.kind = lower(*kind);
    if (ms.kind == "matrix") {
      const std::string* dim = find(map, "model.dim");
      const std::string* entries = find(map, "model.entries");
      if (!dim || !entries) throw ConfigError("matrix model needs model.dim and model.entries");
      ms.dim = static_cast<int>(parse_number(*dim));
      if (ms.dim < 1 || ms.dim > kMaxDim) throw ConfigError("model.dim out of range [1, 64]");
      ms.entries = parse_complex_list(*entries, "model.entries");
      if (static_cast<int>(ms.entries.size()) != ms.dim * ms.dim)
        throw ConfigError("model.entries: expected " + std::to_string(ms.dim * ms.dim) +
                          " entries for dim " + std::to_string(ms.dim) + ", got " +
                          std::to_string(ms.entries.size()));
    } else if (ms.kind == "translation") {
      if (const std::string* d = find(map, "model.domain")) ms.domain = *d;
    } else if (ms.kind == "sequence") {
      ms.truncation = static_cast<int>(get_number(map, "model.truncation", 12));
    } else {
      throw ConfigError("model.kind must be matrix | translation | sequence");
    }
    cfg.model = ms;
  }

  if (const std::string* x = find(map, "input.x")) {
    const auto list = parse_complex_list(*x, "input.x");
    cfg.x = Eigen::Map<const Vector>(list.data(), static_cast<Eigen::Index>(list.size()));
  }
  if (const std::string* xs = find(map, "input.x_sun")) {
    const auto list = parse_complex_list(*xs, "input.x_sun");
    cfg.x_sun = Eigen::Map<const Vector>(list.data(), static_cast<Eigen::Index>(list.size()));
  }

  if (const std::string* name = find(map, "signal.name")) {
    SignalSpec ss;
    ss.name = lower(*name);
    if (const std::string* fr = find(map, "signal.freqs")) ss.freqs = parse_number_list(*fr);
    if (const std::string* cv = find(map, "signal.value")) {
      const auto list = parse_complex_list(*cv, "signal.value");
      if (list.size() != 1) throw ConfigError("signal.value: expected one complex entry");
      ss.constant_value = list[0];
    }
    cfg.signal = ss;
  }

  const auto read_family = [&](const std::string& sec) -> std::optional<FamilySpec> {
    const std::string* kind = find(map, sec + ".kind");
    if (!kind) return std::nullopt;
    FamilySpec fs;
    fs.kind = lower(*kind);
    fs.tau = get_number(map, sec + ".tau", 0.0);
    fs.a = get_number(map, sec + ".a", 0.0);
    fs.d = get_number(map, sec + ".d", 1.0);
    fs.m_min = static_cast<int>(get_number(map, sec + ".m_min", 0));
    fs.m_max = static_cast<int>(get_number(map, sec + ".m_max", 0));
    fs.stride = static_cast<int>(get_number(map, sec + ".stride", 1));
    return fs;
  };
  cfg.family_a = read_family("familya");
  cfg.family_b = read_family("familyb");
  cfg.use_default_bank = !(cfg.family_a && cfg.family_b);

  cfg.tol = get_number(map, "tolerances.tol", cfg.tol);
  cfg.separation = get_number(map, "tolerances.separation", cfg.separation);
  cfg.r0 = get_number(map, "tolerances.r0", cfg.r0);
  cfg.k_max = static_cast<int>(get_number(map, "tolerances.k_max", cfg.k_max));
  cfg.quad_h = get_number(map, "tolerances.quad_h", cfg.quad_h);
  if (!(cfg.tol > 0) || !(cfg.quad_h > 0) || !(cfg.r0 > 0))
    throw ConfigError("tolerances must be positive");

  if (const std::string* cl = find(map, "repro.claim")) cfg.claim = *cl;
  cfg.mean_omega = get_number(map, "mean.omega", 0.0);
  cfg.orbit_t_max = get_number(map, "orbit.t_max", cfg.orbit_t_max);
  cfg.orbit_t_step = get_number(map, "orbit.t_step", cfg.orbit_t_step);
  if (const std::string* od = find(map, "output.dir")) cfg.out_dir = *od;
  cfg.seed = static_cast<unsigned long>(get_number(map, "run.seed", 0.0));

  cfg.raw = std::move(map);
  return cfg;
}

}  // namespace ergosplit
