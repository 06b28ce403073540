// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0
//
// ergosplit: batch front-end for long-time averaging, almost-periodic/flight
// splitting, double-limit probes, and the built-in reproduction claims.
//
//   ergosplit <split|mean|wap|orbit> --config <path> [--out <dir>] [--tol <x>] [--seed <n>]
//   ergosplit repro --claim <id> | --list
//
// Exit codes: 0 all checks passed, 1 a claim failed, 2 config error,
// 3 results inconclusive only.

#include <cstdio>
#include <cstring>
#include <iostream>
#include <string>

#include "ergosplit/claims.hpp"
#include "ergosplit/runner.hpp"
#include "ergosplit/sequence_family.hpp"

namespace {

void print_usage() {
  std::cout << "usage: ergosplit <split|mean|wap|repro|orbit> [options]\n"
               "  --config <path>   job configuration file\n"
               "  --claim <id>      repro: claim id (see 'repro --list')\n"
               "  --list            repro: print the claim registry\n"
               "  --out <dir>       output directory for reports and CSV\n"
               "  --tol <x>         override tolerances.tol\n"
               "  --seed <n>        seed for randomized probe sweeps\n";
}

void print_claims() {
  std::printf("%-12s %-10s %s\n", "id", "tolerance", "summary");
  for (const auto& c : ergosplit::list_claims())
    std::printf("%-12s %-10g %s\n", c.id.c_str(), c.tolerance, c.summary.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ergosplit;

  if (argc < 2) {
    print_usage();
    return kExitConfigError;
  }
  const std::string command = argv[1];
  if (command == "--help" || command == "-h") {
    print_usage();
    return kExitPass;
  }

  std::string config_path, claim, out_dir, tol_override, seed_override;
  bool list = false;
  for (int i = 2; i < argc; ++i) {
    const std::string arg = argv[i];
    const auto next = [&]() -> std::string {
      if (i + 1 >= argc) {
        std::cerr << "missing value for " << arg << "\n";
        std::exit(kExitConfigError);
      }
      return argv[++i];
    };
    if (arg == "--config")
      config_path = next();
    else if (arg == "--claim")
      claim = next();
    else if (arg == "--out")
      out_dir = next();
    else if (arg == "--tol")
      tol_override = next();
    else if (arg == "--seed")
      seed_override = next();
    else if (arg == "--list")
      list = true;
    else {
      std::cerr << "unknown option " << arg << "\n";
      return kExitConfigError;
    }
  }

  try {
    if (command == "repro" && list) {
      print_claims();
      return kExitPass;
    }

    ConfigMap map;
    if (!config_path.empty()) map = load_config_file(config_path);
    map["command"] = command;
    if (!claim.empty()) map["repro.claim"] = claim;
    if (!out_dir.empty()) map["output.dir"] = out_dir;
    if (!tol_override.empty()) map["tolerances.tol"] = tol_override;
    if (!seed_override.empty()) map["run.seed"] = seed_override;
    apply_env_overrides(map);

    const JobConfig cfg = JobConfig::from_map(std::move(map));
    return run_job(cfg, std::cout);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const FamilyRangeError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
