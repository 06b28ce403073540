// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

#include "ergosplit/config.hpp"

namespace ergosplit {

// Exit codes of the batch front-end.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;           // a claim or check failed
inline constexpr int kExitConfigError = 2;    // config unreadable or invalid
inline constexpr int kExitInconclusive = 3;   // no failure, but nothing conclusive

// Dispatches one job: writes line-delimited report records to `out` (and to
// <out_dir>/report.jsonl plus CSV trajectories when an output dir is set),
// returns the exit code. Config errors are reported by the caller.
int run_job(const JobConfig& cfg, std::ostream& out);

}  // namespace ergosplit
