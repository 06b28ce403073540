// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "ergosplit/repro.hpp"

namespace ergosplit {

struct ClaimInfo {
  std::string id;
  std::string summary;
  double tolerance = 0.0;
};

// Static registry of reproducible claims, deterministic order, unique ids.
const std::vector<ClaimInfo>& list_claims();

// Runs one registered claim with its pinned tolerance. Unknown id -> throws
// std::invalid_argument.
ReproResult run_claim(const std::string& id);

}  // namespace ergosplit
