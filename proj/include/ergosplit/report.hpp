// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include <json.hpp>

#include "ergosplit/config.hpp"
#include "ergosplit/ergodic.hpp"
#include "ergosplit/repro.hpp"
#include "ergosplit/wap.hpp"

namespace ergosplit {

inline constexpr const char* kToolVersion = "0.1.0";

enum class RecordStatus { Pass, Fail, Inconclusive };

const char* to_string(RecordStatus s);

nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const LimitEstimate& est);
nlohmann::json to_json(const SplitReport& rep);
nlohmann::json to_json(const DoubleLimitReport& rep);
nlohmann::json to_json(const WapSearchResult& res);
nlohmann::json to_json(const ReproResult& res);

// One line-delimited report record. `wall_time_ms` is the only field allowed
// to differ between identical runs.
nlohmann::json make_record(const std::string& command, RecordStatus status,
                           nlohmann::json results, const ConfigMap& effective_config,
                           double wall_time_ms);

}  // namespace ergosplit
