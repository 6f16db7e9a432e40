// Copyright 2026 The GASP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <json.hpp>

#include "gasp/evolution.hpp"
#include "gasp/noise.hpp"

namespace gasp {

using Json = nlohmann::ordered_json;

/// Version of every JSON document written by this library.
inline constexpr int kSchemaVersion = 1;

Json to_json(const CircuitStats& s);
Json to_json(const NoiseModel& noise);
Json to_json(const EvolutionConfig& config);
/// Basis index (decimal string) -> count, in increasing index order.
Json counts_to_json(const Counts& counts);
/// RunReport document. `wall_time` is written as 0 when timing is excluded.
Json to_json(const RunReport& report, bool include_timing = true);

}  // namespace gasp
