// Copyright 2026 The qbridge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qbridge/simulator.h"

namespace qbridge {

nlohmann::ordered_json sim_result_to_json(const SimResult &result) {
    nlohmann::ordered_json out;
    out["mode"] = result.mode == SimMode::Exact ? "exact" : "trajectory";
    out["probabilities"] = nlohmann::ordered_json::object();
    for (const auto &[key, p] : result.probabilities) {
        out["probabilities"][key] = p;
    }
    if (result.full_state_probabilities) {
        auto &full = out["full_state_probabilities"] = nlohmann::ordered_json::object();
        for (const auto &[key, p] : *result.full_state_probabilities) {
            full[key] = p;
        }
    }
    if (result.shots) {
        auto &shots = out["shots"] = nlohmann::ordered_json::object();
        for (const auto &[key, n] : *result.shots) {
            shots[key] = n;
        }
    }
    if (result.snapshots) {
        out["snapshots"] = *result.snapshots;
    }
    out["seed"] = result.seed;
    return out;
}

}  // namespace qbridge
