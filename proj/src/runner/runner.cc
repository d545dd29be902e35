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

#include "qbridge/runner.h"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "qbridge/error.h"
#include "qbridge/frontends.h"
#include "qbridge/passes.h"

namespace qbridge {

namespace {

template <typename F>
auto staged(const char *stage, F &&body) -> decltype(body()) {
    try {
        return body();
    } catch (Error &e) {
        e.set_stage(stage);
        throw;
    }
}

std::string fixed6(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", p);
    return buf;
}

void append_table(std::string &out, const std::map<std::string, double> &probs,
                  const std::optional<std::map<std::string, std::uint64_t>> &counts) {
    std::vector<std::pair<std::string, double>> rows(probs.begin(), probs.end());
    std::stable_sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) {
        if (a.second != b.second) {
            return a.second > b.second;
        }
        return a.first < b.first;
    });
    std::size_t key_width = 0;
    std::size_t count_width = 0;
    for (const auto &[key, p] : rows) {
        key_width = std::max(key_width, key.size());
        if (counts) {
            auto it = counts->find(key);
            count_width = std::max(count_width, std::to_string(it == counts->end() ? 0 : it->second).size());
        }
    }
    for (const auto &[key, p] : rows) {
        out += key;
        out.append(key_width - key.size() + 2, ' ');
        out += fixed6(p);
        if (counts) {
            auto it = counts->find(key);
            std::string n = std::to_string(it == counts->end() ? 0 : it->second);
            out.append(count_width - n.size() + 2, ' ');
            out += n;
        }
        out += '\n';
    }
}

}  // namespace

SimResult run_source(std::string_view source, std::optional<SourceDialect> dialect, const RunOptions &options,
                     std::optional<std::string_view> filename_hint) {
    SourceDialect d = dialect ? *dialect : staged("detect", [&] { return detect_dialect(source, filename_hint); });
    Circuit circuit = staged("parse", [&] { return parse(d, source); });
    if (!circuit.gate_defs.empty()) {
        circuit = staged("expand", [&] { return expand_macros(circuit); });
    }
    return staged("simulate", [&] { return simulate(circuit, options); });
}

std::string run_report(const SimResult &result, ReportFormat format) {
    if (format == ReportFormat::Json) {
        return sim_result_to_json(result).dump(2) + "\n";
    }
    std::string out;
    if (result.probabilities.empty() && result.full_state_probabilities) {
        out += "no measurements; full-state distribution:\n";
        append_table(out, *result.full_state_probabilities, result.shots);
    } else {
        append_table(out, result.probabilities, result.shots);
    }
    if (result.snapshots) {
        out += "per-moment P(1):\n";
        for (std::size_t m = 0; m < result.snapshots->size(); ++m) {
            out += "  " + std::to_string(m) + ":";
            for (double p : (*result.snapshots)[m]) {
                out += ' ' + fixed6(p);
            }
            out += '\n';
        }
    }
    return out;
}

}  // namespace qbridge
