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

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qbridge/dialect.h"
#include "qbridge/simulator.h"

namespace qbridge {

/// The code-runner pipeline: detect (unless given) -> parse ->
/// expand_macros -> simulate. Errors are re-thrown with their stage set.
SimResult run_source(std::string_view source, std::optional<SourceDialect> dialect,
                     const RunOptions &options,
                     std::optional<std::string_view> filename_hint = std::nullopt);

enum class ReportFormat { Plain, Json };

/// Plain: outcomes sorted by descending probability (ties lexicographic),
/// aligned columns, 6 decimals; a count column is added when shots were
/// sampled. Json: the SimResult JSON.
std::string run_report(const SimResult &result, ReportFormat format);

}  // namespace qbridge
