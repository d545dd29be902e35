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

#include <cstdint>
#include <string>
#include <vector>

#include "qbridge/dialect.h"

namespace qbridge {

struct CatalogExample {
    std::string name;
    SourceDialect dialect;
    std::string description;
    std::string source;
    /// Suggested shot count; non-zero when the circuit needs trajectories.
    std::uint64_t shots = 0;
};

/// bell, ghz-3, qft-2 and teleportation.
const std::vector<CatalogExample> &examples_catalog();

const CatalogExample *find_example(std::string_view name);

}  // namespace qbridge
