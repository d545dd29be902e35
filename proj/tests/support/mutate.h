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

#include <random>
#include <string>
#include <vector>

namespace testing_support {

/// Applies 1-4 random edits (byte flips, deletions, token insertions,
/// duplications, truncation) to a seed document.
std::string mutate(const std::string &seed, const std::vector<std::string> &dictionary, std::mt19937_64 &rng);

/// Keywords and punctuation worth splicing into inputs of each dialect.
const std::vector<std::string> &fuzz_dictionary(const std::string &dialect);

}  // namespace testing_support
