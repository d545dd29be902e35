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

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbridge/error.h"

namespace qbridge::detail {

/// Maps byte offsets to 1-based line/column pairs and builds ParseErrors
/// whose position always lies inside the text.
class SourceText {
   public:
    SourceText(std::string_view text, std::string dialect);

    std::string_view text() const {
        return text_;
    }
    const std::string &dialect() const {
        return dialect_;
    }

    /// Offsets at or past the end are clamped to the last character.
    std::pair<std::size_t, std::size_t> line_column(std::size_t offset) const;
    std::string line_text(std::size_t line) const;

    [[noreturn]] void fail(ErrorKind kind, std::size_t offset, const std::string &message) const;

   private:
    std::string_view text_;
    std::string dialect_;
    std::vector<std::size_t> line_starts_;
};

}  // namespace qbridge::detail
