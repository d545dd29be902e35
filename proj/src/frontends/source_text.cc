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

#include "source_text.h"

#include <algorithm>

namespace qbridge::detail {

SourceText::SourceText(std::string_view text, std::string dialect)
    : text_(text), dialect_(std::move(dialect)) {
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < text_.size(); ++i) {
        if (text_[i] == '\n') {
            line_starts_.push_back(i + 1);
        }
    }
}

std::pair<std::size_t, std::size_t> SourceText::line_column(std::size_t offset) const {
    if (text_.empty()) {
        return {1, 1};
    }
    offset = std::min(offset, text_.size() - 1);
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    std::size_t line_index = static_cast<std::size_t>(it - line_starts_.begin()) - 1;
    return {line_index + 1, offset - line_starts_[line_index] + 1};
}

std::string SourceText::line_text(std::size_t line) const {
    if (line == 0 || line > line_starts_.size()) {
        return {};
    }
    std::size_t start = line_starts_[line - 1];
    std::size_t end = text_.find('\n', start);
    if (end == std::string_view::npos) {
        end = text_.size();
    }
    std::string_view out = text_.substr(start, end - start);
    if (!out.empty() && out.back() == '\r') {
        out.remove_suffix(1);
    }
    return std::string(out);
}

void SourceText::fail(ErrorKind kind, std::size_t offset, const std::string &message) const {
    auto [line, column] = line_column(offset);
    throw ParseError(kind, dialect_, line, column, message, line_text(line));
}

}  // namespace qbridge::detail
