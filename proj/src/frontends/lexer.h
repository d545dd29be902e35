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
#include <string_view>
#include <vector>

#include "source_text.h"

namespace qbridge::detail {

enum class TokenKind { Identifier, Integer, Real, String, Punct, Newline, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;  // identifier/punct text, string contents, number spelling
    std::size_t offset = 0;
    double real = 0;
    std::uint64_t integer = 0;
    bool integer_overflow = false;

    bool is(TokenKind k, std::string_view t) const {
        return kind == k && text == t;
    }
    bool is_punct(std::string_view t) const {
        return is(TokenKind::Punct, t);
    }
};

struct LexerConfig {
    std::string_view line_comment;  // "//" or "#"
    bool newline_tokens = false;
    /// Characters allowed after the first character of an identifier in
    /// addition to letters, digits and '_'.
    std::string_view extra_identifier_chars;
};

/// Shared scanner for the textual dialects. Produces the full token list
/// terminated by an End token, or throws a Syntax ParseError.
std::vector<Token> tokenize(const SourceText &source, const LexerConfig &config);

}  // namespace qbridge::detail
