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

#include "lexer.h"

#include <charconv>
#include <cstdlib>

namespace qbridge::detail {

namespace {

bool is_alpha(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

}  // namespace

std::vector<Token> tokenize(const SourceText &source, const LexerConfig &config) {
    std::string_view text = source.text();
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();

    auto push = [&](TokenKind kind, std::size_t start, std::string spelling) {
        Token t;
        t.kind = kind;
        t.offset = start;
        t.text = std::move(spelling);
        tokens.push_back(std::move(t));
    };

    while (i < n) {
        char c = text[i];
        if (c == '\n') {
            if (config.newline_tokens) {
                push(TokenKind::Newline, i, "\n");
            }
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (!config.line_comment.empty() && text.substr(i, config.line_comment.size()) == config.line_comment) {
            while (i < n && text[i] != '\n') {
                ++i;
            }
            continue;
        }
        std::size_t start = i;
        if (is_alpha(c)) {
            ++i;
            // Extra characters such as Quil's '-' must be followed by a letter
            // so that "pi-1" still lexes as an expression.
            while (i < n && (is_alpha(text[i]) || is_digit(text[i]) ||
                             (config.extra_identifier_chars.find(text[i]) != std::string_view::npos &&
                              i + 1 < n && is_alpha(text[i + 1])))) {
                ++i;
            }
            push(TokenKind::Identifier, start, std::string(text.substr(start, i - start)));
            continue;
        }
        if (is_digit(c) || (c == '.' && i + 1 < n && is_digit(text[i + 1]))) {
            bool real = false;
            while (i < n && is_digit(text[i])) {
                ++i;
            }
            if (i < n && text[i] == '.') {
                real = true;
                ++i;
                while (i < n && is_digit(text[i])) {
                    ++i;
                }
            }
            if (i < n && (text[i] == 'e' || text[i] == 'E')) {
                std::size_t j = i + 1;
                if (j < n && (text[j] == '+' || text[j] == '-')) {
                    ++j;
                }
                if (j < n && is_digit(text[j])) {
                    real = true;
                    i = j;
                    while (i < n && is_digit(text[i])) {
                        ++i;
                    }
                }
            }
            std::string spelling(text.substr(start, i - start));
            Token t;
            t.offset = start;
            t.text = spelling;
            t.real = std::strtod(spelling.c_str(), nullptr);
            if (real) {
                t.kind = TokenKind::Real;
            } else {
                t.kind = TokenKind::Integer;
                auto [ptr, ec] = std::from_chars(spelling.data(), spelling.data() + spelling.size(),
                                                 t.integer);
                t.integer_overflow = ec != std::errc();
            }
            tokens.push_back(std::move(t));
            continue;
        }
        if (c == '"') {
            ++i;
            std::string contents;
            while (i < n && text[i] != '"' && text[i] != '\n') {
                contents += text[i];
                ++i;
            }
            if (i >= n || text[i] != '"') {
                source.fail(ErrorKind::Syntax, start, "unterminated string literal");
            }
            ++i;
            push(TokenKind::String, start, std::move(contents));
            continue;
        }
        static constexpr std::string_view two_char[] = {"->", "=="};
        bool matched = false;
        for (auto op : two_char) {
            if (text.substr(i, 2) == op) {
                push(TokenKind::Punct, start, std::string(op));
                i += 2;
                matched = true;
                break;
            }
        }
        if (matched) {
            continue;
        }
        static constexpr std::string_view single = "()[]{},;+-*/^%@:=<>";
        if (single.find(c) != std::string_view::npos) {
            push(TokenKind::Punct, start, std::string(1, c));
            ++i;
            continue;
        }
        std::string shown = (c >= 0x20 && c < 0x7f) ? std::string("'") + c + "'"
                                                    : "byte " + std::to_string(static_cast<unsigned char>(c));
        source.fail(ErrorKind::Syntax, start, "unexpected character " + shown);
    }
    Token end;
    end.kind = TokenKind::End;
    end.offset = n;
    tokens.push_back(std::move(end));
    return tokens;
}

}  // namespace qbridge::detail
