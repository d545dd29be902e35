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

#include <functional>
#include <optional>
#include <vector>

#include "lexer.h"
#include "qbridge/expr.h"

namespace qbridge::detail {

/// Precedence-climbing parser for real-valued parameter expressions, shared
/// by the textual frontends:
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := '-' unary | power
///   power := primary ('^' unary)?
///   primary := number | pi | identifier | function '(' expr ')' | '(' expr ')'
class ExprParser {
   public:
    /// Maps a non-keyword identifier to an expression (formal parameter) or
    /// throws a positioned error itself when it is not allowed.
    using IdentifierResolver = std::function<Expr(const Token &)>;

    ExprParser(const SourceText &source, const std::vector<Token> &tokens, std::size_t &pos,
               IdentifierResolver resolver)
        : source_(source), tokens_(tokens), pos_(pos), resolver_(std::move(resolver)) {
    }

    Expr parse();

   private:
    Expr parse_sum(std::size_t depth);
    Expr parse_term(std::size_t depth);
    Expr parse_unary(std::size_t depth);
    Expr parse_primary(std::size_t depth);
    const Token &peek() const {
        return tokens_[pos_];
    }
    void enter(std::size_t depth) const;

    const SourceText &source_;
    const std::vector<Token> &tokens_;
    std::size_t &pos_;
    IdentifierResolver resolver_;
};

}  // namespace qbridge::detail
