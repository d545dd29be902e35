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

#include "expr_parser.h"

#include "qbridge/frontends.h"

namespace qbridge::detail {

void ExprParser::enter(std::size_t depth) const {
    if (depth > kMaxExpressionDepth) {
        source_.fail(ErrorKind::Syntax, peek().offset, "expression nested too deeply");
    }
}

Expr ExprParser::parse() {
    return parse_sum(0);
}

Expr ExprParser::parse_sum(std::size_t depth) {
    enter(depth);
    Expr lhs = parse_term(depth + 1);
    while (peek().is_punct("+") || peek().is_punct("-")) {
        Expr::Kind op = peek().text == "+" ? Expr::Kind::Add : Expr::Kind::Sub;
        ++pos_;
        lhs = Expr::binary(op, std::move(lhs), parse_term(depth + 1));
    }
    return lhs;
}

Expr ExprParser::parse_term(std::size_t depth) {
    enter(depth);
    Expr lhs = parse_unary(depth + 1);
    while (peek().is_punct("*") || peek().is_punct("/")) {
        Expr::Kind op = peek().text == "*" ? Expr::Kind::Mul : Expr::Kind::Div;
        ++pos_;
        lhs = Expr::binary(op, std::move(lhs), parse_unary(depth + 1));
    }
    return lhs;
}

Expr ExprParser::parse_unary(std::size_t depth) {
    enter(depth);
    if (peek().is_punct("-")) {
        ++pos_;
        return Expr::neg(parse_unary(depth + 1));
    }
    Expr base = parse_primary(depth + 1);
    if (peek().is_punct("^")) {
        ++pos_;
        return Expr::binary(Expr::Kind::Pow, std::move(base), parse_unary(depth + 1));
    }
    return base;
}

Expr ExprParser::parse_primary(std::size_t depth) {
    enter(depth);
    const Token &t = peek();
    switch (t.kind) {
        case TokenKind::Integer:
        case TokenKind::Real:
            ++pos_;
            return Expr::number(t.real);
        case TokenKind::Identifier:
            if (t.text == "pi") {
                ++pos_;
                return Expr::pi();
            }
            if (is_known_function(t.text) && tokens_[pos_ + 1].is_punct("(")) {
                std::string fn = t.text;
                pos_ += 2;
                Expr arg = parse_sum(depth + 1);
                if (!peek().is_punct(")")) {
                    source_.fail(ErrorKind::Syntax, peek().offset, "expected ')' after function argument");
                }
                ++pos_;
                return Expr::call(std::move(fn), std::move(arg));
            } else {
                Expr e = resolver_(t);
                ++pos_;
                return e;
            }
        case TokenKind::Punct:
            if (t.text == "(") {
                ++pos_;
                Expr inner = parse_sum(depth + 1);
                if (!peek().is_punct(")")) {
                    source_.fail(ErrorKind::Syntax, peek().offset, "expected ')'");
                }
                ++pos_;
                return inner;
            }
            break;
        default:
            break;
    }
    source_.fail(ErrorKind::Syntax, t.offset, "expected an expression");
}

}  // namespace qbridge::detail
