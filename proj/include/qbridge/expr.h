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

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace qbridge {

/// Parameter expression inside a gate macro body, e.g. `theta/2` or
/// `-(phi+lambda)`. Free symbols are the formal parameters of the macro,
/// referenced by position.
class Expr {
   public:
    enum class Kind { Number, Pi, Param, Neg, Add, Sub, Mul, Div, Pow, Call };

    static Expr number(double value);
    static Expr pi();
    static Expr param(std::size_t index);
    static Expr neg(Expr operand);
    static Expr binary(Kind op, Expr lhs, Expr rhs);
    /// Supported functions: sin, cos, tan, exp, ln, sqrt.
    static Expr call(std::string function, Expr argument);

    Kind kind() const {
        return kind_;
    }
    double value() const {
        return value_;
    }
    std::size_t param_index() const {
        return param_index_;
    }
    const std::string &function() const {
        return function_;
    }
    const Expr &lhs() const {
        return children_[0];
    }
    const Expr &rhs() const {
        return children_[1];
    }

    double evaluate(std::span<const double> params) const;

    /// Largest referenced parameter index plus one (0 if none).
    std::size_t arity() const;

    /// Renders with fully parenthesized binary operations so that re-parsing
    /// reproduces the same tree. `param_names` supplies formal names.
    std::string to_string(std::span<const std::string> param_names) const;

    bool operator==(const Expr &other) const;

   private:
    Kind kind_ = Kind::Number;
    double value_ = 0;
    std::size_t param_index_ = 0;
    std::string function_;
    std::vector<Expr> children_;
};

bool is_known_function(std::string_view name);
double apply_function(std::string_view name, double x);

}  // namespace qbridge
