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

#include "qbridge/expr.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "number_format.h"

namespace qbridge {

Expr Expr::number(double value) {
    Expr e;
    e.kind_ = Kind::Number;
    e.value_ = value;
    return e;
}

Expr Expr::pi() {
    Expr e;
    e.kind_ = Kind::Pi;
    return e;
}

Expr Expr::param(std::size_t index) {
    Expr e;
    e.kind_ = Kind::Param;
    e.param_index_ = index;
    return e;
}

Expr Expr::neg(Expr operand) {
    Expr e;
    e.kind_ = Kind::Neg;
    e.children_.push_back(std::move(operand));
    return e;
}

Expr Expr::binary(Kind op, Expr lhs, Expr rhs) {
    Expr e;
    e.kind_ = op;
    e.children_.push_back(std::move(lhs));
    e.children_.push_back(std::move(rhs));
    return e;
}

Expr Expr::call(std::string function, Expr argument) {
    Expr e;
    e.kind_ = Kind::Call;
    e.function_ = std::move(function);
    e.children_.push_back(std::move(argument));
    return e;
}

bool is_known_function(std::string_view name) {
    return name == "sin" || name == "cos" || name == "tan" || name == "exp" || name == "ln" ||
           name == "sqrt";
}

double apply_function(std::string_view name, double x) {
    if (name == "sin") return std::sin(x);
    if (name == "cos") return std::cos(x);
    if (name == "tan") return std::tan(x);
    if (name == "exp") return std::exp(x);
    if (name == "ln") return std::log(x);
    if (name == "sqrt") return std::sqrt(x);
    throw std::invalid_argument("unknown function " + std::string(name));
}

double Expr::evaluate(std::span<const double> params) const {
    switch (kind_) {
        case Kind::Number:
            return value_;
        case Kind::Pi:
            return std::numbers::pi;
        case Kind::Param:
            if (param_index_ >= params.size()) {
                throw std::out_of_range("macro parameter index out of range");
            }
            return params[param_index_];
        case Kind::Neg:
            return -children_[0].evaluate(params);
        case Kind::Add:
            return children_[0].evaluate(params) + children_[1].evaluate(params);
        case Kind::Sub:
            return children_[0].evaluate(params) - children_[1].evaluate(params);
        case Kind::Mul:
            return children_[0].evaluate(params) * children_[1].evaluate(params);
        case Kind::Div:
            return children_[0].evaluate(params) / children_[1].evaluate(params);
        case Kind::Pow:
            return std::pow(children_[0].evaluate(params), children_[1].evaluate(params));
        case Kind::Call:
            return apply_function(function_, children_[0].evaluate(params));
    }
    return 0;
}

std::size_t Expr::arity() const {
    std::size_t result = kind_ == Kind::Param ? param_index_ + 1 : 0;
    for (const auto &child : children_) {
        result = std::max(result, child.arity());
    }
    return result;
}

std::string Expr::to_string(std::span<const std::string> param_names) const {
    auto binop = [&](const char *op) {
        return "(" + children_[0].to_string(param_names) + op +
               children_[1].to_string(param_names) + ")";
    };
    switch (kind_) {
        case Kind::Number:
            return detail::format_real(value_);
        case Kind::Pi:
            return "pi";
        case Kind::Param:
            if (param_index_ < param_names.size()) {
                return param_names[param_index_];
            }
            return "p" + std::to_string(param_index_);
        case Kind::Neg:
            return "-" + children_[0].to_string(param_names);
        case Kind::Add:
            return binop("+");
        case Kind::Sub:
            return binop("-");
        case Kind::Mul:
            return binop("*");
        case Kind::Div:
            return binop("/");
        case Kind::Pow:
            return binop("^");
        case Kind::Call:
            return function_ + "(" + children_[0].to_string(param_names) + ")";
    }
    return "";
}

bool Expr::operator==(const Expr &other) const {
    if (kind_ != other.kind_) {
        return false;
    }
    switch (kind_) {
        case Kind::Number:
            return value_ == other.value_;
        case Kind::Param:
            return param_index_ == other.param_index_;
        case Kind::Call:
            return function_ == other.function_ && children_ == other.children_;
        default:
            return children_ == other.children_;
    }
}

}  // namespace qbridge
