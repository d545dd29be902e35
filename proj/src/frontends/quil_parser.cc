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

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "expr_parser.h"
#include "common/dialect_tables.h"
#include "lexer.h"
#include "qbridge/frontends.h"

namespace qbridge {

namespace {

using detail::ExprParser;
using detail::SourceText;
using detail::Token;
using detail::TokenKind;

constexpr std::size_t kMaxParsedOps = std::size_t{1} << 20;

const std::set<std::string, std::less<>> &unsupported_words() {
    static const std::set<std::string, std::less<>> words = {
        "HALT",     "LABEL",       "JUMP",        "JUMP-WHEN",  "JUMP-UNLESS", "WAIT",
        "DEFGATE",  "DEFCIRCUIT",  "DEFCAL",      "DEFFRAME",   "DEFWAVEFORM", "DAGGER",
        "CONTROLLED", "FORKED",    "NEG",         "NOT",        "AND",         "IOR",
        "XOR",      "MOVE",        "EXCHANGE",    "CONVERT",    "ADD",         "SUB",
        "MUL",      "DIV",         "LOAD",        "STORE",      "EQ",          "GT",
        "GE",       "LT",          "LE",          "PULSE",      "CAPTURE",     "RAW-CAPTURE",
        "DELAY",    "FENCE",       "SET-FREQUENCY", "SET-PHASE", "SHIFT-PHASE", "SHIFT-FREQUENCY",
        "SET-SCALE", "SWAP-PHASES", "INCLUDE",    "ISWAP",      "PSWAP",       "XY",
        "CPHASE00", "CPHASE01",    "CPHASE10",    "TRUE",       "FALSE",       "OR",
    };
    return words;
}

struct PendingMeasure {
    std::size_t op_index;
    std::string creg;
    std::uint32_t bit;
    std::size_t offset;
};

class QuilParser {
   public:
    explicit QuilParser(std::string_view text)
        : source_(text, "quil2"),
          tokens_(detail::tokenize(source_, detail::LexerConfig{"#", true, "-"})) {
    }

    Circuit parse() {
        while (peek().kind != TokenKind::End) {
            if (at_separator()) {
                advance();
                continue;
            }
            parse_instruction();
            end_instruction();
        }
        resolve_measures();
        Circuit c = Circuit::with_qubits(num_qubits_);
        c.cregs = std::move(cregs_);
        c.ops = std::move(ops_);
        return c;
    }

   private:
    const Token &peek() const {
        return tokens_[pos_];
    }
    const Token &advance() {
        const Token &t = tokens_[pos_];
        if (pos_ + 1 < tokens_.size()) {
            ++pos_;
        }
        return t;
    }
    bool at_separator() const {
        return peek().kind == TokenKind::Newline || peek().is_punct(";");
    }
    [[noreturn]] void fail(ErrorKind kind, std::size_t offset, const std::string &msg) const {
        source_.fail(kind, offset, msg);
    }
    std::string found() const {
        const Token &t = peek();
        if (t.kind == TokenKind::End) {
            return " but reached end of input";
        }
        if (t.kind == TokenKind::Newline) {
            return " but reached end of line";
        }
        return " but found '" + t.text + "'";
    }
    void expect(std::string_view punct) {
        if (!peek().is_punct(punct)) {
            fail(ErrorKind::Syntax, peek().offset, "expected '" + std::string(punct) + "'" + found());
        }
        advance();
    }
    void end_instruction() {
        if (peek().kind == TokenKind::End) {
            return;
        }
        if (!at_separator()) {
            fail(ErrorKind::Syntax, peek().offset, "expected end of instruction" + found());
        }
        advance();
    }

    void push(Op op, std::size_t offset) {
        if (ops_.size() >= kMaxParsedOps) {
            fail(ErrorKind::Semantic, offset, "program has too many instructions");
        }
        ops_.push_back(std::move(op));
    }

    Qubit parse_qubit() {
        const Token &t = peek();
        if (t.kind == TokenKind::Identifier) {
            fail(ErrorKind::UnsupportedConstruct, t.offset,
                 "qubit variables are not supported; use an integer qubit index");
        }
        if (t.kind != TokenKind::Integer) {
            fail(ErrorKind::Syntax, t.offset, "expected a qubit index" + found());
        }
        if (t.integer_overflow || t.integer >= kMaxParsedQubits) {
            fail(ErrorKind::Semantic, t.offset, "qubit index " + t.text + " is too large");
        }
        advance();
        auto q = static_cast<Qubit>(t.integer);
        num_qubits_ = std::max(num_qubits_, q + 1);
        return q;
    }

    void parse_instruction() {
        const Token &head = peek();
        if (head.kind != TokenKind::Identifier) {
            fail(ErrorKind::Syntax, head.offset, "expected an instruction" + found());
        }
        const std::string &word = head.text;
        if (word == "PRAGMA") {
            while (peek().kind != TokenKind::Newline && peek().kind != TokenKind::End) {
                advance();
            }
            return;
        }
        if (word == "NOP") {
            advance();
            return;
        }
        if (word == "DECLARE") {
            parse_declare();
            return;
        }
        if (word == "MEASURE") {
            parse_measure();
            return;
        }
        if (word == "RESET") {
            advance();
            if (at_separator() || peek().kind == TokenKind::End) {
                fail(ErrorKind::UnsupportedConstruct, head.offset,
                     "RESET without a qubit is not supported; name the qubit to reset");
            }
            Qubit q = parse_qubit();
            push(ResetOp{q}, head.offset);
            return;
        }
        if (unsupported_words().contains(word)) {
            fail(ErrorKind::UnsupportedConstruct, head.offset, "'" + word + "' is not supported");
        }
        const auto *gate = detail::find_quil_gate(word);
        if (gate == nullptr) {
            fail(ErrorKind::Semantic, head.offset, "unknown gate '" + word + "'");
        }
        parse_gate(head, *gate);
    }

    void parse_gate(const Token &head, const detail::QuilGateName &gate) {
        advance();
        GateOp op{std::string(gate.ir), {}, {}};
        if (peek().is_punct("(")) {
            std::size_t open = peek().offset;
            check_no_formals();
            advance();
            auto resolver = [this](const Token &id) -> Expr {
                if (id.text == "i") {
                    fail(ErrorKind::UnsupportedConstruct, id.offset, "complex parameters are not supported");
                }
                fail(ErrorKind::Semantic, id.offset, "unknown identifier '" + id.text + "' in expression");
            };
            while (true) {
                std::size_t start = peek().offset;
                double v = ExprParser(source_, tokens_, pos_, resolver).parse().evaluate({});
                if (!std::isfinite(v)) {
                    fail(ErrorKind::Semantic, start, "parameter does not evaluate to a finite number");
                }
                op.params.push_back(v);
                if (!peek().is_punct(",")) {
                    break;
                }
                advance();
            }
            expect(")");
            if (op.params.size() != gate.num_params) {
                fail(ErrorKind::Semantic, open,
                     "gate '" + head.text + "' expects " + std::to_string(gate.num_params) +
                         " parameters, got " + std::to_string(op.params.size()));
            }
        } else if (gate.num_params != 0) {
            fail(ErrorKind::Semantic, head.offset,
                 "gate '" + head.text + "' expects " + std::to_string(gate.num_params) + " parameters");
        }
        while (!at_separator() && peek().kind != TokenKind::End) {
            std::size_t offset = peek().offset;
            Qubit q = parse_qubit();
            if (std::find(op.qubits.begin(), op.qubits.end(), q) != op.qubits.end()) {
                fail(ErrorKind::Semantic, offset, "qubit " + std::to_string(q) + " used twice in one gate");
            }
            op.qubits.push_back(q);
        }
        if (op.qubits.size() != gate.num_qubits) {
            fail(ErrorKind::Semantic, head.offset,
                 "gate '" + head.text + "' expects " + std::to_string(gate.num_qubits) +
                     " qubits, got " + std::to_string(op.qubits.size()));
        }
        push(std::move(op), head.offset);
    }

    /// Parameters written as %name belong to DEFGATE/DEFCIRCUIT bodies.
    void check_no_formals() const {
        int depth = 0;
        for (std::size_t i = pos_; i < tokens_.size(); ++i) {
            const Token &t = tokens_[i];
            if (t.kind == TokenKind::Newline || t.kind == TokenKind::End) {
                return;
            }
            if (t.is_punct("(")) {
                ++depth;
            } else if (t.is_punct(")")) {
                if (--depth == 0) {
                    return;
                }
            } else if (t.is_punct("%")) {
                fail(ErrorKind::UnsupportedConstruct, t.offset, "parametric gate arguments are not supported");
            }
        }
    }

    void parse_declare() {
        advance();
        const Token &name = peek();
        if (name.kind != TokenKind::Identifier) {
            fail(ErrorKind::Syntax, name.offset, "expected a memory region name" + found());
        }
        advance();
        if (std::any_of(cregs_.begin(), cregs_.end(), [&](const Register &r) { return r.name == name.text; })) {
            fail(ErrorKind::Semantic, name.offset, "memory region '" + name.text + "' is already declared");
        }
        const Token &type = peek();
        if (type.kind != TokenKind::Identifier) {
            fail(ErrorKind::Syntax, type.offset, "expected a memory type" + found());
        }
        if (type.text != "BIT") {
            fail(ErrorKind::UnsupportedConstruct, type.offset,
                 "memory type '" + type.text + "' is not supported (only BIT)");
        }
        advance();
        std::uint64_t size = 1;
        if (peek().is_punct("[")) {
            advance();
            const Token &n = peek();
            if (n.kind != TokenKind::Integer) {
                fail(ErrorKind::Syntax, n.offset, "expected a region size" + found());
            }
            if (n.integer_overflow || n.integer == 0 || total_clbits_ + n.integer > kMaxParsedClbits) {
                fail(ErrorKind::Semantic, n.offset, "invalid region size " + n.text);
            }
            size = n.integer;
            advance();
            expect("]");
        }
        if (peek().is(TokenKind::Identifier, "SHARING")) {
            fail(ErrorKind::UnsupportedConstruct, peek().offset, "SHARING is not supported");
        }
        if (total_clbits_ + size > kMaxParsedClbits) {
            fail(ErrorKind::Semantic, name.offset, "too many classical bits");
        }
        total_clbits_ += static_cast<std::uint32_t>(size);
        cregs_.push_back(Register{name.text, static_cast<std::uint32_t>(size)});
    }

    void parse_measure() {
        const Token &head = advance();
        Qubit q = parse_qubit();
        if (at_separator() || peek().kind == TokenKind::End) {
            fail(ErrorKind::UnsupportedConstruct, head.offset,
                 "MEASURE without a classical destination is not supported");
        }
        const Token &target = peek();
        if (target.kind != TokenKind::Identifier) {
            fail(ErrorKind::Syntax, target.offset, "expected a memory reference" + found());
        }
        advance();
        std::uint32_t bit = 0;
        if (peek().is_punct("[")) {
            advance();
            const Token &n = peek();
            if (n.kind != TokenKind::Integer) {
                fail(ErrorKind::Syntax, n.offset, "expected an index" + found());
            }
            if (n.integer_overflow || n.integer >= kMaxParsedClbits) {
                fail(ErrorKind::Semantic, n.offset, "index " + n.text + " out of range");
            }
            bit = static_cast<std::uint32_t>(n.integer);
            advance();
            expect("]");
        }
        pending_.push_back(PendingMeasure{ops_.size(), target.text, bit, target.offset});
        push(MeasureOp{q, target.text, bit}, head.offset);
    }

    void resolve_measures() const {
        for (const auto &m : pending_) {
            auto it = std::find_if(cregs_.begin(), cregs_.end(),
                                   [&](const Register &r) { return r.name == m.creg; });
            if (it == cregs_.end()) {
                fail(ErrorKind::Semantic, m.offset, "undeclared memory region '" + m.creg + "'");
            }
            if (m.bit >= it->size) {
                fail(ErrorKind::Semantic, m.offset,
                     "index " + std::to_string(m.bit) + " out of range for '" + m.creg + "[" +
                         std::to_string(it->size) + "]'");
            }
        }
    }

    SourceText source_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::uint32_t num_qubits_ = 0;
    std::uint32_t total_clbits_ = 0;
    std::vector<Register> cregs_;
    std::vector<Op> ops_;
    std::vector<PendingMeasure> pending_;
};

}  // namespace

Circuit parse_quil2(std::string_view source) {
    return QuilParser(source).parse();
}

}  // namespace qbridge
