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
#include "lexer.h"
#include "qbridge/frontends.h"
#include "qbridge/gates.h"

namespace qbridge {

namespace {

using detail::ExprParser;
using detail::SourceText;
using detail::Token;
using detail::TokenKind;

constexpr std::size_t kMaxParsedOps = std::size_t{1} << 20;

const std::set<std::string, std::less<>> kKeywords = {
    "OPENQASM", "include", "qreg", "creg", "gate", "opaque", "measure",
    "reset", "barrier", "if", "U", "CX", "pi",
};

struct Arg {
    std::string name;
    std::optional<std::uint32_t> index;
    std::size_t offset = 0;
};

struct Signature {
    std::size_t num_params = 0;
    std::size_t num_qubits = 0;
    std::string ir_name;
    bool opaque = false;
};

class QasmParser {
   public:
    explicit QasmParser(std::string_view text)
        : source_(text, "openqasm2"),
          tokens_(detail::tokenize(source_, detail::LexerConfig{"//", false, ""})) {
    }

    Circuit parse() {
        parse_header();
        while (peek().kind != TokenKind::End) {
            parse_statement();
        }
        circuit_.num_qubits = total_qubits_;
        return std::move(circuit_);
    }

   private:
    // ---- token helpers -------------------------------------------------
    const Token &peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    const Token &advance() {
        const Token &t = tokens_[pos_];
        if (pos_ + 1 < tokens_.size()) {
            ++pos_;
        }
        return t;
    }
    [[noreturn]] void fail(ErrorKind kind, std::size_t offset, const std::string &msg) const {
        source_.fail(kind, offset, msg);
    }
    [[noreturn]] void fail_here(const std::string &msg) const {
        fail(ErrorKind::Syntax, peek().offset, msg);
    }
    void expect(std::string_view punct) {
        if (!peek().is_punct(punct)) {
            fail_here("expected '" + std::string(punct) + "'" + found());
        }
        advance();
    }
    std::string found() const {
        const Token &t = peek();
        switch (t.kind) {
            case TokenKind::End:
                return " but reached end of input";
            case TokenKind::String:
                return " but found a string";
            default:
                return " but found '" + t.text + "'";
        }
    }
    const Token &expect_identifier(const char *what) {
        if (peek().kind != TokenKind::Identifier) {
            fail_here(std::string("expected ") + what + found());
        }
        return advance();
    }
    std::uint64_t expect_integer(const char *what) {
        const Token &t = peek();
        if (t.kind != TokenKind::Integer) {
            fail_here(std::string("expected ") + what + found());
        }
        if (t.integer_overflow) {
            fail(ErrorKind::Semantic, t.offset, "integer literal is too large");
        }
        return advance().integer;
    }

    // ---- top level -----------------------------------------------------
    void parse_header() {
        const Token &t = peek();
        if (!t.is(TokenKind::Identifier, "OPENQASM")) {
            fail_here("expected 'OPENQASM 2.0;' header");
        }
        advance();
        const Token &version = peek();
        if (version.kind != TokenKind::Real && version.kind != TokenKind::Integer) {
            fail_here("expected version number" + found());
        }
        if (version.real != 2.0) {
            fail(ErrorKind::UnsupportedConstruct, version.offset,
                 "OPENQASM version " + version.text + " is not supported (only 2.0)");
        }
        advance();
        expect(";");
    }

    void parse_statement() {
        const Token &t = peek();
        if (t.kind != TokenKind::Identifier) {
            fail_here("expected a statement" + found());
        }
        const std::string &word = t.text;
        if (word == "include") {
            parse_include();
        } else if (word == "qreg" || word == "creg") {
            parse_register(word == "qreg");
        } else if (word == "gate") {
            parse_gate_decl();
        } else if (word == "opaque") {
            parse_opaque();
        } else if (word == "barrier") {
            parse_barrier();
        } else if (word == "if") {
            parse_if();
        } else if (word == "OPENQASM") {
            fail(ErrorKind::Syntax, t.offset, "duplicate OPENQASM header");
        } else {
            auto ops = parse_qop(nullptr);
            append(std::move(ops), t.offset);
        }
    }

    void append(std::vector<Op> ops, std::size_t offset) {
        if (circuit_.ops.size() + ops.size() > kMaxParsedOps) {
            fail(ErrorKind::Semantic, offset, "program has too many operations");
        }
        for (auto &op : ops) {
            circuit_.ops.push_back(std::move(op));
        }
    }

    void parse_include() {
        advance();
        const Token &file = peek();
        if (file.kind != TokenKind::String) {
            fail_here("expected a file name string" + found());
        }
        if (file.text != "qelib1.inc") {
            fail(ErrorKind::UnsupportedConstruct, file.offset,
                 "include of \"" + file.text + "\" is not supported (only \"qelib1.inc\" is built in)");
        }
        advance();
        expect(";");
        qelib_ = true;
    }

    void check_new_name(const Token &name) {
        if (kKeywords.contains(name.text)) {
            fail(ErrorKind::Syntax, name.offset, "'" + name.text + "' is a reserved word");
        }
    }

    void parse_register(bool quantum) {
        advance();
        const Token &name = expect_identifier("register name");
        check_new_name(name);
        if (qregs_.contains(name.text) || cregs_.contains(name.text)) {
            fail(ErrorKind::Semantic, name.offset, "register '" + name.text + "' is already declared");
        }
        expect("[");
        std::size_t size_offset = peek().offset;
        std::uint64_t size = expect_integer("register size");
        expect("]");
        expect(";");
        if (size == 0) {
            fail(ErrorKind::Semantic, size_offset, "register size must be positive");
        }
        if (quantum) {
            if (total_qubits_ + size > kMaxParsedQubits) {
                fail(ErrorKind::Semantic, size_offset, "too many qubits");
            }
            auto s = static_cast<std::uint32_t>(size);
            qregs_[name.text] = {total_qubits_, s};
            circuit_.qregs.push_back(Register{name.text, s});
            total_qubits_ += s;
        } else {
            if (total_clbits_ + size > kMaxParsedClbits) {
                fail(ErrorKind::Semantic, size_offset, "too many classical bits");
            }
            auto s = static_cast<std::uint32_t>(size);
            cregs_[name.text] = s;
            circuit_.cregs.push_back(Register{name.text, s});
            total_clbits_ += s;
        }
    }

    // ---- gate lookup ---------------------------------------------------
    std::optional<Signature> lookup(const std::string &name) const {
        if (name == "U") {
            return Signature{3, 1, "u3", false};
        }
        if (name == "CX") {
            return Signature{0, 2, "cx", false};
        }
        if (qelib_) {
            if (name == "cu1") {
                return Signature{1, 2, "cp", false};
            }
            if (const auto *g = StandardGateTable::instance().find(name)) {
                return Signature{g->num_params, g->num_qubits, g->name, false};
            }
        }
        if (auto it = user_gates_.find(name); it != user_gates_.end()) {
            const GateDef &def = circuit_.gate_defs[it->second];
            return Signature{def.num_params(), def.num_qubits(), def.name, false};
        }
        if (auto it = opaques_.find(name); it != opaques_.end()) {
            return it->second;
        }
        return std::nullopt;
    }

    Signature resolve_gate(const Token &name) const {
        auto sig = lookup(name.text);
        if (!sig) {
            std::string hint;
            if (!qelib_ && StandardGateTable::instance().contains(name.text)) {
                hint = " (missing include \"qelib1.inc\"?)";
            }
            fail(ErrorKind::Semantic, name.offset, "unknown gate '" + name.text + "'" + hint);
        }
        return *sig;
    }

    void check_gate_name_free(const Token &name) {
        check_new_name(name);
        if (StandardGateTable::instance().contains(name.text) || name.text == "cu1") {
            fail(ErrorKind::Semantic, name.offset,
                 "gate name '" + name.text + "' is reserved by the standard gate library");
        }
        if (user_gates_.contains(name.text) || opaques_.contains(name.text)) {
            fail(ErrorKind::Semantic, name.offset, "gate '" + name.text + "' is already defined");
        }
    }

    /// Parses "( idlist? )? idlist" for gate and opaque declarations.
    std::pair<std::vector<std::string>, std::vector<std::string>> parse_formals() {
        std::vector<std::string> params;
        std::vector<std::string> qubits;
        std::set<std::string> seen;
        auto add = [&](std::vector<std::string> &into) {
            const Token &id = expect_identifier("argument name");
            check_new_name(id);
            if (!seen.insert(id.text).second) {
                fail(ErrorKind::Semantic, id.offset, "duplicate argument '" + id.text + "'");
            }
            into.push_back(id.text);
        };
        if (peek().is_punct("(")) {
            advance();
            if (!peek().is_punct(")")) {
                add(params);
                while (peek().is_punct(",")) {
                    advance();
                    add(params);
                }
            }
            expect(")");
        }
        add(qubits);
        while (peek().is_punct(",")) {
            advance();
            add(qubits);
        }
        return {params, qubits};
    }

    void parse_opaque() {
        advance();
        const Token &name = expect_identifier("gate name");
        check_gate_name_free(name);
        auto [params, qubits] = parse_formals();
        expect(";");
        opaques_[name.text] = Signature{params.size(), qubits.size(), name.text, true};
    }

    void parse_gate_decl() {
        advance();
        const Token &name_token = expect_identifier("gate name");
        check_gate_name_free(name_token);
        GateDef def;
        def.name = name_token.text;
        std::tie(def.param_names, def.qubit_names) = parse_formals();
        expect("{");
        while (!peek().is_punct("}")) {
            if (peek().kind == TokenKind::End) {
                fail_here("expected '}' to close gate body");
            }
            def.body.push_back(parse_body_statement(def));
        }
        advance();
        user_gates_[def.name] = circuit_.gate_defs.size();
        circuit_.gate_defs.push_back(std::move(def));
    }

    std::size_t formal_qubit(const GateDef &def, const Token &id) const {
        auto it = std::find(def.qubit_names.begin(), def.qubit_names.end(), id.text);
        if (it == def.qubit_names.end()) {
            fail(ErrorKind::Semantic, id.offset, "'" + id.text + "' is not a qubit argument of gate '" +
                                                     def.name + "'");
        }
        return static_cast<std::size_t>(it - def.qubit_names.begin());
    }

    MacroOp parse_body_statement(const GateDef &def) {
        const Token &head = peek();
        if (head.kind != TokenKind::Identifier) {
            fail_here("expected a gate operation" + found());
        }
        MacroOp op;
        auto parse_formal_list = [&]() {
            std::set<std::size_t> used;
            do {
                if (!op.qubits.empty()) {
                    advance();
                }
                const Token &id = expect_identifier("qubit argument");
                if (peek().is_punct("[")) {
                    fail_here("indexed arguments are not allowed inside a gate body");
                }
                std::size_t q = formal_qubit(def, id);
                if (!used.insert(q).second) {
                    fail(ErrorKind::Semantic, id.offset, "qubit argument '" + id.text + "' used twice");
                }
                op.qubits.push_back(q);
            } while (peek().is_punct(","));
        };
        if (head.text == "barrier") {
            advance();
            op.barrier = true;
            parse_formal_list();
            expect(";");
            return op;
        }
        if (head.text == "measure" || head.text == "reset" || head.text == "if") {
            fail(ErrorKind::Semantic, head.offset,
                 "'" + head.text + "' is not allowed inside a gate body");
        }
        if (head.text == def.name) {
            fail(ErrorKind::Semantic, head.offset, "gate '" + def.name + "' cannot call itself");
        }
        Signature sig = resolve_gate(head);
        if (sig.opaque) {
            fail(ErrorKind::UnsupportedConstruct, head.offset,
                 "opaque gate '" + head.text + "' has no definition and cannot be used");
        }
        advance();
        op.name = sig.ir_name;
        auto resolver = [&](const Token &id) -> Expr {
            auto it = std::find(def.param_names.begin(), def.param_names.end(), id.text);
            if (it == def.param_names.end()) {
                fail(ErrorKind::Semantic, id.offset, "unknown parameter '" + id.text + "'");
            }
            return Expr::param(static_cast<std::size_t>(it - def.param_names.begin()));
        };
        op.params = parse_param_list(resolver);
        if (op.params.size() != sig.num_params) {
            fail(ErrorKind::Semantic, head.offset,
                 "gate '" + head.text + "' expects " + std::to_string(sig.num_params) +
                     " parameters, got " + std::to_string(op.params.size()));
        }
        parse_formal_list();
        if (op.qubits.size() != sig.num_qubits) {
            fail(ErrorKind::Semantic, head.offset,
                 "gate '" + head.text + "' expects " + std::to_string(sig.num_qubits) +
                     " qubit arguments, got " + std::to_string(op.qubits.size()));
        }
        expect(";");
        return op;
    }

    std::vector<Expr> parse_param_list(const ExprParser::IdentifierResolver &resolver) {
        std::vector<Expr> params;
        if (!peek().is_punct("(")) {
            return params;
        }
        advance();
        if (!peek().is_punct(")")) {
            while (true) {
                params.push_back(ExprParser(source_, tokens_, pos_, resolver).parse());
                if (!peek().is_punct(",")) {
                    break;
                }
                advance();
            }
        }
        expect(")");
        return params;
    }

    // ---- quantum operations --------------------------------------------
    Arg parse_arg() {
        const Token &id = expect_identifier("register argument");
        Arg arg{id.text, std::nullopt, id.offset};
        if (peek().is_punct("[")) {
            advance();
            std::size_t index_offset = peek().offset;
            std::uint64_t index = expect_integer("index");
            expect("]");
            if (index > 0xFFFFFFFFu) {
                fail(ErrorKind::Semantic, index_offset, "index out of range");
            }
            arg.index = static_cast<std::uint32_t>(index);
        }
        return arg;
    }

    struct ResolvedArg {
        std::uint32_t offset = 0;
        std::uint32_t size = 1;  // register width when not indexed
        bool whole = false;
        std::size_t source_offset = 0;
    };

    ResolvedArg resolve_qubit_arg(const Arg &arg) const {
        auto it = qregs_.find(arg.name);
        if (it == qregs_.end()) {
            std::string extra = cregs_.contains(arg.name) ? " (it is a classical register)" : "";
            fail(ErrorKind::Semantic, arg.offset, "undeclared quantum register '" + arg.name + "'" + extra);
        }
        auto [offset, size] = it->second;
        if (arg.index) {
            if (*arg.index >= size) {
                fail(ErrorKind::Semantic, arg.offset,
                     "index " + std::to_string(*arg.index) + " out of range for '" + arg.name +
                         "[" + std::to_string(size) + "]'");
            }
            return {offset + *arg.index, 1, false, arg.offset};
        }
        return {offset, size, true, arg.offset};
    }

    /// Broadcast width shared by all whole-register arguments.
    std::uint32_t broadcast_width(const std::vector<ResolvedArg> &args) const {
        std::optional<std::uint32_t> width;
        for (const auto &a : args) {
            if (!a.whole) {
                continue;
            }
            if (width && *width != a.size) {
                fail(ErrorKind::Semantic, a.source_offset, "register arguments have different sizes");
            }
            width = a.size;
        }
        return width.value_or(1);
    }

    std::vector<Op> parse_qop(const ConditionalOp *condition) {
        const Token &head = peek();
        if (head.kind != TokenKind::Identifier) {
            fail_here("expected a quantum operation" + found());
        }
        if (head.text == "measure" || head.text == "reset") {
            if (condition != nullptr) {
                fail(ErrorKind::UnsupportedConstruct, head.offset,
                     "conditional '" + head.text + "' is not supported (only conditional gates)");
            }
            return head.text == "measure" ? parse_measure() : parse_reset();
        }
        if (kKeywords.contains(head.text) && head.text != "U" && head.text != "CX") {
            fail(ErrorKind::Syntax, head.offset, "unexpected '" + head.text + "'");
        }
        Signature sig = resolve_gate(head);
        if (sig.opaque) {
            fail(ErrorKind::UnsupportedConstruct, head.offset,
                 "opaque gate '" + head.text + "' has no definition and cannot be used");
        }
        advance();
        std::size_t params_offset = peek().offset;
        auto reject_identifier = [this](const Token &id) -> Expr {
            fail(ErrorKind::Semantic, id.offset, "unknown identifier '" + id.text + "' in expression");
        };
        std::vector<Expr> exprs = parse_param_list(reject_identifier);
        if (exprs.size() != sig.num_params) {
            fail(ErrorKind::Semantic, head.offset,
                 "gate '" + head.text + "' expects " + std::to_string(sig.num_params) +
                     " parameters, got " + std::to_string(exprs.size()));
        }
        std::vector<double> params;
        for (const auto &e : exprs) {
            double v = e.evaluate({});
            if (!std::isfinite(v)) {
                fail(ErrorKind::Semantic, params_offset, "parameter does not evaluate to a finite number");
            }
            params.push_back(v);
        }
        std::vector<ResolvedArg> args;
        args.push_back(resolve_qubit_arg(parse_arg()));
        while (peek().is_punct(",")) {
            advance();
            args.push_back(resolve_qubit_arg(parse_arg()));
        }
        expect(";");
        if (args.size() != sig.num_qubits) {
            fail(ErrorKind::Semantic, head.offset,
                 "gate '" + head.text + "' expects " + std::to_string(sig.num_qubits) +
                     " qubit arguments, got " + std::to_string(args.size()));
        }
        std::uint32_t width = broadcast_width(args);
        std::vector<Op> ops;
        for (std::uint32_t i = 0; i < width; ++i) {
            GateOp gate{sig.ir_name, params, {}};
            for (const auto &a : args) {
                Qubit q = a.whole ? a.offset + i : a.offset;
                if (std::find(gate.qubits.begin(), gate.qubits.end(), q) != gate.qubits.end()) {
                    fail(ErrorKind::Semantic, a.source_offset, "the same qubit is used twice in one gate");
                }
                gate.qubits.push_back(q);
            }
            if (condition != nullptr) {
                ops.emplace_back(ConditionalOp{condition->creg, condition->value, std::move(gate)});
            } else {
                ops.emplace_back(std::move(gate));
            }
        }
        return ops;
    }

    std::vector<Op> parse_measure() {
        advance();
        ResolvedArg q = resolve_qubit_arg(parse_arg());
        expect("->");
        Arg c = parse_arg();
        expect(";");
        auto it = cregs_.find(c.name);
        if (it == cregs_.end()) {
            fail(ErrorKind::Semantic, c.offset, "undeclared classical register '" + c.name + "'");
        }
        std::uint32_t csize = it->second;
        if (c.index && *c.index >= csize) {
            fail(ErrorKind::Semantic, c.offset,
                 "index " + std::to_string(*c.index) + " out of range for '" + c.name + "[" +
                     std::to_string(csize) + "]'");
        }
        std::vector<Op> ops;
        if (q.whole != !c.index.has_value()) {
            fail(ErrorKind::Semantic, c.offset, "measure must map a qubit to a bit or a register to a register");
        }
        if (q.whole) {
            if (q.size != csize) {
                fail(ErrorKind::Semantic, c.offset, "measured registers have different sizes");
            }
            for (std::uint32_t i = 0; i < q.size; ++i) {
                ops.emplace_back(MeasureOp{q.offset + i, c.name, i});
            }
        } else {
            ops.emplace_back(MeasureOp{q.offset, c.name, *c.index});
        }
        return ops;
    }

    std::vector<Op> parse_reset() {
        advance();
        ResolvedArg q = resolve_qubit_arg(parse_arg());
        expect(";");
        std::vector<Op> ops;
        for (std::uint32_t i = 0; i < q.size; ++i) {
            ops.emplace_back(ResetOp{q.offset + i});
        }
        return ops;
    }

    void parse_barrier() {
        std::size_t start = advance().offset;
        BarrierOp barrier;
        do {
            if (!barrier.qubits.empty()) {
                advance();
            }
            ResolvedArg a = resolve_qubit_arg(parse_arg());
            for (std::uint32_t i = 0; i < a.size; ++i) {
                Qubit q = a.offset + i;
                if (std::find(barrier.qubits.begin(), barrier.qubits.end(), q) == barrier.qubits.end()) {
                    barrier.qubits.push_back(q);
                }
            }
        } while (peek().is_punct(","));
        expect(";");
        std::vector<Op> ops;
        ops.emplace_back(std::move(barrier));
        append(std::move(ops), start);
    }

    void parse_if() {
        std::size_t start = advance().offset;
        expect("(");
        const Token &creg = expect_identifier("classical register");
        auto it = cregs_.find(creg.text);
        if (it == cregs_.end()) {
            fail(ErrorKind::Semantic, creg.offset, "undeclared classical register '" + creg.text + "'");
        }
        expect("==");
        std::uint64_t value = expect_integer("comparison value");
        expect(")");
        ConditionalOp condition{creg.text, value, {}};
        append(parse_qop(&condition), start);
    }

    SourceText source_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    Circuit circuit_;
    bool qelib_ = false;
    std::uint32_t total_qubits_ = 0;
    std::uint32_t total_clbits_ = 0;
    std::map<std::string, std::pair<std::uint32_t, std::uint32_t>, std::less<>> qregs_;
    std::map<std::string, std::uint32_t, std::less<>> cregs_;
    std::map<std::string, std::size_t, std::less<>> user_gates_;
    std::map<std::string, Signature, std::less<>> opaques_;
};

}  // namespace

Circuit parse_openqasm2(std::string_view source) {
    return QasmParser(source).parse();
}

}  // namespace qbridge
