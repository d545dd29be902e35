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
#include <stdexcept>
#include <string>
#include <string_view>

namespace qbridge {

enum class ErrorKind {
    Syntax,
    UnsupportedConstruct,
    Semantic,
    UnknownDialect,
    UnknownGate,
    RecursionLimit,
    ExpansionTooLarge,
    InvalidCircuit,
    UnsupportedForTarget,
    TooManyQubits,
    ShotsRequired,
    InvalidArgument,
    TemplateNotFound,
    DestinationNotEmpty,
    MissingVariable,
    NameCollision,
    EmptySource,
    InvalidTemplate,
    UnsafePath,
    Io,
};

std::string_view error_kind_name(ErrorKind kind);

/// Base class for every user-facing failure raised by the toolchain.
///
/// The stage ("detect", "parse", "expand", "decompose", "emit", "simulate",
/// "scaffold", "request") is attached by the pipeline that observed the error.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(message), kind_(kind) {
    }

    ErrorKind kind() const {
        return kind_;
    }
    const std::string &stage() const {
        return stage_;
    }
    void set_stage(std::string stage) {
        if (stage_.empty()) {
            stage_ = std::move(stage);
        }
    }

   private:
    ErrorKind kind_;
    std::string stage_;
};

/// A failure tied to a position in source text. Line and column are 1-based
/// and always point inside the text that was parsed.
class ParseError : public Error {
   public:
    ParseError(ErrorKind kind, std::string dialect, std::size_t line, std::size_t column,
               const std::string &message, std::string snippet)
        : Error(kind, message),
          dialect_(std::move(dialect)),
          line_(line),
          column_(column),
          snippet_(std::move(snippet)) {
    }

    const std::string &dialect() const {
        return dialect_;
    }
    std::size_t line() const {
        return line_;
    }
    std::size_t column() const {
        return column_;
    }
    const std::string &snippet() const {
        return snippet_;
    }

   private:
    std::string dialect_;
    std::size_t line_;
    std::size_t column_;
    std::string snippet_;
};

/// Human-readable rendering used by the CLI: stage tag, message and, for
/// parse errors, the offending line with a caret under the column.
std::string format_error(const Error &error);

}  // namespace qbridge
