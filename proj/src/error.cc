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

#include "qbridge/error.h"

#include <sstream>

namespace qbridge {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Syntax:
            return "SyntaxError";
        case ErrorKind::UnsupportedConstruct:
            return "UnsupportedConstruct";
        case ErrorKind::Semantic:
            return "SemanticError";
        case ErrorKind::UnknownDialect:
            return "UnknownDialect";
        case ErrorKind::UnknownGate:
            return "UnknownGate";
        case ErrorKind::RecursionLimit:
            return "RecursionLimit";
        case ErrorKind::ExpansionTooLarge:
            return "ExpansionTooLarge";
        case ErrorKind::InvalidCircuit:
            return "InvalidCircuit";
        case ErrorKind::UnsupportedForTarget:
            return "UnsupportedForTarget";
        case ErrorKind::TooManyQubits:
            return "TooManyQubits";
        case ErrorKind::ShotsRequired:
            return "ShotsRequired";
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::TemplateNotFound:
            return "TemplateNotFound";
        case ErrorKind::DestinationNotEmpty:
            return "DestinationNotEmpty";
        case ErrorKind::MissingVariable:
            return "MissingVariable";
        case ErrorKind::NameCollision:
            return "NameCollision";
        case ErrorKind::EmptySource:
            return "EmptySource";
        case ErrorKind::InvalidTemplate:
            return "InvalidTemplate";
        case ErrorKind::UnsafePath:
            return "UnsafePath";
        case ErrorKind::Io:
            return "IoError";
    }
    return "Error";
}

std::string format_error(const Error &error) {
    std::ostringstream out;
    out << "error";
    if (!error.stage().empty()) {
        out << "[" << error.stage() << "]";
    }
    out << ": " << error_kind_name(error.kind()) << ": " << error.what();
    if (const auto *pe = dynamic_cast<const ParseError *>(&error)) {
        out << " (" << pe->dialect() << " line " << pe->line() << ", column " << pe->column()
            << ")\n";
        std::string gutter = std::to_string(pe->line());
        out << "  " << gutter << " | " << pe->snippet() << "\n";
        out << "  " << std::string(gutter.size(), ' ') << " | ";
        // Tabs are kept so the caret lines up under the original text.
        for (std::size_t i = 0; i + 1 < pe->column() && i < pe->snippet().size(); ++i) {
            out << (pe->snippet()[i] == '\t' ? '\t' : ' ');
        }
        out << "^";
    }
    out << "\n";
    return out.str();
}

}  // namespace qbridge
