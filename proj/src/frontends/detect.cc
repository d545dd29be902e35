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
#include <cctype>
#include <regex>

#include "json.hpp"
#include "qbridge/frontends.h"

namespace qbridge {

namespace {

std::optional<SourceDialect> sniff_json(std::string_view source) {
    auto doc = nlohmann::json::parse(source.begin(), source.end(), nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        return std::nullopt;
    }
    auto gates = doc.find("gates");
    bool gate_grid = gates != doc.end() && gates->is_array() &&
                     std::all_of(gates->begin(), gates->end(), [](const auto &w) { return w.is_array(); });
    if (doc.contains("numQubits") || (gate_grid && !doc.contains("cols"))) {
        return SourceDialect::QuantumCircuitJson;
    }
    if (doc.contains("cols")) {
        return SourceDialect::QuirkJson;
    }
    const nlohmann::json *body = &doc;
    if (auto input = doc.find("input"); input != doc.end() && input->is_object()) {
        body = &*input;
    }
    if (body->contains("circuit") && body->contains("qubits")) {
        return SourceDialect::IonqJson;
    }
    return std::nullopt;
}

std::string lowercase_extension(std::string_view filename) {
    auto slash = filename.find_last_of("/\\");
    std::string_view base = slash == std::string_view::npos ? filename : filename.substr(slash + 1);
    auto dot = base.rfind('.');
    if (dot == std::string_view::npos) {
        return {};
    }
    std::string ext(base.substr(dot));
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return ext;
}

/// First line that is neither blank nor only a comment introduced by `comment`.
std::string_view first_significant_line(std::string_view source, std::string_view comment) {
    std::size_t start = 0;
    while (start <= source.size()) {
        std::size_t end = source.find('\n', start);
        if (end == std::string_view::npos) {
            end = source.size();
        }
        std::string_view line = source.substr(start, end - start);
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line.substr(first, comment.size()) != comment) {
            return line.substr(first);
        }
        start = end + 1;
    }
    return {};
}

bool looks_like_quil(std::string_view line) {
    static const std::regex pattern(
        R"(^(DECLARE\s+\w+|PRAGMA\b|MEASURE\s+\d+|RESET\b|NOP\b|HALT\b|(LABEL|JUMP(-WHEN|-UNLESS)?)\s+@)"
        R"(|DEF(GATE|CIRCUIT)\b|[A-Z][A-Z0-9]*(\([^)]*\))?(\s+\d+)+\s*([;#].*)?$))");
    std::string text(line);
    if (!text.empty() && text.back() == '\r') {
        text.pop_back();
    }
    return std::regex_search(text, pattern);
}

}  // namespace

SourceDialect detect_dialect(std::string_view source, std::optional<std::string_view> filename_hint) {
    if (filename_hint) {
        std::string ext = lowercase_extension(*filename_hint);
        if (ext == ".qasm") {
            return SourceDialect::OpenQasm2;
        }
        if (ext == ".quil") {
            return SourceDialect::Quil2;
        }
        if (ext == ".json") {
            if (auto d = sniff_json(source)) {
                return *d;
            }
        }
    }
    std::size_t first = source.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && source[first] == '{') {
        if (auto d = sniff_json(source)) {
            return *d;
        }
        throw Error(ErrorKind::UnknownDialect, "JSON document does not match any known circuit format");
    }
    std::string_view qasm_line = first_significant_line(source, "//");
    if (qasm_line.starts_with("OPENQASM") &&
        (qasm_line.size() == 8 || !std::isalnum(static_cast<unsigned char>(qasm_line[8])))) {
        return SourceDialect::OpenQasm2;
    }
    if (looks_like_quil(first_significant_line(source, "#"))) {
        return SourceDialect::Quil2;
    }
    throw Error(ErrorKind::UnknownDialect, "could not determine the dialect of the source");
}

}  // namespace qbridge
