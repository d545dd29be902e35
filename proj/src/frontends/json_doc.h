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

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "json.hpp"
#include "source_text.h"

namespace qbridge::detail {

/// A parsed JSON document that remembers where every value starts, so that
/// semantic errors found after parsing can still point at a line and column.
class JsonDoc {
   public:
    JsonDoc(std::string_view text, std::string dialect);

    const nlohmann::json &root() const {
        return root_;
    }
    const SourceText &source() const {
        return source_;
    }

    /// Byte offset of the value at `pointer`, falling back to the nearest
    /// ancestor that was located.
    std::size_t offset_of(std::string pointer) const;

    [[noreturn]] void fail(ErrorKind kind, const std::string &pointer, const std::string &message) const {
        source_.fail(kind, offset_of(pointer), message);
    }

   private:
    void locate(std::string_view text);

    SourceText source_;
    nlohmann::json root_;
    std::unordered_map<std::string, std::size_t> offsets_;
};

/// Typed, position-aware view of one value inside a JsonDoc.
class JsonCursor {
   public:
    JsonCursor(const JsonDoc &doc, const nlohmann::json &value, std::string pointer)
        : doc_(&doc), value_(&value), pointer_(std::move(pointer)) {
    }
    static JsonCursor root(const JsonDoc &doc) {
        return JsonCursor(doc, doc.root(), "");
    }

    const nlohmann::json &value() const {
        return *value_;
    }
    const std::string &pointer() const {
        return pointer_;
    }
    /// Human-readable location such as "gates[2].target".
    std::string label() const;

    [[noreturn]] void fail(ErrorKind kind, const std::string &message) const {
        doc_->fail(kind, pointer_, message);
    }

    void require_object() const;
    void require_array() const;
    /// Rejects keys outside `allowed` (the value must be an object).
    void allow_keys(std::initializer_list<std::string_view> allowed) const;

    std::optional<JsonCursor> get(std::string_view key) const;
    JsonCursor at(std::string_view key) const;  // missing key -> Semantic
    JsonCursor operator[](std::size_t index) const;
    std::size_t size() const {
        return value_->size();
    }
    bool is_null() const {
        return value_->is_null();
    }

    std::uint64_t as_uint(std::uint64_t max) const;
    double as_number() const;
    const std::string &as_string() const;

   private:
    const JsonDoc *doc_;
    const nlohmann::json *value_;
    std::string pointer_;
};

std::string escape_pointer_token(std::string_view token);

}  // namespace qbridge::detail
