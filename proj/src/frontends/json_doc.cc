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

#include "json_doc.h"

#include <cmath>
#include <vector>

#include "qbridge/frontends.h"

namespace qbridge::detail {

namespace {

bool is_ws(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

/// Offset of the first container nested deeper than the limit, if any.
std::optional<std::size_t> excessive_nesting(std::string_view text) {
    std::size_t depth = 0;
    bool in_string = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_string) {
            if (c == '\\') {
                ++i;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        if (c == '"') {
            in_string = true;
        } else if (c == '{' || c == '[') {
            if (++depth > kMaxExpressionDepth) {
                return i;
            }
        } else if ((c == '}' || c == ']') && depth > 0) {
            --depth;
        }
    }
    return std::nullopt;
}

std::size_t skip_string(std::string_view text, std::size_t i) {
    ++i;
    while (i < text.size() && text[i] != '"') {
        i += text[i] == '\\' ? 2 : 1;
    }
    return i + 1;
}

std::string clean_parse_message(std::string what) {
    if (auto p = what.find("] "); p != std::string::npos && what.starts_with("[json.exception")) {
        what.erase(0, p + 2);
    }
    if (what.starts_with("parse error")) {
        if (auto p = what.find(": "); p != std::string::npos) {
            what.erase(0, p + 2);
        }
    }
    return what;
}

}  // namespace

std::string escape_pointer_token(std::string_view token) {
    std::string out;
    for (char c : token) {
        if (c == '~') {
            out += "~0";
        } else if (c == '/') {
            out += "~1";
        } else {
            out += c;
        }
    }
    return out;
}

JsonDoc::JsonDoc(std::string_view text, std::string dialect) : source_(text, std::move(dialect)) {
    if (auto deep = excessive_nesting(text)) {
        source_.fail(ErrorKind::Syntax, *deep, "JSON nested too deeply");
    }
    try {
        root_ = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error &e) {
        std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        source_.fail(ErrorKind::Syntax, offset, "invalid JSON: " + clean_parse_message(e.what()));
    } catch (const nlohmann::json::out_of_range &e) {
        // Numeric overflow; the message quotes the offending literal.
        std::string what = e.what();
        std::size_t offset = 0;
        if (auto open = what.find('\''), close = what.rfind('\'');
            open != std::string::npos && close > open) {
            auto found = text.find(what.substr(open + 1, close - open - 1));
            offset = found == std::string_view::npos ? 0 : found;
        }
        source_.fail(ErrorKind::Syntax, offset, "invalid JSON: " + clean_parse_message(what));
    }
    locate(text);
}

void JsonDoc::locate(std::string_view t) {
    struct Frame {
        bool object;
        std::size_t index;
        std::size_t base;  // length of the container's own pointer
    };
    enum class State { Value, ObjectFirst, ObjectKey, ArrayFirst, After, Done };
    std::vector<Frame> stack;
    std::string path;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < t.size() && is_ws(t[i])) {
            ++i;
        }
    };
    State state = State::Value;
    while (state != State::Done && i <= t.size()) {
        switch (state) {
            case State::Value: {
                skip_ws();
                offsets_.emplace(path, i);
                char c = t[i];
                if (c == '{' || c == '[') {
                    stack.push_back(Frame{c == '{', 0, path.size()});
                    ++i;
                    state = c == '{' ? State::ObjectFirst : State::ArrayFirst;
                } else if (c == '"') {
                    i = skip_string(t, i);
                    state = State::After;
                } else {
                    while (i < t.size() && !is_ws(t[i]) && t[i] != ',' && t[i] != '}' && t[i] != ']') {
                        ++i;
                    }
                    state = State::After;
                }
                break;
            }
            case State::ObjectFirst:
                skip_ws();
                state = t[i] == '}' ? State::After : State::ObjectKey;
                if (t[i] == '}') {
                    ++i;
                    path.resize(stack.back().base);
                    stack.pop_back();
                }
                break;
            case State::ObjectKey: {
                skip_ws();
                std::size_t key_start = i;
                std::size_t end = skip_string(t, i);
                std::string key = nlohmann::json::parse(t.substr(i, end - i)).get<std::string>();
                i = end;
                path.resize(stack.back().base);
                path += "/" + escape_pointer_token(key);
                if (offsets_.contains(path)) {
                    source_.fail(ErrorKind::Syntax, key_start, "duplicate key \"" + key + "\"");
                }
                skip_ws();
                ++i;  // ':'
                state = State::Value;
                break;
            }
            case State::ArrayFirst:
                skip_ws();
                if (t[i] == ']') {
                    ++i;
                    path.resize(stack.back().base);
                    stack.pop_back();
                    state = State::After;
                } else {
                    path.resize(stack.back().base);
                    path += "/0";
                    state = State::Value;
                }
                break;
            case State::After: {
                if (stack.empty()) {
                    state = State::Done;
                    break;
                }
                skip_ws();
                Frame &top = stack.back();
                if (t[i] == ',') {
                    ++i;
                    if (top.object) {
                        state = State::ObjectKey;
                    } else {
                        ++top.index;
                        path.resize(top.base);
                        path += "/" + std::to_string(top.index);
                        state = State::Value;
                    }
                } else {
                    ++i;
                    path.resize(top.base);
                    stack.pop_back();
                }
                break;
            }
            case State::Done:
                break;
        }
    }
}

std::size_t JsonDoc::offset_of(std::string pointer) const {
    while (true) {
        if (auto it = offsets_.find(pointer); it != offsets_.end()) {
            return it->second;
        }
        if (pointer.empty()) {
            return 0;
        }
        pointer.resize(pointer.rfind('/'));
    }
}

std::string JsonCursor::label() const {
    if (pointer_.empty()) {
        return "document";
    }
    std::string out;
    std::size_t i = 1;
    while (i <= pointer_.size()) {
        std::size_t end = pointer_.find('/', i);
        if (end == std::string::npos) {
            end = pointer_.size();
        }
        std::string token = pointer_.substr(i, end - i);
        bool numeric = !token.empty() && token.find_first_not_of("0123456789") == std::string::npos;
        if (numeric) {
            out += "[" + token + "]";
        } else {
            if (!out.empty()) {
                out += ".";
            }
            for (std::size_t k = 0; k < token.size(); ++k) {
                if (token[k] == '~' && k + 1 < token.size()) {
                    out += token[k + 1] == '0' ? '~' : '/';
                    ++k;
                } else {
                    out += token[k];
                }
            }
        }
        i = end + 1;
    }
    return out;
}

void JsonCursor::require_object() const {
    if (!value_->is_object()) {
        fail(ErrorKind::Semantic, label() + " must be an object");
    }
}

void JsonCursor::require_array() const {
    if (!value_->is_array()) {
        fail(ErrorKind::Semantic, label() + " must be an array");
    }
}

void JsonCursor::allow_keys(std::initializer_list<std::string_view> allowed) const {
    require_object();
    for (const auto &[key, _] : value_->items()) {
        bool ok = false;
        for (auto a : allowed) {
            ok = ok || a == key;
        }
        if (!ok) {
            JsonCursor child(*doc_, (*value_)[key], pointer_ + "/" + escape_pointer_token(key));
            child.fail(ErrorKind::UnsupportedConstruct, "unsupported key \"" + key + "\" in " + label());
        }
    }
}

std::optional<JsonCursor> JsonCursor::get(std::string_view key) const {
    require_object();
    auto it = value_->find(key);
    if (it == value_->end()) {
        return std::nullopt;
    }
    return JsonCursor(*doc_, *it, pointer_ + "/" + escape_pointer_token(key));
}

JsonCursor JsonCursor::at(std::string_view key) const {
    auto child = get(key);
    if (!child) {
        fail(ErrorKind::Semantic, label() + " is missing required key \"" + std::string(key) + "\"");
    }
    return *child;
}

JsonCursor JsonCursor::operator[](std::size_t index) const {
    return JsonCursor(*doc_, (*value_)[index], pointer_ + "/" + std::to_string(index));
}

std::uint64_t JsonCursor::as_uint(std::uint64_t max) const {
    const auto &v = *value_;
    if (v.is_number_unsigned()) {
        auto n = v.get<std::uint64_t>();
        if (n > max) {
            fail(ErrorKind::Semantic, label() + " is out of range (maximum " + std::to_string(max) + ")");
        }
        return n;
    }
    if (v.is_number_integer()) {
        fail(ErrorKind::Semantic, label() + " must not be negative");
    }
    if (v.is_number_float()) {
        double d = v.get<double>();
        if (std::isfinite(d) && d == std::floor(d) && d >= 0 && d <= static_cast<double>(max)) {
            return static_cast<std::uint64_t>(d);
        }
    }
    fail(ErrorKind::Semantic, label() + " must be a non-negative integer");
}

double JsonCursor::as_number() const {
    if (!value_->is_number()) {
        fail(ErrorKind::Semantic, label() + " must be a number");
    }
    double d = value_->get<double>();
    if (!std::isfinite(d)) {
        fail(ErrorKind::Semantic, label() + " must be finite");
    }
    return d;
}

const std::string &JsonCursor::as_string() const {
    if (!value_->is_string()) {
        fail(ErrorKind::Semantic, label() + " must be a string");
    }
    return value_->get_ref<const std::string &>();
}

}  // namespace qbridge::detail
