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

#include "schema.h"

#include <fstream>
#include <regex>
#include <stdexcept>

namespace testing_support {

using nlohmann::json;

SchemaSet::SchemaSet(const std::filesystem::path &dir) {
    for (const auto &entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() == ".json") {
            std::ifstream in(entry.path());
            docs_[entry.path().filename().string()] = json::parse(in);
        }
    }
}

std::vector<std::string> SchemaSet::files() const {
    std::vector<std::string> out;
    for (const auto &[name, doc] : docs_) {
        out.push_back(name);
    }
    return out;
}

std::pair<const json *, std::string> SchemaSet::resolve(const std::string &ref, const std::string &doc) const {
    std::string file = doc;
    std::string pointer;
    auto hash = ref.find('#');
    if (hash == std::string::npos) {
        file = ref;
    } else {
        if (hash > 0) {
            file = ref.substr(0, hash);
        }
        pointer = ref.substr(hash + 1);
    }
    auto it = docs_.find(file);
    if (it == docs_.end()) {
        throw std::runtime_error("unresolvable $ref " + ref);
    }
    const json *target = &it->second;
    if (!pointer.empty()) {
        target = &it->second.at(json::json_pointer(pointer));
    }
    return {target, file};
}

std::vector<std::string> SchemaSet::validate(const json &instance, const std::string &schema_ref) const {
    auto [schema, doc] = resolve(schema_ref, "");
    std::vector<std::string> errors;
    check(instance, *schema, doc, "$", errors, 0);
    return errors;
}

namespace {

bool has_type(const json &v, const std::string &type) {
    if (type == "object") return v.is_object();
    if (type == "array") return v.is_array();
    if (type == "string") return v.is_string();
    if (type == "boolean") return v.is_boolean();
    if (type == "null") return v.is_null();
    if (type == "number") return v.is_number();
    if (type == "integer") {
        if (v.is_number_integer()) return true;
        return v.is_number_float() && v.get<double>() == static_cast<double>(static_cast<long long>(v.get<double>()));
    }
    throw std::runtime_error("unknown schema type " + type);
}

}  // namespace

void SchemaSet::check(const json &v, const json &s, const std::string &doc, const std::string &where,
                      std::vector<std::string> &errors, int depth) const {
    if (depth > 64) {
        throw std::runtime_error("schema recursion too deep");
    }
    if (s.is_boolean()) {
        if (!s.get<bool>()) {
            errors.push_back(where + ": no value allowed");
        }
        return;
    }
    auto fail = [&](const std::string &msg) { errors.push_back(where + ": " + msg); };
    if (s.contains("$ref")) {
        auto [target, file] = resolve(s["$ref"].get<std::string>(), doc);
        check(v, *target, file, where, errors, depth + 1);
    }
    if (s.contains("type")) {
        bool ok = false;
        if (s["type"].is_array()) {
            for (const auto &t : s["type"]) {
                ok = ok || has_type(v, t.get<std::string>());
            }
        } else {
            ok = has_type(v, s["type"].get<std::string>());
        }
        if (!ok) {
            fail("expected type " + s["type"].dump() + ", got " + v.dump().substr(0, 80));
            return;
        }
    }
    if (s.contains("const") && v != s["const"]) {
        fail("expected " + s["const"].dump());
    }
    if (s.contains("enum")) {
        bool found = false;
        for (const auto &e : s["enum"]) {
            found = found || e == v;
        }
        if (!found) {
            fail(v.dump().substr(0, 80) + " is not one of " + s["enum"].dump());
        }
    }
    if (v.is_number()) {
        if (s.contains("minimum") && v.get<double>() < s["minimum"].get<double>()) {
            fail("below minimum");
        }
        if (s.contains("maximum") && v.get<double>() > s["maximum"].get<double>()) {
            fail("above maximum");
        }
    }
    if (v.is_string()) {
        const auto &str = v.get_ref<const std::string &>();
        if (s.contains("minLength") && str.size() < s["minLength"].get<std::size_t>()) {
            fail("string too short");
        }
        if (s.contains("pattern") && !std::regex_search(str, std::regex(s["pattern"].get<std::string>()))) {
            fail("\"" + str + "\" does not match " + s["pattern"].get<std::string>());
        }
    }
    if (v.is_object()) {
        if (s.contains("required")) {
            for (const auto &key : s["required"]) {
                if (!v.contains(key.get<std::string>())) {
                    fail("missing required property " + key.dump());
                }
            }
        }
        for (const auto &[key, value] : v.items()) {
            const std::string child = where + "." + key;
            if (s.contains("propertyNames")) {
                check(json(key), s["propertyNames"], doc, child + "<name>", errors, depth + 1);
            }
            if (s.contains("properties") && s["properties"].contains(key)) {
                check(value, s["properties"][key], doc, child, errors, depth + 1);
            } else if (s.contains("additionalProperties")) {
                check(value, s["additionalProperties"], doc, child, errors, depth + 1);
            }
        }
    }
    if (v.is_array()) {
        if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) {
            fail("too few items");
        }
        if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) {
            fail("too many items");
        }
        if (s.contains("items")) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                check(v[i], s["items"], doc, where + "[" + std::to_string(i) + "]", errors, depth + 1);
            }
        }
    }
    auto count_matches = [&](const json &list) {
        std::size_t matches = 0;
        for (const auto &sub : list) {
            std::vector<std::string> sub_errors;
            check(v, sub, doc, where, sub_errors, depth + 1);
            matches += sub_errors.empty() ? 1 : 0;
        }
        return matches;
    };
    if (s.contains("oneOf") && count_matches(s["oneOf"]) != 1) {
        fail("must match exactly one alternative");
    }
    if (s.contains("anyOf") && count_matches(s["anyOf"]) == 0) {
        fail("must match at least one alternative");
    }
    if (s.contains("allOf")) {
        for (const auto &sub : s["allOf"]) {
            check(v, sub, doc, where, errors, depth + 1);
        }
    }
}

}  // namespace testing_support
