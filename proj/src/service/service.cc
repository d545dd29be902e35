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

#include "qbridge/service.h"

#include <regex>

#include "httplib.h"
#include "qbridge/codegen.h"
#include "qbridge/error.h"
#include "qbridge/examples_catalog.h"
#include "qbridge/frontends.h"
#include "qbridge/ir_json.h"
#include "qbridge/passes.h"
#include "qbridge/runner.h"
#include "qbridge/scaffold.h"
#include "qbridge/version.h"

namespace qbridge {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::size_t kMaxBodyBytes = std::size_t{8} << 20;

/// An ill-formed request body; reported with stage "request".
Error bad_request(const std::string &message) {
    Error e(ErrorKind::InvalidArgument, message);
    e.set_stage("request");
    return e;
}

template <typename F>
auto staged(const char *stage, F &&body) -> decltype(body()) {
    try {
        return body();
    } catch (Error &e) {
        e.set_stage(stage);
        throw;
    }
}

int status_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnsupportedConstruct:
        case ErrorKind::UnsupportedForTarget:
        case ErrorKind::TooManyQubits:
        case ErrorKind::ExpansionTooLarge:
            return 422;
        case ErrorKind::TemplateNotFound:
            return 404;
        case ErrorKind::Io:
            return 500;
        default:
            return 400;
    }
}

ServiceResponse error_response(int status, std::string_view stage, std::string_view kind, const std::string &message,
                               const ParseError *pe = nullptr) {
    ServiceResponse r;
    r.status = status;
    r.body["stage"] = stage;
    r.body["kind"] = kind;
    r.body["message"] = message;
    if (pe != nullptr) {
        r.body["line"] = pe->line();
        r.body["column"] = pe->column();
        r.body["snippet"] = pe->snippet();
    }
    return r;
}

ServiceResponse error_response(const Error &e) {
    const std::string stage = e.stage().empty() ? "request" : e.stage();
    return error_response(status_for(e.kind()), stage, error_kind_name(e.kind()), e.what(),
                          dynamic_cast<const ParseError *>(&e));
}

/// Typed access to the request object; every member is checked against
/// the endpoint's allowed set.
class Request {
   public:
    Request(const std::string &body, std::initializer_list<std::string_view> allowed) {
        if (body.size() > kMaxBodyBytes) {
            throw bad_request("request body is too large");
        }
        try {
            doc_ = json::parse(body);
        } catch (const json::exception &) {
            throw bad_request("request body is not valid JSON");
        }
        if (!doc_.is_object()) {
            throw bad_request("request body must be a JSON object");
        }
        for (const auto &[key, value] : doc_.items()) {
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
                throw bad_request("unknown field \"" + key + "\"");
            }
        }
    }

    bool has(const char *key) const {
        return doc_.contains(key) && !doc_[key].is_null();
    }

    std::string string(const char *key) const {
        if (!has(key)) {
            throw bad_request("missing field \"" + std::string(key) + "\"");
        }
        return optional_string(key).value();
    }

    std::optional<std::string> optional_string(const char *key) const {
        if (!has(key)) {
            return std::nullopt;
        }
        if (!doc_[key].is_string()) {
            throw bad_request("field \"" + std::string(key) + "\" must be a string");
        }
        return doc_[key].get<std::string>();
    }

    std::optional<std::uint64_t> optional_uint(const char *key) const {
        if (!has(key)) {
            return std::nullopt;
        }
        const json &v = doc_[key];
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
            throw bad_request("field \"" + std::string(key) + "\" must be a non-negative integer");
        }
        return v.get<std::uint64_t>();
    }

    bool flag(const char *key) const {
        if (!has(key)) {
            return false;
        }
        if (!doc_[key].is_boolean()) {
            throw bad_request("field \"" + std::string(key) + "\" must be a boolean");
        }
        return doc_[key].get<bool>();
    }

    const json &raw(const char *key) const {
        if (!has(key)) {
            throw bad_request("missing field \"" + std::string(key) + "\"");
        }
        return doc_[key];
    }

    std::map<std::string, std::string> string_map(const char *key) const {
        std::map<std::string, std::string> out;
        if (!has(key)) {
            return out;
        }
        const json &v = doc_[key];
        if (!v.is_object()) {
            throw bad_request("field \"" + std::string(key) + "\" must be an object of strings");
        }
        for (const auto &[k, value] : v.items()) {
            if (!value.is_string()) {
                throw bad_request("field \"" + std::string(key) + "\" must be an object of strings");
            }
            out[k] = value.get<std::string>();
        }
        return out;
    }

   private:
    json doc_;
};

SourceDialect source_dialect_field(const Request &req, const char *key) {
    auto name = req.string(key);
    auto d = parse_source_dialect(name);
    if (!d) {
        throw bad_request("unknown source dialect \"" + name + "\"");
    }
    return *d;
}

TargetDialect target_dialect_field(const Request &req, const char *key) {
    auto name = req.string(key);
    auto d = parse_target_dialect(name);
    if (!d) {
        throw bad_request("unknown target dialect \"" + name + "\"");
    }
    return *d;
}

/// Source text plus dialect, honouring an explicit dialect field and
/// otherwise detecting it (optionally with a filename hint).
std::pair<SourceDialect, std::string> source_with_dialect(const Request &req, const char *dialect_key) {
    std::string source = req.string("source");
    if (req.has(dialect_key)) {
        return {source_dialect_field(req, dialect_key), std::move(source)};
    }
    auto filename = req.optional_string("filename");
    std::optional<std::string_view> hint;
    if (filename) {
        hint = *filename;
    }
    SourceDialect d = staged("detect", [&] { return detect_dialect(source, hint); });
    return {d, std::move(source)};
}

Circuit circuit_field(const Request &req) {
    return staged("parse", [&] { return circuit_from_json(req.raw("circuit")); });
}

ordered_json moments_json(const Circuit &circuit) {
    ordered_json out = ordered_json::array();
    for (const auto &column : moments(circuit)) {
        out.push_back(column);
    }
    return out;
}

ServiceResponse handle_health() {
    ServiceResponse r;
    r.body["status"] = "ok";
    r.body["version"] = kVersion;
    return r;
}

ServiceResponse handle_examples() {
    ServiceResponse r;
    r.body["examples"] = ordered_json::array();
    for (const auto &ex : examples_catalog()) {
        ordered_json item;
        item["name"] = ex.name;
        item["dialect"] = dialect_name(ex.dialect);
        item["description"] = ex.description;
        item["source"] = ex.source;
        item["shots"] = ex.shots;
        r.body["examples"].push_back(std::move(item));
    }
    return r;
}

ServiceResponse handle_templates(const ServiceConfig &config) {
    TemplateListing listing = list_templates(config.user_template_dir);
    ServiceResponse r;
    r.body["templates"] = ordered_json::array();
    for (const auto &tpl : listing.templates) {
        ordered_json item;
        item["name"] = tpl.name;
        item["description"] = tpl.description;
        item["builtin"] = tpl.builtin;
        item["variables"] = ordered_json::object();
        for (const auto &[k, v] : tpl.variables) {
            item["variables"][k] = v;
        }
        item["files"] = ordered_json::array();
        for (const auto &[path, content] : tpl.files) {
            item["files"].push_back(path);
        }
        r.body["templates"].push_back(std::move(item));
    }
    r.body["warnings"] = listing.warnings;
    return r;
}

ServiceResponse handle_parse(const std::string &body) {
    Request req(body, {"dialect", "source", "filename", "moments"});
    auto [dialect, source] = source_with_dialect(req, "dialect");
    const bool with_moments = req.flag("moments");
    Circuit circuit = staged("parse", [&] { return parse(dialect, source); });
    if (!circuit.gate_defs.empty()) {
        circuit = staged("expand", [&] { return expand_macros(circuit); });
    }
    ServiceResponse r;
    if (with_moments) {
        r.body["dialect"] = dialect_name(dialect);
        r.body["circuit"] = circuit_to_json(circuit);
        r.body["moments"] = moments_json(circuit);
    } else {
        r.body = circuit_to_json(circuit);
    }
    return r;
}

ServiceResponse handle_emit(const std::string &body) {
    Request req(body, {"circuit", "target"});
    TargetDialect target = target_dialect_field(req, "target");
    Circuit circuit = circuit_field(req);
    Circuit lowered = staged("decompose", [&] { return decompose_for(circuit, target); });
    ServiceResponse r;
    r.body["code"] = staged("emit", [&] { return emit(lowered, target); });
    return r;
}

ServiceResponse handle_convert(const std::string &body) {
    Request req(body, {"from", "to", "source", "filename"});
    TargetDialect to = target_dialect_field(req, "to");
    auto [from, source] = source_with_dialect(req, "from");
    ServiceResponse r;
    r.body["code"] = convert(from, to, source);
    return r;
}

ServiceResponse handle_simulate(const std::string &body) {
    Request req(body, {"dialect", "source", "filename", "circuit", "shots", "seed", "snapshots", "max_qubits"});
    RunOptions options;
    options.shots = req.optional_uint("shots").value_or(0);
    options.seed = req.optional_uint("seed");
    options.capture_snapshots = req.flag("snapshots");
    if (auto mq = req.optional_uint("max_qubits")) {
        if (*mq > kMaxQubitsCeiling) {
            throw bad_request("max_qubits must be at most " + std::to_string(kMaxQubitsCeiling));
        }
        options.max_qubits = static_cast<std::uint32_t>(*mq);
    }
    if (req.has("circuit") == req.has("source")) {
        throw bad_request("give exactly one of \"source\" and \"circuit\"");
    }
    SimResult result;
    if (req.has("circuit")) {
        if (req.has("dialect") || req.has("filename")) {
            throw bad_request("\"dialect\" and \"filename\" apply only to \"source\"");
        }
        Circuit circuit = circuit_field(req);
        result = staged("simulate", [&] { return simulate(circuit, options); });
    } else {
        auto [dialect, source] = source_with_dialect(req, "dialect");
        result = run_source(source, dialect, options);
    }
    ServiceResponse r;
    r.body = sim_result_to_json(result);
    return r;
}

ServiceResponse handle_new_project(const std::string &body, const ServiceConfig &config) {
    Request req(body, {"template", "dest", "vars"});
    std::string name = req.string("template");
    std::string dest = req.string("dest");
    auto vars = req.string_map("vars");
    auto files = staged("scaffold", [&] { return new_project(name, dest, vars, config.user_template_dir); });
    ServiceResponse r;
    r.body["files"] = ordered_json::array();
    for (const auto &f : files) {
        r.body["files"].push_back(f.string());
    }
    return r;
}

struct Route {
    const char *method;
    const char *path;
};

constexpr Route kRoutes[] = {
    {"GET", "/health"},   {"GET", "/examples"}, {"GET", "/templates"},  {"POST", "/parse"},
    {"POST", "/emit"},    {"POST", "/convert"}, {"POST", "/simulate"}, {"POST", "/new-project"},
};

bool is_local_origin(const std::string &origin) {
    static const std::regex local(R"(^https?://(localhost|127\.0\.0\.1|\[::1\])(:\d+)?$)");
    return std::regex_match(origin, local);
}

}  // namespace

ServiceResponse handle_request(const std::string &method, const std::string &path, const std::string &body,
                               const ServiceConfig &config) {
    bool path_known = false;
    for (const auto &route : kRoutes) {
        if (path == route.path) {
            path_known = true;
            if (method == route.method) {
                break;
            }
        }
    }
    try {
        if (method == "GET" && path == "/health") {
            return handle_health();
        }
        if (method == "GET" && path == "/examples") {
            return handle_examples();
        }
        if (method == "GET" && path == "/templates") {
            return handle_templates(config);
        }
        if (method == "POST" && path == "/parse") {
            return handle_parse(body);
        }
        if (method == "POST" && path == "/emit") {
            return handle_emit(body);
        }
        if (method == "POST" && path == "/convert") {
            return handle_convert(body);
        }
        if (method == "POST" && path == "/simulate") {
            return handle_simulate(body);
        }
        if (method == "POST" && path == "/new-project") {
            return handle_new_project(body, config);
        }
    } catch (const Error &e) {
        return error_response(e);
    } catch (const std::bad_alloc &) {
        return error_response(500, "internal", "Internal", "out of memory");
    } catch (const std::exception &e) {
        return error_response(500, "internal", "Internal", std::string("internal error: ") + e.what());
    }
    if (path_known) {
        return error_response(405, "request", "MethodNotAllowed", method + " is not supported on " + path);
    }
    return error_response(404, "request", "NotFound", "no endpoint at " + path);
}

struct Service::Impl {
    httplib::Server server;
};

Service::Service(ServiceConfig config) : config_(std::move(config)), impl_(std::make_unique<Impl>()) {
    auto &server = impl_->server;
    server.set_payload_max_length(kMaxBodyBytes);
    auto add_cors = [](const httplib::Request &req, httplib::Response &res) {
        auto origin = req.get_header_value("Origin");
        if (!origin.empty() && is_local_origin(origin)) {
            res.set_header("Access-Control-Allow-Origin", origin);
            res.set_header("Vary", "Origin");
            res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
            res.set_header("Access-Control-Allow-Headers", "Content-Type");
        }
    };
    auto dispatch = [this, add_cors](const httplib::Request &req, httplib::Response &res) {
        ServiceResponse out = handle_request(req.method, req.path, req.body, config_);
        res.status = out.status;
        res.set_content(out.body.dump(), "application/json; charset=utf-8");
        add_cors(req, res);
    };
    for (const auto &route : kRoutes) {
        if (std::string_view(route.method) == "GET") {
            server.Get(route.path, dispatch);
        } else {
            server.Post(route.path, dispatch);
        }
    }
    server.Options(R"(/.*)", [add_cors](const httplib::Request &req, httplib::Response &res) {
        res.status = 204;
        add_cors(req, res);
    });
    if (config_.static_dir) {
        server.set_mount_point("/", config_.static_dir->string());
    }
    server.set_error_handler([this, add_cors](const httplib::Request &req, httplib::Response &res) {
        if (!res.body.empty()) {
            return;
        }
        if (res.status == 404 || res.status == 405) {
            ServiceResponse out = handle_request(req.method, req.path, req.body, config_);
            res.status = out.status;
            res.set_content(out.body.dump(), "application/json; charset=utf-8");
        } else if (res.body.empty()) {
            auto out = error_response(res.status, "request", "Http", "request could not be processed");
            res.set_content(out.body.dump(), "application/json; charset=utf-8");
        }
        add_cors(req, res);
    });
    server.set_exception_handler([](const httplib::Request &, httplib::Response &res, std::exception_ptr) {
        auto out = error_response(500, "internal", "Internal", "internal error");
        res.status = 500;
        res.set_content(out.body.dump(), "application/json; charset=utf-8");
    });
}

Service::~Service() {
    stop();
}

int Service::bind() {
    auto &server = impl_->server;
    server.set_socket_options([](socket_t sock) {
        int yes = 1;
        setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
    });
    int port = 0;
    if (config_.port == 0) {
        port = server.bind_to_any_port(config_.bind_address);
    } else if (server.bind_to_port(config_.bind_address, config_.port)) {
        port = config_.port;
    } else {
        port = -1;
    }
    if (port <= 0) {
        throw Error(ErrorKind::Io, "cannot bind " + config_.bind_address + ":" + std::to_string(config_.port));
    }
    port_ = port;
    return port;
}

int Service::start() {
    int port = bind();
    thread_ = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    return port;
}

void Service::run() {
    bind();
    impl_->server.listen_after_bind();
}

void Service::stop() {
    impl_->server.stop();
    if (thread_.joinable()) {
        thread_.join();
    }
}

}  // namespace qbridge
