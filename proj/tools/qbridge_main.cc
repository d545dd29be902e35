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

#include <pthread.h>

#include <csignal>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qbridge/codegen.h"
#include "qbridge/error.h"
#include "qbridge/examples_catalog.h"
#include "qbridge/frontends.h"
#include "qbridge/runner.h"
#include "qbridge/scaffold.h"
#include "qbridge/service.h"
#include "qbridge/version.h"

namespace {

namespace fs = std::filesystem;
using namespace qbridge;

constexpr int kExitOk = 0;
constexpr int kExitUserError = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string &path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        Error e(ErrorKind::Io, "cannot read " + path);
        e.set_stage("input");
        throw e;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string dialect_list(bool targets) {
    std::string out;
    auto add = [&](std::string_view name) {
        if (!out.empty()) {
            out += ", ";
        }
        out += name;
    };
    if (targets) {
        for (auto d : all_target_dialects()) {
            add(dialect_name(d));
        }
    } else {
        for (auto d : all_source_dialects()) {
            add(dialect_name(d));
        }
    }
    return out;
}

SourceDialect source_flag(const std::string &name) {
    auto d = parse_source_dialect(name);
    if (!d) {
        throw UsageError("unknown source dialect '" + name + "' (expected one of: " + dialect_list(false) + ")");
    }
    return *d;
}

TargetDialect target_flag(const std::string &name) {
    auto d = parse_target_dialect(name);
    if (!d) {
        throw UsageError("unknown target dialect '" + name + "' (expected one of: " + dialect_list(true) + ")");
    }
    return *d;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qbridge: parse, convert, simulate and scaffold quantum programs"};
    app.set_version_flag("--version", std::string("qbridge ") + kVersion);
    app.require_subcommand(1);
    app.footer(
        "Environment:\n  QBRIDGE_TEMPLATES_DIR  user template root (default: $HOME/.qbridge/templates)\n\n"
        "Source dialects: " + dialect_list(false) + "\nTarget dialects: " + dialect_list(true));

    std::string templates_dir;
    app.add_option("--templates-dir", templates_dir, "User template root (overrides QBRIDGE_TEMPLATES_DIR)");

    // run
    auto *run = app.add_subcommand("run", "Simulate a program and print its measurement probabilities");
    std::string run_file, run_dialect;
    std::uint64_t run_shots = 0, run_seed = 0;
    std::uint32_t run_max_qubits = RunOptions{}.max_qubits;
    bool run_json = false, run_snapshots = false;
    run->add_option("file", run_file, "Source file ('-' for standard input)")->required();
    run->add_option("--dialect", run_dialect, "Source dialect (detected when omitted)");
    run->add_option("--shots", run_shots, "Number of shots to sample (0 = exact only)");
    auto *seed_opt = run->add_option("--seed", run_seed, "Seed for shot sampling");
    run->add_option("--max-qubits", run_max_qubits, "Refuse circuits wider than this");
    run->add_flag("--json", run_json, "Print the result as JSON");
    run->add_flag("--snapshots", run_snapshots, "Include per-moment P(1) for every qubit");

    // convert
    auto *conv = app.add_subcommand("convert", "Translate a program into another dialect");
    std::string conv_file, conv_from, conv_to, conv_out;
    conv->add_option("file", conv_file, "Source file ('-' for standard input)")->required();
    conv->add_option("--from", conv_from, "Source dialect (detected when omitted)");
    conv->add_option("--to", conv_to, "Target dialect")->required();
    conv->add_option("-o,--output", conv_out, "Write to this file instead of standard output");

    // new
    auto *create = app.add_subcommand("new", "Create a project from a template");
    std::string new_template, new_dir;
    std::vector<std::string> new_vars;
    create->add_option("template", new_template, "Template name")->required();
    create->add_option("dir", new_dir, "Destination directory (missing or empty)")->required();
    create->add_option("--var", new_vars, "Template variable as key=value (repeatable)");

    // templates
    auto *tpl = app.add_subcommand("templates", "List templates or save a directory as one");
    bool tpl_json = false;
    tpl->add_flag("--json", tpl_json, "Print the listing as JSON");
    auto *tpl_list = tpl->add_subcommand("list", "List built-in and user templates");
    tpl_list->add_flag("--json", tpl_json, "Print the listing as JSON");
    auto *tpl_save = tpl->add_subcommand("save", "Save a project directory as a user template");
    std::string save_dir, save_name, save_description;
    tpl_save->add_option("dir", save_dir, "Project directory")->required();
    tpl_save->add_option("name", save_name, "Template name ([a-z0-9-]+)")->required();
    tpl_save->add_option("--description", save_description, "Template description");

    // serve
    auto *serve = app.add_subcommand("serve", "Run the local JSON API");
    ServiceConfig service_config;
    std::string static_dir;
    serve->add_option("--port", service_config.port, "Port to listen on (0 picks a free port)");
    serve->add_option("--bind", service_config.bind_address, "Address to bind");
    serve->add_option("--static", static_dir, "Directory with the designer UI bundle");

    // examples
    auto *ex = app.add_subcommand("examples", "List or print the built-in example circuits");
    bool ex_json = false;
    ex->add_flag("--json", ex_json, "Print the listing as JSON");
    auto *ex_list = ex->add_subcommand("list", "List examples");
    ex_list->add_flag("--json", ex_json, "Print the listing as JSON");
    auto *ex_show = ex->add_subcommand("show", "Print an example's source");
    std::string ex_name;
    ex_show->add_option("name", ex_name, "Example name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::optional<fs::path> user_dir =
        templates_dir.empty() ? default_user_template_dir() : std::optional<fs::path>(templates_dir);

    try {
        if (*run) {
            RunOptions options;
            options.shots = run_shots;
            options.capture_snapshots = run_snapshots;
            options.max_qubits = run_max_qubits;
            if (*seed_opt) {
                options.seed = run_seed;
            }
            std::optional<SourceDialect> dialect;
            if (!run_dialect.empty()) {
                dialect = source_flag(run_dialect);
            }
            std::string source = read_input(run_file);
            std::optional<std::string_view> hint;
            if (run_file != "-") {
                hint = run_file;
            }
            SimResult result = run_source(source, dialect, options, hint);
            std::cout << run_report(result, run_json ? ReportFormat::Json : ReportFormat::Plain);
            return kExitOk;
        }
        if (*conv) {
            TargetDialect to = target_flag(conv_to);
            std::optional<SourceDialect> from;
            if (!conv_from.empty()) {
                from = source_flag(conv_from);
            }
            std::string source = read_input(conv_file);
            if (!from) {
                std::optional<std::string_view> hint;
                if (conv_file != "-") {
                    hint = conv_file;
                }
                try {
                    from = detect_dialect(source, hint);
                } catch (Error &e) {
                    e.set_stage("detect");
                    throw;
                }
            }
            std::string code = convert(*from, to, source);
            if (conv_out.empty()) {
                std::cout << code;
            } else {
                std::ofstream out(conv_out, std::ios::binary | std::ios::trunc);
                out << code;
                out.close();
                if (!out) {
                    Error e(ErrorKind::Io, "cannot write " + conv_out);
                    e.set_stage("output");
                    throw e;
                }
            }
            return kExitOk;
        }
        if (*create) {
            std::map<std::string, std::string> vars;
            for (const auto &kv : new_vars) {
                auto eq = kv.find('=');
                if (eq == std::string::npos || eq == 0) {
                    throw UsageError("--var expects key=value, got '" + kv + "'");
                }
                vars[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            std::vector<fs::path> files;
            try {
                files = new_project(new_template, new_dir, vars, user_dir);
            } catch (Error &e) {
                e.set_stage("scaffold");
                throw;
            }
            for (const auto &f : files) {
                std::cout << f.string() << "\n";
            }
            return kExitOk;
        }
        if (*tpl) {
            if (*tpl_save) {
                if (!user_dir) {
                    throw UsageError("no user template directory; set QBRIDGE_TEMPLATES_DIR or --templates-dir");
                }
                try {
                    ProjectTemplate saved = save_as_template(save_dir, save_name, *user_dir, save_description);
                    std::cout << "saved template '" << saved.name << "' (" << saved.files.size() << " files) to "
                              << saved.location->string() << "\n";
                } catch (Error &e) {
                    e.set_stage("scaffold");
                    throw;
                }
                return kExitOk;
            }
            TemplateListing listing = list_templates(user_dir);
            for (const auto &w : listing.warnings) {
                std::cerr << "warning: " << w << "\n";
            }
            if (tpl_json) {
                nlohmann::ordered_json out = nlohmann::ordered_json::array();
                for (const auto &t : listing.templates) {
                    nlohmann::ordered_json item;
                    item["name"] = t.name;
                    item["description"] = t.description;
                    item["builtin"] = t.builtin;
                    out.push_back(std::move(item));
                }
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto &t : listing.templates) {
                    std::cout << t.name << (t.builtin ? "  (built-in)  " : "  ") << t.description << "\n";
                }
            }
            return kExitOk;
        }
        if (*serve) {
            service_config.user_template_dir = user_dir;
            if (!static_dir.empty()) {
                service_config.static_dir = static_dir;
            }
            // Block the stop signals before the server thread starts so it
            // inherits the mask and this thread alone receives them.
            sigset_t stop_signals;
            sigemptyset(&stop_signals);
            sigaddset(&stop_signals, SIGINT);
            sigaddset(&stop_signals, SIGTERM);
            pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);
            Service service(service_config);
            int port = service.start();
            std::cerr << "listening on http://" << service_config.bind_address << ":" << port << "\n";
            std::cout << port << std::endl;
            int received = 0;
            sigwait(&stop_signals, &received);
            service.stop();
            return kExitOk;
        }
        if (*ex) {
            if (*ex_show) {
                const CatalogExample *example = find_example(ex_name);
                if (example == nullptr) {
                    throw UsageError("no example named '" + ex_name + "'");
                }
                std::cout << example->source;
                return kExitOk;
            }
            if (ex_json) {
                nlohmann::ordered_json out = nlohmann::ordered_json::array();
                for (const auto &e : examples_catalog()) {
                    nlohmann::ordered_json item;
                    item["name"] = e.name;
                    item["dialect"] = dialect_name(e.dialect);
                    item["description"] = e.description;
                    out.push_back(std::move(item));
                }
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto &e : examples_catalog()) {
                    std::cout << e.name << "  " << e.description << "\n";
                }
            }
            return kExitOk;
        }
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        std::cerr << format_error(e);
        return kExitUserError;
    } catch (const std::exception &e) {
        std::cerr << "[internal] " << e.what() << "\n";
        return kExitUserError;
    }
    return kExitUsage;
}
