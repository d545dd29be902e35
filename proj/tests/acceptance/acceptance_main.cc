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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "oracle.h"
#include "mutate.h"
#include "qbridge/codegen.h"
#include "qbridge/error.h"
#include "qbridge/examples_catalog.h"
#include "qbridge/frontends.h"
#include "qbridge/runner.h"
#include "qbridge/scaffold.h"
#include "qbridge/service.h"
#include "qbridge/simulator.h"
#include "random_circuits.h"
#include "schema.h"
#include "service_cases.h"
#include "test_util.h"

namespace {

namespace fs = std::filesystem;
using namespace qbridge;
using namespace testing_support;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string &why) {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

const std::map<std::string, std::string> kGoldenVars{
    {"project_name", "bell-demo"}, {"author", "Ada Lovelace"}, {"date_iso", "2026-01-01"}};

Outcome bell_flow() {
    Outcome o;
    TempDir tmp;
    fs::path proj = tmp.path() / "hello";
    auto start = Clock::now();
    auto created = run_cli({"new", "qiskit-hello-world", proj.string()}, "", {"QBRIDGE_TEMPLATES_DIR=" + (tmp.path() / "tpl").string()});
    if (created.exit_code != 0) {
        o.fail("new exited " + std::to_string(created.exit_code) + ": " + created.err);
        return o;
    }
    auto ran = run_cli({"run", (proj / "bell.qasm").string(), "--json"});
    if (ran.exit_code != 0) {
        o.fail("run exited " + std::to_string(ran.exit_code) + ": " + ran.err);
        return o;
    }
    auto converted = run_cli({"convert", (proj / "bell.qasm").string(), "--to", "qiskit-src"});
    double elapsed = seconds_since(start);
    if (converted.exit_code != 0 || converted.out.find("QuantumCircuit") == std::string::npos) {
        o.fail("convert exited " + std::to_string(converted.exit_code) + ": " + converted.err);
        return o;
    }
    auto result = nlohmann::json::parse(ran.out);
    std::map<std::string, double> got = result.at("probabilities").get<std::map<std::string, double>>();
    double err = oracle::linf(got, {{"00", 0.5}, {"11", 0.5}});
    if (err > 1e-12) {
        o.fail("bell distribution off by " + fmt(err));
    }
    if (elapsed >= 1.0) {
        o.fail("flow took " + fmt(elapsed) + " s");
    }
    if (o.pass) {
        o.detail = "linf " + fmt(err) + ", " + fmt(elapsed) + " s";
    }
    return o;
}

Outcome qft2_example() {
    Outcome o;
    const CatalogExample *ex = find_example("qft-2");
    if (ex == nullptr) {
        o.fail("example missing");
        return o;
    }
    SimResult r = run_source(ex->source, ex->dialect, {});
    std::map<std::string, double> expected{{"00", 0.25}, {"01", 0.25}, {"10", 0.25}, {"11", 0.25}};
    double err = oracle::linf(r.probabilities, expected);
    if (r.probabilities.size() != 4 || err > 1e-12) {
        o.fail("linf " + fmt(err) + " over " + std::to_string(r.probabilities.size()) + " outcomes");
    } else {
        o.detail = "linf " + fmt(err);
    }
    return o;
}

Outcome random_vs_oracle() {
    Outcome o;
    std::mt19937_64 rng(2026);
    RandomCircuitShape shape;
    auto start = Clock::now();
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
        Circuit c = random_circuit(rng, shape);
        SimResult r = simulate(c);
        double err = c.has_measurements()
                         ? oracle::linf(r.probabilities, oracle::terminal_measure_distribution(c))
                         : oracle::linf(*r.full_state_probabilities, oracle::full_state_distribution(c));
        worst = std::max(worst, err);
        if (err > 1e-9) {
            o.fail("circuit " + std::to_string(i) + " linf " + fmt(err));
        }
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 30.0) {
        o.fail("took " + fmt(elapsed) + " s");
    }
    if (o.pass) {
        o.detail = "worst linf " + fmt(worst) + ", " + fmt(elapsed) + " s";
    }
    return o;
}

Outcome conversion_preserves_semantics() {
    Outcome o;
    const std::vector<SourceDialect> dialects{SourceDialect::OpenQasm2, SourceDialect::Quil2, SourceDialect::IonqJson,
                                              SourceDialect::QuantumCircuitJson};
    std::mt19937_64 rng(77);
    RandomCircuitShape shape;
    shape.gates = common_gate_set();
    shape.terminal_measures = false;
    double worst = 0;
    int pairs = 0;
    for (int i = 0; i < 50 && o.pass; ++i) {
        Circuit c = random_circuit(rng, shape);
        auto expected = *simulate(c).full_state_probabilities;
        for (SourceDialect from : dialects) {
            std::string src = emit(c, as_target(from));
            for (SourceDialect to : dialects) {
                if (from == to) {
                    continue;
                }
                try {
                    std::string out = convert(from, as_target(to), src);
                    Circuit back = parse(to, out);
                    double err = oracle::linf(*simulate(back).full_state_probabilities, expected);
                    worst = std::max(worst, err);
                    ++pairs;
                    if (err > 1e-9) {
                        o.fail("circuit " + std::to_string(i) + " " + std::string(dialect_name(from)) + " -> " +
                               std::string(dialect_name(to)) + " linf " + fmt(err));
                    }
                } catch (const std::exception &e) {
                    o.fail("circuit " + std::to_string(i) + " " + std::string(dialect_name(from)) + " -> " +
                           std::string(dialect_name(to)) + ": " + e.what());
                }
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(pairs) + " conversions, worst linf " + fmt(worst);
    }
    return o;
}

Outcome corpus_round_trip() {
    Outcome o;
    std::size_t counted = 0;
    auto check = [&](const std::string &subdir, SourceDialect dialect, const std::string &ext) {
        std::size_t n = 0;
        for (const auto &file : corpus_files(subdir)) {
            if (file.extension() != ext) {
                continue;
            }
            ++n;
            try {
                Circuit c = parse(dialect, read_file(file));
                std::string first = emit(c, as_target(dialect));
                std::string again = emit(c, as_target(dialect));
                Circuit back = parse(dialect, first);
                if (first != again) {
                    o.fail(file.filename().string() + ": emit is not deterministic");
                } else if (!structurally_equal(c, back)) {
                    o.fail(file.filename().string() + ": round trip differs");
                } else if (emit(back, as_target(dialect)) != first) {
                    o.fail(file.filename().string() + ": re-emit differs");
                }
            } catch (const std::exception &e) {
                o.fail(file.filename().string() + ": " + e.what());
            }
        }
        if (n < 20) {
            o.fail(subdir + " corpus has only " + std::to_string(n) + " files");
        }
        counted += n;
    };
    check("openqasm2", SourceDialect::OpenQasm2, ".qasm");
    check("quil2", SourceDialect::Quil2, ".quil");
    if (o.pass) {
        o.detail = std::to_string(counted) + " files";
    }
    return o;
}

std::vector<std::string> split_lines(const std::string &text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    lines.push_back(cur);
    return lines;
}

Outcome fuzz_frontends() {
    Outcome o;
    const std::vector<std::pair<std::string, SourceDialect>> frontends{
        {"openqasm2", SourceDialect::OpenQasm2},
        {"quil2", SourceDialect::Quil2},
        {"ionq-json", SourceDialect::IonqJson},
        {"quantum-circuit-json", SourceDialect::QuantumCircuitJson},
        {"quirk-json", SourceDialect::QuirkJson}};
    std::size_t total = 0, rejected = 0;
    for (const auto &[name, dialect] : frontends) {
        std::vector<std::string> seeds;
        for (const auto &f : corpus_files(name)) {
            seeds.push_back(read_file(f));
        }
        if (seeds.empty()) {
            o.fail("no seeds for " + name);
            continue;
        }
        std::mt19937_64 rng(std::hash<std::string>{}(name));
        const auto &dict = fuzz_dictionary(name);
        for (int i = 0; i < 10000; ++i) {
            std::string input = mutate(seeds[rng() % seeds.size()], dict, rng);
            ++total;
            try {
                parse(dialect, input);
            } catch (const ParseError &e) {
                ++rejected;
                auto lines = split_lines(input);
                bool ok = e.line() >= 1 && e.line() <= lines.size() && e.column() >= 1 &&
                          e.column() <= lines[e.line() - 1].size() + 1;
                if (!ok) {
                    o.fail(name + " mutation " + std::to_string(i) + ": position " + std::to_string(e.line()) + ":" +
                           std::to_string(e.column()) + " outside input");
                }
            } catch (const std::exception &e) {
                o.fail(name + " mutation " + std::to_string(i) + ": non-parse failure: " + e.what());
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(total) + " inputs, " + std::to_string(rejected) + " rejected";
    }
    return o;
}

Outcome trajectory_vs_collapse_tree() {
    Outcome o;
    Circuit c = parse_openqasm2(
        "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n"
        "qreg q[3];\ncreg c[3];\n"
        "h q[0];\ncx q[0],q[1];\ncx q[1],q[2];\n"
        "measure q[0] -> c[0];\n"
        "if(c==1) x q[2];\n"
        "measure q[1] -> c[1];\nmeasure q[2] -> c[2];\n");
    const std::uint64_t shots = 8192;
    SimResult r = simulate(c, {.shots = shots, .seed = 7});
    auto expected = oracle::collapse_tree_distribution(c);
    if (r.mode != SimMode::Trajectory) {
        o.fail("exact mode was used");
    }
    double worst_z = 0;
    for (const auto &[key, n] : *r.shots) {
        if (!expected.contains(key)) {
            o.fail("impossible outcome " + key);
        }
        (void)n;
    }
    for (const auto &[key, p] : expected) {
        double count = r.shots->contains(key) ? static_cast<double>(r.shots->at(key)) : 0.0;
        double sigma = std::sqrt(shots * p * (1 - p));
        double dev = std::abs(count - shots * p);
        if (sigma == 0) {
            if (dev > 0) {
                o.fail(key + " should be deterministic");
            }
            continue;
        }
        worst_z = std::max(worst_z, dev / sigma);
        if (dev > 5 * sigma) {
            o.fail(key + " deviates by " + fmt(dev / sigma) + " sigma");
        }
    }
    if (o.pass) {
        o.detail = std::to_string(expected.size()) + " outcomes, worst " + fmt(worst_z) + " sigma";
    }
    return o;
}

std::map<std::string, std::string> read_tree(const fs::path &root) {
    std::map<std::string, std::string> out;
    for (const auto &entry : fs::recursive_directory_iterator(root)) {
        if (entry.is_regular_file()) {
            out[fs::relative(entry.path(), root).generic_string()] = read_file(entry.path());
        }
    }
    return out;
}

Outcome scaffold_round_trip() {
    Outcome o;
    TempDir tmp;
    fs::path user = tmp.path() / "templates";
    fs::path first = tmp.path() / "bell-demo";
    new_project("qiskit-hello-world", first, kGoldenVars, user);
    auto golden = read_tree(source_dir() / "tests" / "golden" / "qiskit-hello-world");
    auto made = read_tree(first);
    if (golden.empty()) {
        o.fail("golden tree missing");
    } else if (made != golden) {
        o.fail("generated project differs from golden files");
    }
    save_as_template(first, "bell-copy", user, "copy");
    fs::path second = tmp.path() / "bell-demo-2";
    new_project("bell-copy", second, {}, user);
    if (read_tree(second) != made) {
        o.fail("saved template does not reproduce the project");
    }
    if (o.pass) {
        o.detail = std::to_string(made.size()) + " files";
    }
    return o;
}

Outcome service_schemas() {
    Outcome o;
    TempDir tmp;
    SchemaSet schemas(source_dir() / "docs" / "schemas");
    ServiceConfig config;
    config.user_template_dir = tmp.path() / "templates";
    fs::create_directories(tmp.path() / "scratch");
    auto cases = service_cases(tmp.path() / "scratch");
    std::set<std::string> endpoints;
    for (const auto &c : cases) {
        std::string req = request_schema(c.path);
        if (!req.empty() && c.status == 200) {
            auto errs = schemas.validate(nlohmann::json::parse(c.body), req);
            if (!errs.empty()) {
                o.fail(c.label + ": request does not match " + req + ": " + errs.front());
            }
        }
        ServiceResponse res = handle_request(c.method, c.path, c.body, config);
        if (res.status != c.status) {
            o.fail(c.label + ": status " + std::to_string(res.status) + ", expected " + std::to_string(c.status) +
                   " " + res.body.dump());
            continue;
        }
        auto errs = schemas.validate(nlohmann::json::parse(res.body.dump()), c.schema);
        if (!errs.empty()) {
            o.fail(c.label + ": " + errs.front());
        }
        endpoints.insert(c.path);
    }
    if (o.pass) {
        o.detail = std::to_string(cases.size()) + " requests over " + std::to_string(endpoints.size()) + " paths";
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"bell-flow", bell_flow},
        {"qft2-example", qft2_example},
        {"random-circuits-vs-oracle", random_vs_oracle},
        {"conversion-preserves-distribution", conversion_preserves_semantics},
        {"corpus-round-trip", corpus_round_trip},
        {"fuzz-positions", fuzz_frontends},
        {"trajectory-vs-collapse-tree", trajectory_vs_collapse_tree},
        {"scaffold-round-trip", scaffold_round_trip},
        {"service-schemas", service_schemas},
    };
    int failures = 0;
    for (const auto &[name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << "  " << o.detail << std::endl;
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
