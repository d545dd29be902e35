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

#include "service_cases.h"

#include "json.hpp"

namespace testing_support {

namespace {

using nlohmann::json;

const char *kBell =
    "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncreg c[2];\nh q[0];\ncx q[0],q[1];\nmeasure q -> c;\n";
const char *kFeedback =
    "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\ncreg c[1];\nh q[0];\nmeasure q[0] -> c[0];\n"
    "if(c==1) x q[0];\n";

std::string schema_for(const std::string &path, int status) {
    if (status != 200) {
        return "error.json";
    }
    if (path == "/health" || path == "/examples" || path == "/templates") {
        return path.substr(1) + ".json";
    }
    return path.substr(1) + ".json#/$defs/response";
}

json bell_ir() {
    return json::parse(R"({"name":"bell","qubits":2,"cregs":[{"name":"c","size":2}],"ops":[
        {"kind":"gate","name":"h","params":[],"qubits":[0]},
        {"kind":"gate","name":"cx","params":[],"qubits":[0,1]},
        {"kind":"measure","qubit":0,"creg":"c","bit":0},
        {"kind":"measure","qubit":1,"creg":"c","bit":1}]})");
}

}  // namespace

std::string request_schema(const std::string &path) {
    if (path == "/health" || path == "/examples" || path == "/templates") {
        return "";
    }
    return path.substr(1) + ".json#/$defs/request";
}

std::vector<ServiceCase> service_cases(const std::filesystem::path &scratch) {
    std::vector<ServiceCase> cases;
    auto add = [&](std::string label, std::string method, std::string path, const json &body, int status) {
        std::string text = body.is_null() ? "" : body.dump();
        std::string schema = schema_for(path, status);
        cases.push_back({std::move(label), std::move(method), std::move(path), std::move(text), status,
                         std::move(schema)});
    };
    auto add_raw = [&](std::string label, std::string path, std::string body, int status) {
        std::string schema = schema_for(path, status);
        cases.push_back({std::move(label), "POST", std::move(path), std::move(body), status, std::move(schema)});
    };

    add("health", "GET", "/health", nullptr, 200);
    add("examples", "GET", "/examples", nullptr, 200);
    add("templates", "GET", "/templates", nullptr, 200);

    add("parse qasm", "POST", "/parse", {{"source", kBell}}, 200);
    add("parse moments", "POST", "/parse", {{"source", kBell}, {"dialect", "openqasm2"}, {"moments", true}}, 200);
    add("parse quil by filename", "POST", "/parse", {{"source", "H 0\nCNOT 0 1\n"}, {"filename", "x.quil"}}, 200);
    add("parse syntax error", "POST", "/parse", {{"source", "OPENQASM 2.0;\nqreg q[2;\n"}, {"dialect", "openqasm2"}},
        400);
    add("parse unsupported", "POST", "/parse",
        {{"source", "DEFCIRCUIT FOO:\n    H 0\n"}, {"dialect", "quil2"}}, 422);
    add("parse undetectable", "POST", "/parse", {{"source", "hello there"}}, 400);
    add("parse missing source", "POST", "/parse", json::object(), 400);
    add("parse unknown field", "POST", "/parse", {{"source", kBell}, {"colour", "red"}}, 400);
    add("parse bad dialect", "POST", "/parse", {{"source", kBell}, {"dialect", "qasm"}}, 400);
    add_raw("parse malformed body", "/parse", "{not json", 400);

    add("emit quil", "POST", "/emit", {{"circuit", bell_ir()}, {"target", "quil2"}}, 200);
    add("emit cirq", "POST", "/emit", {{"circuit", bell_ir()}, {"target", "cirq-src"}}, 200);
    add("emit bad target", "POST", "/emit", {{"circuit", bell_ir()}, {"target", "nope"}}, 400);
    json bad_ir = bell_ir();
    bad_ir["ops"][0]["qubits"] = json::array({7});
    add("emit invalid circuit", "POST", "/emit", {{"circuit", bad_ir}, {"target", "openqasm2"}}, 400);
    json feedback_ir = bell_ir();
    feedback_ir["ops"].push_back(json::parse(
        R"({"kind":"conditional","creg":"c","value":1,"gate":{"name":"x","params":[],"qubits":[0]}})"));
    add("emit unsupported for target", "POST", "/emit", {{"circuit", feedback_ir}, {"target", "ionq-json"}}, 422);

    add("convert qasm to quil", "POST", "/convert", {{"source", kBell}, {"to", "quil2"}}, 200);
    add("convert explicit from", "POST", "/convert",
        {{"source", kBell}, {"from", "openqasm2"}, {"to", "qiskit-src"}}, 200);
    add("convert missing to", "POST", "/convert", {{"source", kBell}}, 400);
    add("convert parse error", "POST", "/convert", {{"source", "H 0\nCNOT 0\n"}, {"from", "quil2"}, {"to", "openqasm2"}},
        400);
    add("convert unsupported", "POST", "/convert", {{"source", kFeedback}, {"to", "quirk-json"}}, 422);

    add("simulate source", "POST", "/simulate", {{"source", kBell}, {"shots", 100}, {"seed", 4}, {"snapshots", true}},
        200);
    add("simulate circuit", "POST", "/simulate", {{"circuit", bell_ir()}}, 200);
    add("simulate trajectories", "POST", "/simulate", {{"source", kFeedback}, {"shots", 64}, {"seed", 1}}, 200);
    add("simulate shots required", "POST", "/simulate", {{"source", kFeedback}}, 400);
    add("simulate both inputs", "POST", "/simulate", {{"source", kBell}, {"circuit", bell_ir()}}, 400);
    add("simulate neither input", "POST", "/simulate", json::object(), 400);
    add("simulate too many qubits", "POST", "/simulate",
        {{"source", "OPENQASM 2.0;\nqreg q[5];\n"}, {"max_qubits", 3}}, 422);
    add("simulate negative shots", "POST", "/simulate", {{"source", kBell}, {"shots", -1}}, 400);

    add("new project", "POST", "/new-project",
        {{"template", "qiskit-hello-world"},
         {"dest", (scratch / "fresh").string()},
         {"vars", {{"author", "Test"}}}},
        200);
    add("new project unknown template", "POST", "/new-project",
        {{"template", "does-not-exist"}, {"dest", (scratch / "other").string()}}, 404);
    add("new project occupied", "POST", "/new-project",
        {{"template", "qiskit-hello-world"}, {"dest", (scratch / "fresh").string()}}, 400);
    add("new project bad vars", "POST", "/new-project",
        {{"template", "qiskit-hello-world"}, {"dest", (scratch / "x").string()}, {"vars", {{"author", 3}}}}, 400);

    add("unknown path", "GET", "/nowhere", nullptr, 404);
    cases.back().schema = "error.json";
    add("wrong method", "GET", "/parse", nullptr, 405);
    return cases;
}

}  // namespace testing_support
