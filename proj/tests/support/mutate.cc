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

#include "mutate.h"

#include <algorithm>
#include <map>

namespace testing_support {

namespace {

std::size_t upto(std::mt19937_64 &rng, std::size_t n) {
    return n == 0 ? 0 : std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace

std::string mutate(const std::string &seed, const std::vector<std::string> &dictionary, std::mt19937_64 &rng) {
    std::string s = seed;
    const std::size_t edits = 1 + upto(rng, 4);
    for (std::size_t e = 0; e < edits; ++e) {
        const std::size_t pos = upto(rng, s.size() + 1);
        switch (upto(rng, 9)) {
            case 0:
                if (!s.empty()) {
                    s[upto(rng, s.size())] = static_cast<char>(upto(rng, 256));
                }
                break;
            case 1:
                s.erase(std::min(pos, s.size()), 1 + upto(rng, 8));
                break;
            case 2:
            case 3:
                if (!dictionary.empty()) {
                    s.insert(std::min(pos, s.size()), dictionary[upto(rng, dictionary.size())]);
                }
                break;
            case 4: {
                std::size_t from = upto(rng, s.size() + 1);
                std::size_t len = upto(rng, 32);
                std::string slice = s.substr(std::min(from, s.size()), len);
                s.insert(std::min(pos, s.size()), slice);
                break;
            }
            case 5:
                s.resize(std::min(pos, s.size()));
                break;
            case 6: {
                static const char digits[] = "0123456789";
                std::string number;
                std::size_t len = 1 + upto(rng, 24);
                for (std::size_t i = 0; i < len; ++i) {
                    number += digits[upto(rng, 10)];
                }
                s.insert(std::min(pos, s.size()), number);
                break;
            }
            case 7:
                if (!s.empty()) {
                    s[upto(rng, s.size())] = "\n{}[]();,\"-.:#"[upto(rng, 14)];
                }
                break;
            default: {
                // Swap two slices.
                if (s.size() > 4) {
                    std::size_t a = upto(rng, s.size() / 2);
                    std::size_t b = s.size() / 2 + upto(rng, s.size() / 2);
                    std::size_t len = 1 + upto(rng, std::min<std::size_t>(16, s.size() - b));
                    if (a + len <= b) {
                        std::swap_ranges(s.begin() + static_cast<long>(a), s.begin() + static_cast<long>(a + len),
                                         s.begin() + static_cast<long>(b));
                    }
                }
                break;
            }
        }
    }
    return s;
}

const std::vector<std::string> &fuzz_dictionary(const std::string &dialect) {
    static const std::map<std::string, std::vector<std::string>> dictionaries = {
        {"openqasm2",
         {"OPENQASM 2.0;", "include \"qelib1.inc\";", "qreg", "creg", "gate", "opaque", "measure", "reset",
          "barrier", "if", "==", "->", "pi", "q[0]", "c[1]", "(", ")", "[", "]", "{", "}", ";", ",", "U", "CX",
          "cx", "u3", "1e308", "-", "^", "sin(", "sqrt", "//", "\"", "99999999999", "q", "\n"}},
        {"quil2",
         {"DECLARE", "ro", "BIT", "BIT[2]", "REAL", "MEASURE", "RESET", "PRAGMA", "HALT", "DEFGATE", "H", "CNOT",
          "RX(", "pi/2", "CPHASE", ")", "ro[0]", "[", "]", "#", "%theta", "i", "1e400", "-", "\n", ";", "99999"}},
        {"ionq-json",
         {"\"gate\"", "\"target\"", "\"targets\"", "\"control\"", "\"controls\"", "\"rotation\"", "\"qubits\"",
          "\"circuit\"", "\"cnot\"", "\"h\"", ":", ",", "{", "}", "[", "]", "null", "true", "-1", "1e999", "0.5",
          "\"input\"", "\"\\u0000\""}},
        {"quantum-circuit-json",
         {"\"numQubits\"", "\"gates\"", "\"id\"", "\"name\"", "\"connector\"", "\"options\"", "\"params\"",
          "\"cregs\"", "\"creg\"", "\"measure\"", "\"cx\"", "\"theta\"", "\"pi/2\"", ":", ",", "{", "}", "[", "]",
          "null", "-1", "1e999", "\"condition\""}},
        {"quirk-json",
         {"\"cols\"", "\"H\"", "\"X\"", "\"Swap\"", "\"Measure\"", "\"\xe2\x80\xa2\"", "1", ":", ",", "[", "]",
          "{", "}", "null", "\"Z^\xc2\xbd\"", "2"}},
    };
    static const std::vector<std::string> none;
    auto it = dictionaries.find(dialect);
    return it == dictionaries.end() ? none : it->second;
}

}  // namespace testing_support
