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

#include <filesystem>
#include <string>
#include <vector>

namespace testing_support {

std::filesystem::path source_dir();
std::filesystem::path cli_path();

std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, const std::string &content);

/// Files of a corpus subdirectory, sorted by name.
std::vector<std::filesystem::path> corpus_files(const std::string &subdir);

/// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
   public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir &) = delete;
    TempDir &operator=(const TempDir &) = delete;

    const std::filesystem::path &path() const {
        return path_;
    }

   private:
    std::filesystem::path path_;
};

struct CommandResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

/// Runs the CLI with the given arguments (no shell), optionally feeding
/// `input` on standard input.
CommandResult run_cli(const std::vector<std::string> &args, const std::string &input = "",
                      const std::vector<std::string> &env = {});

/// Runs a program found on PATH.
CommandResult run_program(const std::vector<std::string> &argv, const std::string &input = "");

/// Whether `python3 -c "import <module>"` succeeds.
bool python_module_available(const std::string &module);

}  // namespace testing_support
