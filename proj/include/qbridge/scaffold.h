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
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qbridge {

/// A project template: relative path -> file content. Contents and paths may
/// contain `#{variable}` placeholders.
struct ProjectTemplate {
    std::string name;
    std::string description;
    std::map<std::string, std::string> variables;  // defaults
    std::map<std::string, std::string> files;
    bool builtin = false;
    std::optional<std::filesystem::path> location;  // user templates only
};

struct TemplateListing {
    std::vector<ProjectTemplate> templates;
    std::vector<std::string> warnings;
};

/// Name of the manifest at the root of a user template directory, next to
/// the `files/` tree.
inline constexpr const char *kTemplateManifest = "template.json";

bool is_valid_template_name(std::string_view name);

/// Rejects empty, absolute, rooted and `..`-containing paths.
bool is_safe_relative_path(std::string_view path);

const std::vector<ProjectTemplate> &builtin_templates();

/// Built-ins followed by every valid template under user_dir. Invalid user
/// templates are skipped and reported in warnings.
TemplateListing list_templates(const std::optional<std::filesystem::path> &user_dir);

/// Instantiates a template into `dest` (missing or empty directory).
/// Implicit defaults: project_name = dest's final component, date_iso =
/// today. Returns the created file paths, sorted. On failure every file and
/// directory created so far is removed.
std::vector<std::filesystem::path> new_project(
    const std::string &template_name, const std::filesystem::path &dest,
    const std::map<std::string, std::string> &vars,
    const std::optional<std::filesystem::path> &user_dir = std::nullopt);

/// Directory and file names skipped when saving a project as a template.
const std::vector<std::string> &template_ignore_list();

/// Copies src_dir (minus the ignore list) into user_dir/name/files and
/// writes user_dir/name/template.json.
ProjectTemplate save_as_template(const std::filesystem::path &src_dir, const std::string &name,
                                 const std::filesystem::path &user_dir,
                                 const std::string &description = "");

/// Replaces `#{var}` occurrences; throws MissingVariable for unknown names.
std::string substitute_placeholders(std::string_view text,
                                    const std::map<std::string, std::string> &vars);

/// QBRIDGE_TEMPLATES_DIR, else $HOME/.qbridge/templates, else none.
std::optional<std::filesystem::path> default_user_template_dir();

}  // namespace qbridge
