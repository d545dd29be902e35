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

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qbridge/error.h"
#include "qbridge/scaffold.h"

namespace qbridge {

namespace fs = std::filesystem;

namespace {

bool is_identifier_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_identifier_char(char c) {
    return is_identifier_start(c) || (c >= '0' && c <= '9');
}

std::string read_file(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw Error(ErrorKind::Io, "cannot read " + path.string());
    }
    return buf.str();
}

void write_file(const fs::path &path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) {
        throw Error(ErrorKind::Io, "cannot write " + path.string());
    }
}

std::string today_iso() {
    const auto now = std::chrono::floor<std::chrono::days>(std::chrono::system_clock::now());
    const std::chrono::year_month_day ymd{now};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

bool ignored_name(const std::string &name) {
    const auto &list = template_ignore_list();
    return std::find(list.begin(), list.end(), name) != list.end();
}

/// Files under `root`, keyed by generic relative path. Symlinks are not
/// followed and entries on the ignore list are skipped when `apply_ignore`.
std::map<std::string, std::string> read_tree(const fs::path &root, bool apply_ignore) {
    std::map<std::string, std::string> files;
    fs::recursive_directory_iterator it(root, fs::directory_options::none), end;
    for (; it != end; ++it) {
        const fs::directory_entry &entry = *it;
        if (entry.is_symlink()) {
            if (entry.is_directory()) {
                it.disable_recursion_pending();
            }
            continue;
        }
        const std::string name = entry.path().filename().string();
        if (apply_ignore && ignored_name(name)) {
            if (entry.is_directory()) {
                it.disable_recursion_pending();
            }
            continue;
        }
        if (!entry.is_regular_file()) {
            continue;
        }
        files[fs::relative(entry.path(), root).generic_string()] = read_file(entry.path());
    }
    return files;
}

ProjectTemplate load_user_template(const fs::path &dir) {
    const std::string dir_name = dir.filename().string();
    const fs::path manifest_path = dir / kTemplateManifest;
    if (!fs::is_regular_file(manifest_path)) {
        throw Error(ErrorKind::InvalidTemplate, "missing " + std::string(kTemplateManifest));
    }
    nlohmann::json manifest;
    try {
        manifest = nlohmann::json::parse(read_file(manifest_path));
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::InvalidTemplate, std::string(kTemplateManifest) + " is not valid JSON");
    }
    if (!manifest.is_object()) {
        throw Error(ErrorKind::InvalidTemplate, std::string(kTemplateManifest) + " must be an object");
    }
    ProjectTemplate tpl;
    for (const auto &[key, value] : manifest.items()) {
        if (key == "name") {
            if (!value.is_string()) {
                throw Error(ErrorKind::InvalidTemplate, "\"name\" must be a string");
            }
            tpl.name = value.get<std::string>();
        } else if (key == "description") {
            if (!value.is_string()) {
                throw Error(ErrorKind::InvalidTemplate, "\"description\" must be a string");
            }
            tpl.description = value.get<std::string>();
        } else if (key == "variables") {
            if (!value.is_object()) {
                throw Error(ErrorKind::InvalidTemplate, "\"variables\" must be an object");
            }
            for (const auto &[var, def] : value.items()) {
                if (!def.is_string()) {
                    throw Error(ErrorKind::InvalidTemplate, "default for \"" + var + "\" must be a string");
                }
                tpl.variables[var] = def.get<std::string>();
            }
        } else {
            throw Error(ErrorKind::InvalidTemplate, "unknown manifest key \"" + key + "\"");
        }
    }
    if (tpl.name != dir_name) {
        throw Error(ErrorKind::InvalidTemplate, "manifest name \"" + tpl.name + "\" does not match its directory");
    }
    if (!is_valid_template_name(tpl.name)) {
        throw Error(ErrorKind::InvalidTemplate, "invalid template name \"" + tpl.name + "\"");
    }
    const fs::path files_dir = dir / "files";
    if (!fs::is_directory(files_dir) || fs::is_symlink(files_dir)) {
        throw Error(ErrorKind::InvalidTemplate, "missing files/ directory");
    }
    tpl.files = read_tree(files_dir, false);
    for (const auto &[path, content] : tpl.files) {
        if (!is_safe_relative_path(path)) {
            throw Error(ErrorKind::InvalidTemplate, "unsafe file path \"" + path + "\"");
        }
    }
    tpl.location = dir;
    return tpl;
}

/// True when `path`, resolved lexically, stays inside `root`.
bool stays_within(const fs::path &root, const fs::path &path) {
    const fs::path rel = path.lexically_normal().lexically_relative(root);
    return !rel.empty() && rel != "." && *rel.begin() != "..";
}

/// Removes what a failed write created, deepest first.
class CreatedTracker {
   public:
    void add(fs::path path) {
        created_.push_back(std::move(path));
    }
    void commit() {
        created_.clear();
    }
    ~CreatedTracker() {
        for (auto it = created_.rbegin(); it != created_.rend(); ++it) {
            std::error_code ec;
            fs::remove_all(*it, ec);
        }
    }

   private:
    std::vector<fs::path> created_;
};

void create_dirs_tracked(const fs::path &dir, CreatedTracker &tracker) {
    if (fs::exists(dir)) {
        if (!fs::is_directory(dir) || fs::is_symlink(dir)) {
            throw Error(ErrorKind::Io, dir.string() + " exists and is not a directory");
        }
        return;
    }
    create_dirs_tracked(dir.parent_path(), tracker);
    fs::create_directory(dir);
    tracker.add(dir);
}

}  // namespace

bool is_valid_template_name(std::string_view name) {
    if (name.empty() || name.size() > 64) {
        return false;
    }
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-'; });
}

bool is_safe_relative_path(std::string_view path) {
    if (path.empty() || path.front() == '/' || path.front() == '\\' || path.find('\0') != std::string_view::npos ||
        path.find('\\') != std::string_view::npos || path.find(':') != std::string_view::npos) {
        return false;
    }
    fs::path p{std::string(path)};
    if (p.is_absolute() || p.has_root_name() || p.has_root_directory()) {
        return false;
    }
    bool any = false;
    for (const auto &part : p) {
        const std::string s = part.string();
        if (s == "..") {
            return false;
        }
        if (!s.empty() && s != ".") {
            any = true;
        }
    }
    return any;
}

const std::vector<std::string> &template_ignore_list() {
    static const std::vector<std::string> list = {
        ".git", ".hg",  ".svn",         "__pycache__", ".pytest_cache",       ".mypy_cache", ".venv", "venv",
        "build", "dist", "node_modules", ".DS_Store",   ".ipynb_checkpoints", ".idea",       ".vscode",
    };
    return list;
}

std::string substitute_placeholders(std::string_view text, const std::map<std::string, std::string> &vars) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '#' && i + 2 < text.size() && text[i + 1] == '{' && is_identifier_start(text[i + 2])) {
            std::size_t j = i + 3;
            while (j < text.size() && is_identifier_char(text[j])) {
                ++j;
            }
            if (j < text.size() && text[j] == '}') {
                std::string name(text.substr(i + 2, j - i - 2));
                auto it = vars.find(name);
                if (it == vars.end()) {
                    throw Error(ErrorKind::MissingVariable, "no value for placeholder #{" + name + "}");
                }
                out += it->second;
                i = j + 1;
                continue;
            }
        }
        out += text[i++];
    }
    return out;
}

std::optional<fs::path> default_user_template_dir() {
    if (const char *env = std::getenv("QBRIDGE_TEMPLATES_DIR"); env != nullptr && *env != '\0') {
        return fs::path(env);
    }
    if (const char *home = std::getenv("HOME"); home != nullptr && *home != '\0') {
        return fs::path(home) / ".qbridge" / "templates";
    }
    return std::nullopt;
}

TemplateListing list_templates(const std::optional<fs::path> &user_dir) {
    TemplateListing listing;
    listing.templates = builtin_templates();
    if (!user_dir) {
        return listing;
    }
    std::error_code ec;
    if (!fs::is_directory(*user_dir, ec)) {
        return listing;
    }
    std::vector<fs::path> dirs;
    for (const auto &entry : fs::directory_iterator(*user_dir, ec)) {
        if (entry.is_directory() && !entry.is_symlink()) {
            dirs.push_back(entry.path());
        }
    }
    std::sort(dirs.begin(), dirs.end());
    for (const auto &dir : dirs) {
        const std::string name = dir.filename().string();
        auto clash = std::find_if(listing.templates.begin(), listing.templates.end(),
                                  [&](const ProjectTemplate &t) { return t.name == name; });
        if (clash != listing.templates.end()) {
            listing.warnings.push_back("skipping user template \"" + name + "\": the name is taken by a built-in");
            continue;
        }
        try {
            listing.templates.push_back(load_user_template(dir));
        } catch (const Error &e) {
            listing.warnings.push_back("skipping user template \"" + name + "\": " + e.what());
        } catch (const fs::filesystem_error &e) {
            listing.warnings.push_back("skipping user template \"" + name + "\": " + e.what());
        }
    }
    return listing;
}

std::vector<fs::path> new_project(const std::string &template_name, const fs::path &dest,
                                  const std::map<std::string, std::string> &vars,
                                  const std::optional<fs::path> &user_dir) {
    TemplateListing listing = list_templates(user_dir);
    auto found = std::find_if(listing.templates.begin(), listing.templates.end(),
                              [&](const ProjectTemplate &t) { return t.name == template_name; });
    if (found == listing.templates.end()) {
        throw Error(ErrorKind::TemplateNotFound, "no template named \"" + template_name + "\"");
    }
    const ProjectTemplate &tpl = *found;

    std::error_code ec;
    if (fs::exists(fs::symlink_status(dest, ec))) {
        if (!fs::is_directory(fs::symlink_status(dest)) || !fs::is_empty(dest)) {
            throw Error(ErrorKind::DestinationNotEmpty, dest.string() + " exists and is not an empty directory");
        }
    }

    const fs::path root = fs::absolute(dest).lexically_normal();
    std::map<std::string, std::string> values = tpl.variables;
    std::string project_name = root.filename().string();
    if (project_name.empty()) {
        project_name = root.parent_path().filename().string();
    }
    values["project_name"] = project_name;
    values["date_iso"] = today_iso();
    for (const auto &[k, v] : vars) {
        values[k] = v;
    }

    // Render everything before touching the filesystem.
    std::map<std::string, std::string> rendered;
    for (const auto &[path, content] : tpl.files) {
        std::string rel = substitute_placeholders(path, values);
        if (!is_safe_relative_path(rel) || !stays_within(root, root / rel)) {
            throw Error(ErrorKind::UnsafePath, "template path \"" + rel + "\" escapes the destination");
        }
        std::string key = fs::path(rel).lexically_normal().generic_string();
        if (rendered.contains(key)) {
            throw Error(ErrorKind::InvalidTemplate, "two template files render to \"" + key + "\"");
        }
        rendered[key] = substitute_placeholders(content, values);
    }

    CreatedTracker tracker;
    std::vector<fs::path> created;
    try {
        create_dirs_tracked(root, tracker);
        for (const auto &[rel, content] : rendered) {
            const fs::path target = root / rel;
            create_dirs_tracked(target.parent_path(), tracker);
            if (fs::exists(fs::symlink_status(target))) {
                throw Error(ErrorKind::Io, target.string() + " already exists");
            }
            tracker.add(target);
            write_file(target, content);
            created.push_back(target);
        }
    } catch (const fs::filesystem_error &e) {
        throw Error(ErrorKind::Io, e.what());
    }
    tracker.commit();
    std::sort(created.begin(), created.end());
    return created;
}

ProjectTemplate save_as_template(const fs::path &src_dir, const std::string &name, const fs::path &user_dir,
                                 const std::string &description) {
    if (!is_valid_template_name(name)) {
        throw Error(ErrorKind::InvalidTemplate,
                    "template names use lowercase letters, digits and '-' only: \"" + name + "\"");
    }
    for (const auto &builtin : builtin_templates()) {
        if (builtin.name == name) {
            throw Error(ErrorKind::NameCollision, "\"" + name + "\" is a built-in template");
        }
    }
    const fs::path target = user_dir / name;
    std::error_code ec;
    if (fs::exists(fs::symlink_status(target, ec))) {
        throw Error(ErrorKind::NameCollision, "a template named \"" + name + "\" already exists");
    }
    if (!fs::is_directory(src_dir)) {
        throw Error(ErrorKind::Io, src_dir.string() + " is not a directory");
    }

    ProjectTemplate tpl;
    tpl.name = name;
    tpl.description = description;
    try {
        tpl.files = read_tree(src_dir, true);
    } catch (const fs::filesystem_error &e) {
        throw Error(ErrorKind::Io, e.what());
    }
    if (tpl.files.empty()) {
        throw Error(ErrorKind::EmptySource, src_dir.string() + " has no files to save");
    }

    CreatedTracker tracker;
    try {
        create_dirs_tracked(user_dir, tracker);
        fs::create_directory(target);
        tracker.add(target);
        for (const auto &[rel, content] : tpl.files) {
            const fs::path file = target / "files" / rel;
            fs::create_directories(file.parent_path());
            write_file(file, content);
        }
        nlohmann::ordered_json manifest;
        manifest["name"] = name;
        manifest["description"] = description;
        manifest["variables"] = nlohmann::ordered_json::object();
        write_file(target / kTemplateManifest, manifest.dump(2) + "\n");
    } catch (const fs::filesystem_error &e) {
        throw Error(ErrorKind::Io, e.what());
    }
    tracker.commit();
    tpl.location = target;
    return tpl;
}

}  // namespace qbridge
