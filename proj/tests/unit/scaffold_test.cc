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

#include <gtest/gtest.h>

#include "json.hpp"
#include "qbridge/error.h"
#include "qbridge/scaffold.h"
#include "test_util.h"

namespace {

namespace fs = std::filesystem;
using namespace qbridge;
using testing_support::read_file;
using testing_support::TempDir;
using testing_support::write_file;

const std::map<std::string, std::string> kVars{
    {"project_name", "bell-demo"}, {"author", "Ada Lovelace"}, {"date_iso", "2026-01-01"}};

ErrorKind kind_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error";
    return ErrorKind::Io;
}

void write_user_template(const fs::path &root, const std::string &name, const nlohmann::json &manifest,
                         const std::map<std::string, std::string> &files) {
    write_file(root / name / kTemplateManifest, manifest.dump());
    fs::create_directories(root / name / "files");
    for (const auto &[path, content] : files) {
        write_file(root / name / "files" / path, content);
    }
}

TEST(Scaffold, HelloWorldMatchesGoldenFiles) {
    TempDir tmp;
    auto files = new_project("qiskit-hello-world", tmp.path() / "out", kVars);
    ASSERT_EQ(files.size(), 4u);
    EXPECT_TRUE(std::is_sorted(files.begin(), files.end()));
    fs::path golden = testing_support::source_dir() / "tests/golden/qiskit-hello-world";
    for (const char *name : {"README.md", "main.py", "bell.qasm", "requirements.txt"}) {
        EXPECT_EQ(read_file(tmp.path() / "out" / name), read_file(golden / name)) << name;
    }
}

TEST(Scaffold, ImplicitVariables) {
    TempDir tmp;
    new_project("qiskit-hello-world", tmp.path() / "my-proj", {});
    std::string readme = read_file(tmp.path() / "my-proj/README.md");
    EXPECT_TRUE(readme.starts_with("# my-proj\n"));
    EXPECT_NE(readme.find("created by anonymous on 20"), std::string::npos);
}

TEST(Scaffold, Placeholders) {
    EXPECT_EQ(substitute_placeholders("a #{x} b #{x}", {{"x", "1"}}), "a 1 b 1");
    EXPECT_EQ(substitute_placeholders("#{ not an ident} #{", {}), "#{ not an ident} #{");
    EXPECT_EQ(kind_of([] { substitute_placeholders("#{who}", {}); }), ErrorKind::MissingVariable);
}

TEST(Scaffold, NameAndPathRules) {
    EXPECT_TRUE(is_valid_template_name("my-template-2"));
    EXPECT_FALSE(is_valid_template_name(""));
    EXPECT_FALSE(is_valid_template_name("Upper"));
    EXPECT_FALSE(is_valid_template_name("a_b"));
    EXPECT_FALSE(is_valid_template_name("../x"));
    EXPECT_TRUE(is_safe_relative_path("src/main.py"));
    for (const char *p : {"", "/etc/passwd", "../up", "a/../../b", "a\\b", "C:/x"}) {
        EXPECT_FALSE(is_safe_relative_path(p)) << p;
    }
}

TEST(Scaffold, RefusesOccupiedDestinations) {
    TempDir tmp;
    write_file(tmp.path() / "busy/keep.txt", "x");
    EXPECT_EQ(kind_of([&] { new_project("qiskit-hello-world", tmp.path() / "busy", {}); }),
              ErrorKind::DestinationNotEmpty);
    EXPECT_EQ(read_file(tmp.path() / "busy/keep.txt"), "x");
    fs::create_directories(tmp.path() / "empty");
    EXPECT_NO_THROW(new_project("qiskit-hello-world", tmp.path() / "empty", {}));
    EXPECT_EQ(kind_of([&] { new_project("no-such-template", tmp.path() / "n", {}); }), ErrorKind::TemplateNotFound);
}

TEST(Scaffold, HostileTemplatesLeaveNothingBehind) {
    TempDir tmp;
    fs::path user = tmp.path() / "tpl";
    write_user_template(user, "escape", {{"name", "escape"}, {"description", "bad"}, {"variables", {{"where", ".."}}}},
                        {{"ok.txt", "fine"}, {"#{where}/evil.txt", "boom"}});
    fs::path dest = tmp.path() / "dest";
    EXPECT_EQ(kind_of([&] { new_project("escape", dest, {}, user); }), ErrorKind::UnsafePath);
    EXPECT_FALSE(fs::exists(dest));
    EXPECT_FALSE(fs::exists(tmp.path() / "evil.txt"));

    write_user_template(user, "missing", {{"name", "missing"}, {"description", ""}, {"variables", nlohmann::json::object()}},
                        {{"a.txt", "ok"}, {"b.txt", "#{nobody}"}});
    EXPECT_EQ(kind_of([&] { new_project("missing", dest, {}, user); }), ErrorKind::MissingVariable);
    EXPECT_FALSE(fs::exists(dest));
}

TEST(Scaffold, ListingReportsBrokenUserTemplates) {
    TempDir tmp;
    fs::path user = tmp.path() / "tpl";
    write_user_template(user, "good", {{"name", "good"}, {"description", "fine"}, {"variables", {{"k", "v"}}}},
                        {{"x.txt", "#{k}"}});
    write_user_template(user, "mismatch", {{"name", "other"}, {"description", ""}, {"variables", nlohmann::json::object()}},
                        {{"x.txt", ""}});
    write_user_template(user, "qiskit-hello-world", {{"name", "qiskit-hello-world"}, {"description", ""}, {"variables", nlohmann::json::object()}},
                        {{"x.txt", ""}});
    write_file(user / "garbage" / kTemplateManifest, "{not json");
    TemplateListing listing = list_templates(user);
    ASSERT_EQ(listing.templates.size(), 2u);
    EXPECT_TRUE(listing.templates[0].builtin);
    EXPECT_EQ(listing.templates[1].name, "good");
    EXPECT_EQ(listing.templates[1].variables.at("k"), "v");
    EXPECT_EQ(listing.warnings.size(), 3u);
    EXPECT_EQ(list_templates(std::nullopt).templates.size(), 1u);
    EXPECT_TRUE(list_templates(tmp.path() / "absent").warnings.empty());
}

TEST(Scaffold, SaveThenInstantiateIsByteExact) {
    TempDir tmp;
    fs::path project = tmp.path() / "proj";
    write_file(project / "main.py", "print('hi')\r\n");
    write_file(project / "data/bytes.bin", std::string("\x00\xff\x01", 3));
    write_file(project / "__pycache__/junk.pyc", "cache");
    write_file(project / ".git/HEAD", "ref");
    fs::path user = tmp.path() / "tpl";
    ProjectTemplate saved = save_as_template(project, "mine", user, "my project");
    EXPECT_EQ(saved.files.size(), 2u);
    auto manifest = nlohmann::json::parse(read_file(user / "mine" / kTemplateManifest));
    EXPECT_EQ(manifest["name"], "mine");
    EXPECT_EQ(manifest["description"], "my project");

    new_project("mine", tmp.path() / "copy", {}, user);
    EXPECT_EQ(read_file(tmp.path() / "copy/main.py"), "print('hi')\r\n");
    EXPECT_EQ(read_file(tmp.path() / "copy/data/bytes.bin"), std::string("\x00\xff\x01", 3));
    EXPECT_FALSE(fs::exists(tmp.path() / "copy/__pycache__"));
    EXPECT_FALSE(fs::exists(tmp.path() / "copy/.git"));
}

TEST(Scaffold, SaveRejectsBadRequests) {
    TempDir tmp;
    fs::path user = tmp.path() / "tpl";
    write_file(tmp.path() / "proj/a.txt", "a");
    fs::create_directories(tmp.path() / "empty/.git");
    EXPECT_EQ(kind_of([&] { save_as_template(tmp.path() / "proj", "Bad Name", user); }), ErrorKind::InvalidTemplate);
    EXPECT_EQ(kind_of([&] { save_as_template(tmp.path() / "proj", "qiskit-hello-world", user); }),
              ErrorKind::NameCollision);
    EXPECT_EQ(kind_of([&] { save_as_template(tmp.path() / "nope", "x", user); }), ErrorKind::Io);
    EXPECT_EQ(kind_of([&] { save_as_template(tmp.path() / "empty", "x", user); }), ErrorKind::EmptySource);
    EXPECT_FALSE(fs::exists(user / "x"));
    save_as_template(tmp.path() / "proj", "once", user);
    EXPECT_EQ(kind_of([&] { save_as_template(tmp.path() / "proj", "once", user); }), ErrorKind::NameCollision);
}

TEST(Scaffold, IgnoreListCoversToolingDirectories) {
    const auto &ignored = template_ignore_list();
    for (const char *name : {".git", "__pycache__", "node_modules", ".venv"}) {
        EXPECT_NE(std::find(ignored.begin(), ignored.end(), name), ignored.end()) << name;
    }
}

}  // namespace
