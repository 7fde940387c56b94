// Copyright 2026 The ccgplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the ccgplan binary end to end.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "ccgplan/ccgplan.hpp"

#ifndef CCGPLAN_CLI
#error "CCGPLAN_CLI must name the built binary"
#endif
#ifndef CCGPLAN_DATA
#error "CCGPLAN_DATA must name the sample data directory"
#endif

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(CCGPLAN_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return {-1, {}};
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p))
        out.append(buf.data(), n);
    int rc = pclose(p);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::string data(const char* name) { return std::string(CCGPLAN_DATA) + "/" + name; }

}  // namespace

TEST(Cli, StrictParseExitsZero) {
    auto r = run("parse --lexicon " + data("sample.lex") + " --words 'The dog bit John'");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("# sentence 1, parse 1/1"), std::string::npos);
    EXPECT_NE(r.out.find("John"), std::string::npos);
}

TEST(Cli, BestEffortExitsTwo) {
    auto r = run("parse --lexicon " + data("sample.lex") + " --words 'The dog bit'");
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find("S/NP"), std::string::npos);
    EXPECT_EQ(run("parse --goal strict --lexicon " + data("sample.lex") + " --words 'The dog bit'").status, 1);
}

TEST(Cli, InputErrorsExitOne) {
    EXPECT_EQ(run("parse --lexicon " + data("sample.lex") + " --words 'The cat bit John'").status, 1);
    EXPECT_EQ(run("parse --lexicon /nonexistent/lexicon --words 'x'").status, 1);
    EXPECT_EQ(run("parse --format svg --lexicon " + data("sample.lex") + " --words John").status, 1);
    EXPECT_EQ(run("").status, 1);
}

TEST(Cli, JsonOutputDecodes) {
    auto r = run("parse --format json --lexicon " + data("sample.lex") + " --words 'The dog bit John'");
    ASSERT_EQ(r.status, 0);
    auto t = ccgplan::tree_from_json(r.out);
    EXPECT_EQ(t.category().to_string(), "S");
    EXPECT_EQ(t.leaves().size(), 4u);
}

TEST(Cli, WritesOneFilePerParse) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "ccgplan_cli_test_out";
    fs::remove_all(dir);
    auto r = run("parse --normalize off --rules " + data("spurious.rules") + " --format dot --out " + dir.string() +
                 " --lexicon " + data("sample.lex") + " --words 'The dog bit John'");
    EXPECT_EQ(r.status, 0);
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(dir)) {
        EXPECT_EQ(e.path().extension(), ".dot");
        ++files;
    }
    EXPECT_GT(files, 1u);
    EXPECT_TRUE(fs::exists(dir / "sentence1_parse1.dot"));
    fs::remove_all(dir);
}

TEST(Cli, SupertagLadderWidens) {
    auto r = run("parse --supertags " + data("ladder.stags"));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(run("parse --cutoffs 0.075 --supertags " + data("ladder.stags")).status, 2);
}

TEST(Cli, OracleEngineAgrees) {
    auto a = run("parse --lexicon " + data("sample.lex") + " --words 'The dog bit John'");
    auto b = run("parse --engine oracle --lexicon " + data("sample.lex") + " --words 'The dog bit John'");
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Check) {
    auto ok = run("check --lexicon " + data("sample.lex") + " --rules " + data("spurious.rules"));
    EXPECT_EQ(ok.status, 0);
    EXPECT_EQ(ok.out, "ok\n");
    auto bad = run("check --rules " + data("broken.rules"));
    EXPECT_EQ(bad.status, 1);
    EXPECT_NE(bad.out.find("broken.rules:1:"), std::string::npos);
    EXPECT_NE(bad.out.find("broken.rules:2:"), std::string::npos);
}

TEST(Cli, Compare) {
    std::string base = "compare --lexicon " + data("sample.lex") + " --words 'The dog bit John'";
    auto same = run(base);
    EXPECT_EQ(same.status, 0);
    EXPECT_NE(same.out.find("identical"), std::string::npos);
    auto diff = run(base + " --oracle-normalize off");
    EXPECT_EQ(diff.status, 1);
    EXPECT_NE(diff.out.find("only in oracle"), std::string::npos);
}
