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

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace ccgplan;
using ccgplan::testing::cat;

namespace {

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string l;
    while (std::getline(is, l))
        out.push_back(l);
    return out;
}

}  // namespace

TEST(Ascii, SampleDerivation) {
    auto rows = lines(to_ascii(ccgplan::testing::application_tree()));
    ASSERT_EQ(rows.size(), 7u);
    EXPECT_EQ(rows[0], "The   dog  bit        John");
    EXPECT_EQ(rows[2], "NP/N  N    (S\\NP)/NP  NP");
    EXPECT_EQ(rows[1], "----  ---  ---------  ----");
    EXPECT_EQ(rows[3], "-------->  -------------->");
    EXPECT_EQ(rows[4], "NP         S\\NP");
    EXPECT_EQ(rows[5], std::string(25, '-') + "<");
    EXPECT_EQ(rows[6], "S");
}

TEST(Ascii, UnderlinesSpanTheirLeaves) {
    auto rows = lines(to_ascii(ccgplan::testing::spurious_tree()));
    // the >T line covers only the first two words
    EXPECT_EQ(rows[5].find(">T"), rows[3].find('>') - 1);
    EXPECT_EQ(rows.back(), "S");
    for (const auto& r : rows)
        EXPECT_TRUE(r.empty() || r.back() != ' ');
}

TEST(Ascii, ForestSideBySide) {
    Forest f = {DerivationTree::leaf(cat("N"), 1, "a"), DerivationTree::leaf(cat("S\\NP"), 2, "b")};
    auto rows = lines(to_ascii(f));
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[2], "N  S\\NP");
}

TEST(Json, SampleTreeShape) {
    auto j = nlohmann::json::parse(to_json(ccgplan::testing::application_tree()));
    EXPECT_EQ(j["kind"], "BwdAppl");
    EXPECT_EQ(j["category"], "S");
    EXPECT_EQ(j["children"][0]["children"][1]["word"], "dog");
    EXPECT_EQ(j["children"][1]["children"][0]["pos"], 3);
}

TEST(Json, DecodeErrors) {
    EXPECT_THROW(tree_from_json("{"), TreeDecodeError);
    EXPECT_THROW(tree_from_json("[]"), TreeDecodeError);
    EXPECT_THROW(tree_from_json(R"({"kind":"Leaf","category":"NP"})"), TreeDecodeError);
    EXPECT_THROW(tree_from_json(R"({"kind":"Glue","category":"NP","children":[]})"), TreeDecodeError);
    EXPECT_THROW(tree_from_json(R"({"kind":"Leaf","category":"N//","pos":1})"), TreeDecodeError);
    EXPECT_THROW(tree_from_json(R"({"kind":"FwdAppl","category":"NP","children":[
        {"kind":"Leaf","category":"NP","pos":1}]})"),
                 TreeDecodeError);
}

TEST(Json, RoundTripProperty) {
    std::mt19937 rng(17);
    for (int i = 0; i < 1000; ++i) {
        PositionId next = 1;
        auto t = ccgplan::testing::random_tree(rng, 4, next);
        ASSERT_EQ(tree_from_json(to_json(t)), t) << to_json(t);
        ASSERT_EQ(tree_from_json(to_json(t, -1)), t);
    }
}

TEST(Dot, OneNodePerTreeNode) {
    auto t = ccgplan::testing::spurious_tree();
    std::string dot = to_dot(t);
    std::size_t nodes = 0, edges = 0;
    for (const auto& l : lines(dot)) {
        if (l.find("[label=") != std::string::npos)
            ++nodes;
        if (l.find("->") != std::string::npos)
            ++edges;
    }
    EXPECT_EQ(nodes, t.node_count());
    EXPECT_EQ(edges, t.node_count() - 1);
    EXPECT_NE(dot.find("ordering=out"), std::string::npos);
    EXPECT_NE(dot.find("n0 [label=\"S\\n>\"]"), std::string::npos);
    EXPECT_NE(dot.find("S/(S\\\\NP)"), std::string::npos);
}

TEST(Render, DispatchByFormat) {
    Forest f = {ccgplan::testing::application_tree()};
    EXPECT_EQ(render(f, RenderFormat::AsciiDeriv), to_ascii(f));
    EXPECT_EQ(render(f, RenderFormat::TreeJson), to_json(f[0]) + "\n");
    EXPECT_EQ(render(f, RenderFormat::Dot), to_dot(f[0]));
    EXPECT_EQ(format_from_name("dot"), RenderFormat::Dot);
    EXPECT_FALSE(format_from_name("svg").has_value());
}
