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

#ifndef CCGPLAN_RENDER_HPP
#define CCGPLAN_RENDER_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "derivation.hpp"

namespace ccgplan {

enum class RenderFormat { AsciiDeriv, TreeJson, Dot };

inline std::optional<RenderFormat> format_from_name(std::string_view name) {
    if (name == "ascii")
        return RenderFormat::AsciiDeriv;
    if (name == "json")
        return RenderFormat::TreeJson;
    if (name == "dot")
        return RenderFormat::Dot;
    return std::nullopt;
}

inline std::string_view format_extension(RenderFormat f) {
    switch (f) {
    case RenderFormat::TreeJson:
        return ".json";
    case RenderFormat::Dot:
        return ".dot";
    default:
        return ".txt";
    }
}

// ---------------------------------------------------------------------------
// ASCII derivations

namespace detail {

struct AsciiLayout {
    std::vector<std::size_t> width;  // per leaf column
    std::size_t gap = 2;

    std::size_t start(std::size_t leaf) const {
        std::size_t s = 0;
        for (std::size_t i = 0; i < leaf; ++i)
            s += width[i] + gap;
        return s;
    }
    std::size_t span_width(std::size_t first, std::size_t last) const {
        return start(last) + width[last] - start(first);
    }
};

struct PlacedNode {
    DerivationTree tree;
    std::size_t first_leaf;
    std::size_t last_leaf;
};

inline std::size_t place(const DerivationTree& t, std::size_t& next_leaf, std::vector<PlacedNode>& out) {
    if (t.is_leaf()) {
        std::size_t i = next_leaf++;
        out.push_back({t, i, i});
        return i;
    }
    std::size_t first = next_leaf;
    for (const auto& c : t.children())
        place(c, next_leaf, out);
    out.push_back({t, first, next_leaf - 1});
    return first;
}

inline void put(std::string& row, std::size_t col, std::string_view text) {
    if (row.size() < col + text.size())
        row.resize(col + text.size(), ' ');
    row.replace(col, text.size(), text);
}

inline std::string rstrip(std::string s) {
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    return s;
}

inline std::string underline(std::size_t width, std::string_view label) {
    std::string line(width, '-');
    if (!label.empty() && label.size() <= width)
        line.replace(width - label.size(), label.size(), label);
    return line;
}

}  // namespace detail

/// Fixed-width derivation: a word row, then per level an underline row
/// (labelled with the combinator symbol at its right end) and a category
/// row. Each underline spans exactly the columns of its constituent's
/// leaves. A forest is drawn side by side.
inline std::string to_ascii(std::span<const DerivationTree> forest) {
    using namespace detail;
    std::vector<PlacedNode> nodes;
    std::size_t next_leaf = 0;
    int levels = 0;
    for (const auto& t : forest) {
        place(t, next_leaf, nodes);
        levels = std::max(levels, t.height());
    }
    const std::size_t n = next_leaf;
    if (n == 0)
        return {};

    AsciiLayout layout;
    layout.width.assign(n, 1);
    for (const auto& p : nodes) {
        if (p.tree.is_leaf()) {
            std::size_t w = p.tree.category().to_string().size();
            if (p.tree.word())
                w = std::max(w, p.tree.word()->size());
            layout.width[p.first_leaf] = std::max(layout.width[p.first_leaf], w);
        }
    }
    // post-order: children are settled before their parent widens the span
    for (const auto& p : nodes) {
        if (p.tree.is_leaf())
            continue;
        std::size_t need = std::max(p.tree.category().to_string().size(),
                                    kind_symbol(*p.tree.kind()).size() + 1);
        std::size_t have = layout.span_width(p.first_leaf, p.last_leaf);
        if (need > have)
            layout.width[p.last_leaf] += need - have;
    }

    std::vector<std::string> rows;
    std::string words, leaf_line, leaf_cats;
    for (const auto& p : nodes) {
        if (!p.tree.is_leaf())
            continue;
        std::size_t col = layout.start(p.first_leaf);
        if (p.tree.word())
            put(words, col, *p.tree.word());
        put(leaf_line, col, std::string(layout.width[p.first_leaf], '-'));
        put(leaf_cats, col, p.tree.category().to_string());
    }
    rows.push_back(words);
    rows.push_back(leaf_line);
    rows.push_back(leaf_cats);

    for (int level = 1; level <= levels; ++level) {
        std::string line, cats;
        for (const auto& p : nodes) {
            if (p.tree.is_leaf() || p.tree.height() != level)
                continue;
            std::size_t col = layout.start(p.first_leaf);
            std::size_t w = layout.span_width(p.first_leaf, p.last_leaf);
            put(line, col, underline(w, kind_symbol(*p.tree.kind())));
            put(cats, col, p.tree.category().to_string());
        }
        rows.push_back(line);
        rows.push_back(cats);
    }

    std::string out;
    for (auto& r : rows) {
        out += rstrip(r);
        out += '\n';
    }
    return out;
}

inline std::string to_ascii(const DerivationTree& t) { return to_ascii(std::span<const DerivationTree>(&t, 1)); }

// ---------------------------------------------------------------------------
// JSON tree documents

inline nlohmann::ordered_json to_json_value(const DerivationTree& t) {
    nlohmann::ordered_json j;
    j["kind"] = t.is_leaf() ? std::string("Leaf") : std::string(kind_name(*t.kind()));
    j["category"] = t.category().to_string();
    if (t.is_leaf()) {
        j["pos"] = t.pos();
        if (t.word())
            j["word"] = *t.word();
    }
    j["children"] = nlohmann::ordered_json::array();
    for (const auto& c : t.children())
        j["children"].push_back(to_json_value(c));
    return j;
}

inline std::string to_json(const DerivationTree& t, int indent = 2) { return to_json_value(t).dump(indent); }

class TreeDecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class Json>
DerivationTree tree_from_json_value(const Json& j) {
    if (!j.is_object())
        throw TreeDecodeError("tree node must be an object");
    if (!j.contains("kind") || !j.contains("category"))
        throw TreeDecodeError("tree node needs 'kind' and 'category'");
    const std::string kind = j.at("kind").template get<std::string>();
    Category cat = [&] {
        try {
            return parse_category(j.at("category").template get<std::string>());
        } catch (const CategorySyntaxError& e) {
            throw TreeDecodeError(std::string("bad category: ") + e.what());
        }
    }();
    if (kind == "Leaf") {
        if (!j.contains("pos"))
            throw TreeDecodeError("leaf needs 'pos'");
        std::optional<std::string> word;
        if (j.contains("word"))
            word = j.at("word").template get<std::string>();
        return DerivationTree::leaf(std::move(cat), j.at("pos").template get<PositionId>(), std::move(word));
    }
    auto k = kind_from_name(kind);
    if (!k)
        throw TreeDecodeError("unknown kind '" + kind + "'");
    std::vector<DerivationTree> kids;
    if (j.contains("children"))
        for (const auto& c : j.at("children"))
            kids.push_back(tree_from_json_value(c));
    if (static_cast<int>(kids.size()) != arity(*k))
        throw TreeDecodeError("node '" + kind + "' has " + std::to_string(kids.size()) + " children");
    return DerivationTree::node(*k, std::move(cat), std::move(kids));
}

inline DerivationTree tree_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw TreeDecodeError(e.what());
    }
    return tree_from_json_value(j);
}

// ---------------------------------------------------------------------------
// Graphviz

namespace detail {

inline std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

inline void emit_dot(const DerivationTree& t, int& next_id, std::ostringstream& nodes, std::ostringstream& edges) {
    int id = next_id++;
    std::string label = dot_escape(t.category().to_string());
    if (t.is_leaf()) {
        if (t.word())
            label += "\\n" + dot_escape(*t.word());
        nodes << "  n" << id << " [label=\"" << label << "\", shape=plaintext];\n";
        return;
    }
    label += "\\n" + dot_escape(kind_symbol(*t.kind()));
    nodes << "  n" << id << " [label=\"" << label << "\"];\n";
    for (const auto& c : t.children()) {
        int child = next_id;
        edges << "  n" << id << " -> n" << child << ";\n";
        emit_dot(c, next_id, nodes, edges);
    }
}

}  // namespace detail

/// One digraph per tree. Node ids follow pre-order (n0 is the root) and
/// `ordering=out` keeps children left to right.
inline std::string to_dot(const DerivationTree& t, std::string_view name = "derivation") {
    std::ostringstream nodes, edges;
    int next_id = 0;
    detail::emit_dot(t, next_id, nodes, edges);
    std::ostringstream out;
    out << "digraph " << name << " {\n"
        << "  ordering=out;\n"
        << "  node [shape=box, fontname=\"monospace\"];\n"
        << nodes.str() << edges.str() << "}\n";
    return out.str();
}

inline std::string render(const Forest& f, RenderFormat format) {
    switch (format) {
    case RenderFormat::TreeJson: {
        if (f.size() == 1)
            return to_json(f.front()) + "\n";
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& t : f)
            arr.push_back(to_json_value(t));
        return arr.dump(2) + "\n";
    }
    case RenderFormat::Dot: {
        std::string out;
        for (std::size_t i = 0; i < f.size(); ++i)
            out += to_dot(f[i], f.size() == 1 ? "derivation" : "derivation_" + std::to_string(i + 1));
        return out;
    }
    default:
        return to_ascii(f);
    }
}

}  // namespace ccgplan

#endif
