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

#ifndef CCGPLAN_DERIVATION_HPP
#define CCGPLAN_DERIVATION_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "asr.hpp"
#include "category.hpp"
#include "combinators.hpp"

namespace ccgplan {

/// Immutable derivation tree. A leaf has no kind; internal nodes carry the
/// combinator that built them and 1-3 children.
class DerivationTree {
public:
    static DerivationTree leaf(Category cat, PositionId pos, std::optional<std::string> word = {}) {
        auto n = std::make_shared<Node>(Node{std::nullopt, std::move(cat), pos, std::move(word), {}, {}, 0, 1});
        n->key = make_key(*n);
        return DerivationTree(std::move(n));
    }

    static DerivationTree node(CombinatorKind kind, Category cat, std::vector<DerivationTree> children) {
        if (static_cast<int>(children.size()) != arity(kind))
            throw std::invalid_argument("derivation node arity does not match combinator");
        int h = 0;
        int count = 1;
        for (const auto& c : children) {
            h = std::max(h, c.height());
            count += c.node_count();
        }
        PositionId pos = children.front().pos();
        auto n = std::make_shared<Node>(
            Node{kind, std::move(cat), pos, std::nullopt, std::move(children), {}, h + 1, count});
        n->key = make_key(*n);
        return DerivationTree(std::move(n));
    }

    bool is_leaf() const { return !node_->kind.has_value(); }
    std::optional<CombinatorKind> kind() const { return node_->kind; }
    const Category& category() const { return node_->cat; }
    /// Leaf: its annotation id. Internal: the leftmost leaf's id.
    PositionId pos() const { return node_->pos; }
    const std::optional<std::string>& word() const { return node_->word; }
    const std::vector<DerivationTree>& children() const { return node_->children; }

    /// Leaves have height 0; a node is one above its tallest child. This is
    /// also the length of the shortest canonical plan building the tree.
    int height() const { return node_->height; }
    int node_count() const { return node_->count; }

    /// Canonical serialization; equal keys iff structurally equal trees.
    const std::string& key() const { return node_->key; }

    friend bool operator==(const DerivationTree& a, const DerivationTree& b) {
        return a.node_ == b.node_ || a.key() == b.key();
    }
    friend bool operator<(const DerivationTree& a, const DerivationTree& b) { return a.key() < b.key(); }

    void collect_leaves(std::vector<DerivationTree>& out) const {
        if (is_leaf()) {
            out.push_back(*this);
            return;
        }
        for (const auto& c : children())
            c.collect_leaves(out);
    }

    std::vector<DerivationTree> leaves() const {
        std::vector<DerivationTree> out;
        collect_leaves(out);
        return out;
    }

private:
    struct Node {
        std::optional<CombinatorKind> kind;
        Category cat;
        PositionId pos;
        std::optional<std::string> word;
        std::vector<DerivationTree> children;
        std::string key;
        int height;
        int count;
    };

    static std::string make_key(const Node& n) {
        std::string k = "(";
        if (!n.kind) {
            k += "Leaf " + std::to_string(n.pos) + ' ' + n.cat.to_string();
            if (n.word)
                k += " \"" + *n.word + '"';
        } else {
            k += std::string(kind_name(*n.kind)) + ' ' + n.cat.to_string();
            for (const auto& c : n.children)
                k += ' ' + c.key();
        }
        k += ')';
        return k;
    }

    explicit DerivationTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

/// Ordered sequence of trees, one per residual category of a best-effort parse.
using Forest = std::vector<DerivationTree>;

inline std::string forest_key(const Forest& f) {
    std::string k = "[";
    for (const auto& t : f)
        k += t.key();
    k += ']';
    return k;
}

/// Checks rule soundness at every node. Returns an empty string when sound.
inline std::string check_tree(const DerivationTree& t) {
    if (t.is_leaf())
        return {};
    std::vector<Category> inputs;
    for (const auto& c : t.children()) {
        if (auto e = check_tree(c); !e.empty())
            return e;
        inputs.push_back(c.category());
    }
    if (!satisfies_schema(*t.kind(), inputs, t.category()))
        return "node " + t.key() + " violates the " + std::string(kind_name(*t.kind())) + " schema";
    return {};
}

/// Deduplicating accumulator that keeps trees sorted by canonical key.
class TreeSet {
public:
    bool insert(const DerivationTree& t) { return trees_.emplace(t.key(), t).second; }
    std::size_t size() const { return trees_.size(); }
    bool empty() const { return trees_.empty(); }
    bool contains(const DerivationTree& t) const { return trees_.count(t.key()) > 0; }

    std::vector<DerivationTree> to_vector() const {
        std::vector<DerivationTree> out;
        out.reserve(trees_.size());
        for (const auto& [_, t] : trees_)
            out.push_back(t);
        return out;
    }

private:
    std::map<std::string, DerivationTree> trees_;
};

class ForestSet {
public:
    bool insert(const Forest& f) { return forests_.emplace(forest_key(f), f).second; }
    std::size_t size() const { return forests_.size(); }
    bool empty() const { return forests_.empty(); }
    void clear() { forests_.clear(); }

    std::vector<Forest> to_vector() const {
        std::vector<Forest> out;
        out.reserve(forests_.size());
        for (const auto& [_, f] : forests_)
            out.push_back(f);
        return out;
    }

private:
    std::map<std::string, Forest> forests_;
};

}  // namespace ccgplan

#endif
