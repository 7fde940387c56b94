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

#ifndef CCGPLAN_CATEGORY_HPP
#define CCGPLAN_CATEGORY_HPP

#include <cctype>
#include <cstddef>
#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ccgplan {

enum class Slash { Fwd, Bwd };

/// A CCG category: either an atom (`S`, `NP`, ...) or a directional functor
/// `result/arg` / `result\arg`. Immutable; copies share structure.
class Category {
public:
    static Category atom(std::string name);
    static Category functor(Slash slash, Category result, Category arg);

    static Category fwd(Category result, Category arg) {
        return functor(Slash::Fwd, std::move(result), std::move(arg));
    }
    static Category bwd(Category result, Category arg) {
        return functor(Slash::Bwd, std::move(result), std::move(arg));
    }

    bool is_atom() const;
    bool is_complex() const { return !is_atom(); }
    bool is_fwd() const;
    bool is_bwd() const;
    bool is_atom(std::string_view name) const;

    const std::string& name() const;
    Slash slash() const;
    const Category& result() const;
    const Category& arg() const;

    std::size_t hash() const;
    int depth() const;

    friend bool operator==(const Category& a, const Category& b);

    std::string to_string() const {
        std::string out;
        print_to(out);
        return out;
    }

private:
    struct Node;

    explicit Category(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    void print_to(std::string& out) const;

    std::shared_ptr<const Node> node_;
};

struct Category::Node {
    bool complex = false;
    Slash slash = Slash::Fwd;
    std::string name;
    std::optional<Category> result, arg;
    std::size_t hash = 0;
    int depth = 1;
};

inline Category Category::atom(std::string name) {
    if (name.empty())
        throw std::invalid_argument("category atom name must be non-empty");
    auto n = std::make_shared<Node>();
    n->hash = std::hash<std::string>{}(name);
    n->name = std::move(name);
    return Category(std::move(n));
}

inline Category Category::functor(Slash slash, Category result, Category arg) {
    auto n = std::make_shared<Node>();
    n->complex = true;
    n->slash = slash;
    n->depth = 1 + std::max(result.depth(), arg.depth());
    n->hash = (result.hash() * 1000003u ^ arg.hash()) * 31u + (slash == Slash::Fwd ? 17u : 29u);
    n->result = std::move(result);
    n->arg = std::move(arg);
    return Category(std::move(n));
}

inline bool Category::is_atom() const { return !node_->complex; }
inline bool Category::is_fwd() const { return node_->complex && node_->slash == Slash::Fwd; }
inline bool Category::is_bwd() const { return node_->complex && node_->slash == Slash::Bwd; }
inline bool Category::is_atom(std::string_view name) const {
    return !node_->complex && node_->name == name;
}
inline const std::string& Category::name() const { return node_->name; }
inline Slash Category::slash() const { return node_->slash; }
inline const Category& Category::result() const { return *node_->result; }
inline const Category& Category::arg() const { return *node_->arg; }
inline std::size_t Category::hash() const { return node_->hash; }
inline int Category::depth() const { return node_->depth; }

inline bool operator==(const Category& a, const Category& b) {
    if (a.node_ == b.node_)
        return true;
    if (a.node_->hash != b.node_->hash || a.node_->complex != b.node_->complex)
        return false;
    if (!a.node_->complex)
        return a.node_->name == b.node_->name;
    return a.node_->slash == b.node_->slash && a.result() == b.result() && a.arg() == b.arg();
}

// Complex operands are always parenthesized, so `(S\NP)/NP` prints as written
// in the usual CCG notation and re-parses to the same tree.
inline void Category::print_to(std::string& out) const {
    if (is_atom()) {
        out += node_->name;
        return;
    }
    auto operand = [&out](const Category& c) {
        if (c.is_atom()) {
            c.print_to(out);
        } else {
            out += '(';
            c.print_to(out);
            out += ')';
        }
    };
    operand(result());
    out += node_->slash == Slash::Fwd ? '/' : '\\';
    operand(arg());
}

inline std::ostream& operator<<(std::ostream& os, const Category& c) { return os << c.to_string(); }

/// Thrown by parse_category; `offset` is the 0-based index of the offending character.
class CategorySyntaxError : public std::runtime_error {
public:
    CategorySyntaxError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

namespace detail {

class CategoryParser {
public:
    explicit CategoryParser(std::string_view text) : text_(text) {}

    Category parse() {
        skip_ws();
        if (at_end())
            throw CategorySyntaxError("empty category expression", pos_);
        Category c = expression();
        skip_ws();
        if (!at_end()) {
            if (text_[pos_] == ')')
                throw CategorySyntaxError("unbalanced ')'", pos_);
            throw CategorySyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return c;
    }

private:
    // expression := primary (('/' | '\') primary)*, left-associative
    Category expression() {
        Category left = primary();
        for (;;) {
            skip_ws();
            if (at_end() || (text_[pos_] != '/' && text_[pos_] != '\\'))
                return left;
            Slash s = text_[pos_] == '/' ? Slash::Fwd : Slash::Bwd;
            ++pos_;
            skip_ws();
            if (at_end())
                throw CategorySyntaxError("dangling slash", pos_ - 1);
            left = Category::functor(s, std::move(left), primary());
        }
    }

    Category primary() {
        skip_ws();
        if (at_end())
            throw CategorySyntaxError("unexpected end of expression", pos_);
        char ch = text_[pos_];
        if (ch == '(') {
            std::size_t open = pos_++;
            skip_ws();
            if (!at_end() && text_[pos_] == ')')
                throw CategorySyntaxError("empty parentheses", pos_);
            Category inner = expression();
            skip_ws();
            if (at_end() || text_[pos_] != ')')
                throw CategorySyntaxError("unbalanced '('", open);
            ++pos_;
            return inner;
        }
        if (ch == '/' || ch == '\\')
            throw CategorySyntaxError("dangling slash", pos_);
        if (ch == ')')
            throw CategorySyntaxError("empty atom", pos_);
        std::size_t start = pos_;
        while (!at_end() && is_atom_char(text_[pos_]))
            ++pos_;
        if (pos_ == start)
            throw CategorySyntaxError(std::string("invalid character '") + ch + "'", pos_);
        return Category::atom(std::string(text_.substr(start, pos_ - start)));
    }

    static bool is_atom_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }
    void skip_ws() {
        while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses slash notation; `/` and `\` share one precedence level and
/// associate to the left, so `A/B/C` is `(A/B)/C`.
inline Category parse_category(std::string_view text) {
    return detail::CategoryParser(text).parse();
}

inline std::string print_category(const Category& c) { return c.to_string(); }

}  // namespace ccgplan

template <>
struct std::hash<ccgplan::Category> {
    std::size_t operator()(const ccgplan::Category& c) const noexcept { return c.hash(); }
};

#endif
