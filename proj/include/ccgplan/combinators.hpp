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

#ifndef CCGPLAN_COMBINATORS_HPP
#define CCGPLAN_COMBINATORS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "category.hpp"

namespace ccgplan {

/// Declaration order is the deterministic order in which instances are emitted.
enum class CombinatorKind : std::uint8_t {
    FwdAppl,
    BwdAppl,
    FwdComp,
    BwdComp,
    FwdRaise,
    BwdRaise,
    BwdXComp,
    BwdXSubst,
    Coord,
};

inline constexpr std::array<CombinatorKind, 9> kAllKinds = {
    CombinatorKind::FwdAppl,  CombinatorKind::BwdAppl,  CombinatorKind::FwdComp,
    CombinatorKind::BwdComp,  CombinatorKind::FwdRaise, CombinatorKind::BwdRaise,
    CombinatorKind::BwdXComp, CombinatorKind::BwdXSubst, CombinatorKind::Coord,
};

constexpr int arity(CombinatorKind k) {
    switch (k) {
    case CombinatorKind::FwdRaise:
    case CombinatorKind::BwdRaise:
        return 1;
    case CombinatorKind::Coord:
        return 3;
    default:
        return 2;
    }
}

constexpr bool is_raise(CombinatorKind k) {
    return k == CombinatorKind::FwdRaise || k == CombinatorKind::BwdRaise;
}

constexpr std::string_view kind_name(CombinatorKind k) {
    constexpr std::array<std::string_view, 9> names = {
        "FwdAppl", "BwdAppl", "FwdComp", "BwdComp", "FwdRaise",
        "BwdRaise", "BwdXComp", "BwdXSubst", "Coord",
    };
    return names[static_cast<std::size_t>(k)];
}

/// Label drawn on derivation underlines.
constexpr std::string_view kind_symbol(CombinatorKind k) {
    constexpr std::array<std::string_view, 9> symbols = {
        ">", "<", ">B", "<B", ">T", "<T", "<Bx", "<Sx", "&",
    };
    return symbols[static_cast<std::size_t>(k)];
}

inline std::optional<CombinatorKind> kind_from_name(std::string_view name) {
    for (CombinatorKind k : kAllKinds)
        if (kind_name(k) == name)
            return k;
    return std::nullopt;
}

/// Small bitset over CombinatorKind.
class KindSet {
public:
    constexpr KindSet() = default;
    constexpr KindSet(std::initializer_list<CombinatorKind> kinds) {
        for (CombinatorKind k : kinds)
            insert(k);
    }

    constexpr void insert(CombinatorKind k) { bits_ |= bit(k); }
    constexpr void erase(CombinatorKind k) { bits_ &= ~bit(k); }
    constexpr bool contains(CombinatorKind k) const { return (bits_ & bit(k)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool any_raise() const {
        return contains(CombinatorKind::FwdRaise) || contains(CombinatorKind::BwdRaise);
    }

    friend constexpr bool operator==(KindSet, KindSet) = default;

private:
    static constexpr std::uint16_t bit(CombinatorKind k) {
        return static_cast<std::uint16_t>(1u << static_cast<unsigned>(k));
    }
    std::uint16_t bits_ = 0;
};

struct RuleConfig {
    KindSet enabled;
    std::vector<Category> raise_targets;
    bool normalize = true;
    int max_steps = 1;

    /// Application, composition and both raises; targets S, S\NP, (S\NP)/NP.
    static RuleConfig defaults(int max_steps) {
        RuleConfig cfg;
        cfg.enabled = {CombinatorKind::FwdAppl, CombinatorKind::BwdAppl, CombinatorKind::FwdComp,
                       CombinatorKind::BwdComp, CombinatorKind::FwdRaise, CombinatorKind::BwdRaise};
        cfg.raise_targets = default_raise_targets();
        cfg.max_steps = max_steps;
        return cfg;
    }

    static std::vector<Category> default_raise_targets() {
        return {parse_category("S"), parse_category("S\\NP"), parse_category("(S\\NP)/NP")};
    }

    /// Empty when the invariants hold, otherwise a description of the first violation.
    std::string validate() const {
        if (enabled.empty())
            return "no combinators enabled";
        if (enabled.any_raise() && raise_targets.empty())
            return "type raising enabled without raise targets";
        if (max_steps < 1)
            return "max_steps must be at least 1";
        return {};
    }
};

/// Default plan-length bound for an n-token sentence.
constexpr int default_max_steps(std::size_t sentence_length) {
    return static_cast<int>(sentence_length) + 2;
}

struct RuleInstance {
    CombinatorKind kind;
    std::vector<Category> inputs;
    Category output;

    friend bool operator==(const RuleInstance&, const RuleInstance&) = default;
};

inline Category fwd_raise(const Category& c, const Category& target) {
    return Category::fwd(target, Category::bwd(target, c));
}

inline Category bwd_raise(const Category& c, const Category& target) {
    return Category::bwd(target, Category::fwd(target, c));
}

/// Type-raising instances for `c`. With normalization on only NP is raised;
/// either way the result is bounded by cfg.raise_targets.
inline std::vector<RuleInstance> unary_instances(const Category& c, const RuleConfig& cfg) {
    std::vector<RuleInstance> out;
    if (!cfg.enabled.any_raise())
        return out;
    if (cfg.normalize && !c.is_atom("NP"))
        return out;

    std::vector<std::pair<std::string, const Category*>> targets;
    targets.reserve(cfg.raise_targets.size());
    for (const Category& t : cfg.raise_targets)
        targets.emplace_back(t.to_string(), &t);
    std::sort(targets.begin(), targets.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    targets.erase(std::unique(targets.begin(), targets.end(),
                              [](const auto& a, const auto& b) { return a.first == b.first; }),
                  targets.end());

    if (cfg.enabled.contains(CombinatorKind::FwdRaise))
        for (const auto& [_, t] : targets)
            out.push_back({CombinatorKind::FwdRaise, {c}, fwd_raise(c, *t)});
    if (cfg.enabled.contains(CombinatorKind::BwdRaise))
        for (const auto& [_, t] : targets)
            out.push_back({CombinatorKind::BwdRaise, {c}, bwd_raise(c, *t)});
    return out;
}

/// Output of a binary combinator on (l, r), if its schema matches.
inline std::optional<Category> binary_output(CombinatorKind k, const Category& l, const Category& r) {
    switch (k) {
    case CombinatorKind::FwdAppl:  // A/B B => A
        if (l.is_fwd() && l.arg() == r)
            return l.result();
        break;
    case CombinatorKind::BwdAppl:  // B A\B => A
        if (r.is_bwd() && r.arg() == l)
            return r.result();
        break;
    case CombinatorKind::FwdComp:  // A/B B/C => A/C
        if (l.is_fwd() && r.is_fwd() && l.arg() == r.result())
            return Category::fwd(l.result(), r.arg());
        break;
    case CombinatorKind::BwdComp:  // B\C A\B => A\C
        if (l.is_bwd() && r.is_bwd() && r.arg() == l.result())
            return Category::bwd(r.result(), l.arg());
        break;
    case CombinatorKind::BwdXComp:  // B/C A\B => A/C
        if (l.is_fwd() && r.is_bwd() && r.arg() == l.result())
            return Category::fwd(r.result(), l.arg());
        break;
    case CombinatorKind::BwdXSubst:  // B/C (A\B)/C => A/C
        if (l.is_fwd() && r.is_fwd() && r.result().is_bwd() && r.arg() == l.arg() &&
            r.result().arg() == l.result())
            return Category::fwd(r.result().result(), l.arg());
        break;
    default:
        break;
    }
    return std::nullopt;
}

inline std::vector<RuleInstance> binary_instances(const Category& l, const Category& r,
                                                  const RuleConfig& cfg) {
    std::vector<RuleInstance> out;
    for (CombinatorKind k : kAllKinds) {
        if (arity(k) != 2 || !cfg.enabled.contains(k))
            continue;
        if (auto o = binary_output(k, l, r))
            out.push_back({k, {l, r}, std::move(*o)});
    }
    return out;
}

/// `X conj X => X`, only when Coord is enabled.
inline std::vector<RuleInstance> ternary_instances(const Category& l, const Category& m,
                                                   const Category& r, const RuleConfig& cfg) {
    if (!cfg.enabled.contains(CombinatorKind::Coord) || !m.is_atom("conj") || !(l == r))
        return {};
    return {RuleInstance{CombinatorKind::Coord, {l, m, r}, l}};
}

/// Checks a (kind, inputs, output) triple against the combinator schema by
/// re-substitution. Raise targets are read off the output.
inline bool satisfies_schema(CombinatorKind k, std::span<const Category> inputs,
                             const Category& output) {
    if (static_cast<int>(inputs.size()) != arity(k))
        return false;
    switch (k) {
    case CombinatorKind::FwdRaise:
        return output.is_fwd() && output == fwd_raise(inputs[0], output.result());
    case CombinatorKind::BwdRaise:
        return output.is_bwd() && output == bwd_raise(inputs[0], output.result());
    case CombinatorKind::Coord:
        return inputs[1].is_atom("conj") && inputs[0] == inputs[2] && output == inputs[0];
    default: {
        auto o = binary_output(k, inputs[0], inputs[1]);
        return o && *o == output;
    }
    }
}

}  // namespace ccgplan

#endif
