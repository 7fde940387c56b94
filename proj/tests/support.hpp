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

// Test-only helpers: fixtures, random generators and a brute-force
// derivation enumerator that shares no code with either parser.

#ifndef CCGPLAN_TESTS_SUPPORT_HPP
#define CCGPLAN_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "ccgplan/ccgplan.hpp"

namespace ccgplan::testing {

inline Category cat(const char* text) { return parse_category(text); }

inline Lexicon sample_lexicon() {
    return load_lexicon("The\tNP/N\ndog\tN\nbit\t(S\\NP)/NP\nJohn\tNP\n");
}

inline TaggedSentence tagged(const std::string& words, const Lexicon& lex = sample_lexicon()) {
    std::vector<std::string> ws;
    std::string w;
    for (char c : words) {
        if (c == ' ') {
            if (!w.empty())
                ws.push_back(w);
            w.clear();
        } else {
            w += c;
        }
    }
    if (!w.empty())
        ws.push_back(w);
    return tag_with_lexicon(ws, lex);
}

inline TaggedSentence from_categories(const std::vector<std::string>& cats) {
    TaggedSentence ts;
    for (std::size_t i = 0; i < cats.size(); ++i)
        ts.tokens.push_back({"w" + std::to_string(i + 1), {}, {{parse_category(cats[i]), std::nullopt}}});
    return ts;
}

inline RuleConfig rules(std::initializer_list<CombinatorKind> kinds, bool normalize, int max_steps) {
    RuleConfig cfg;
    cfg.enabled = KindSet(kinds);
    cfg.raise_targets = RuleConfig::default_raise_targets();
    cfg.normalize = normalize;
    cfg.max_steps = max_steps;
    return cfg;
}

/// The two derivations of "The dog bit John": application only, and via raising and composition.
inline DerivationTree application_tree() {
    using K = CombinatorKind;
    auto the = DerivationTree::leaf(cat("NP/N"), 1, "The");
    auto dog = DerivationTree::leaf(cat("N"), 2, "dog");
    auto bit = DerivationTree::leaf(cat("(S\\NP)/NP"), 3, "bit");
    auto john = DerivationTree::leaf(cat("NP"), 4, "John");
    auto np = DerivationTree::node(K::FwdAppl, cat("NP"), {the, dog});
    auto vp = DerivationTree::node(K::FwdAppl, cat("S\\NP"), {bit, john});
    return DerivationTree::node(K::BwdAppl, cat("S"), {np, vp});
}

inline DerivationTree spurious_tree() {
    using K = CombinatorKind;
    auto the = DerivationTree::leaf(cat("NP/N"), 1, "The");
    auto dog = DerivationTree::leaf(cat("N"), 2, "dog");
    auto bit = DerivationTree::leaf(cat("(S\\NP)/NP"), 3, "bit");
    auto john = DerivationTree::leaf(cat("NP"), 4, "John");
    auto np = DerivationTree::node(K::FwdAppl, cat("NP"), {the, dog});
    auto raised = DerivationTree::node(K::FwdRaise, cat("S/(S\\NP)"), {np});
    auto sfrag = DerivationTree::node(K::FwdComp, cat("S/NP"), {raised, bit});
    return DerivationTree::node(K::FwdAppl, cat("S"), {sfrag, john});
}

/// "The dog bit" best-effort forest: >, >T, >B.
inline DerivationTree fragment_tree() {
    using K = CombinatorKind;
    auto the = DerivationTree::leaf(cat("NP/N"), 1, "The");
    auto dog = DerivationTree::leaf(cat("N"), 2, "dog");
    auto bit = DerivationTree::leaf(cat("(S\\NP)/NP"), 3, "bit");
    auto np = DerivationTree::node(K::FwdAppl, cat("NP"), {the, dog});
    auto raised = DerivationTree::node(K::FwdRaise, cat("S/(S\\NP)"), {np});
    return DerivationTree::node(K::FwdComp, cat("S/NP"), {raised, bit});
}

/// Category pool for randomized instances.
inline const std::vector<std::string>& category_pool() {
    static const std::vector<std::string> pool = {
        "NP",       "N",     "S",           "NP/N",            "N/N",
        "S\\NP",    "(S\\NP)/NP", "(S\\NP)\\(S\\NP)", "S/NP", "NP\\NP",
        "(NP\\NP)/NP", "S/S",
    };
    return pool;
}

/// Random tagged sentence over a random per-instance lexicon: 1..max_len
/// tokens, each with one candidate and sometimes a second.
inline TaggedSentence random_sentence(std::mt19937& rng, std::size_t max_len) {
    const auto& pool = category_pool();
    std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
    std::uniform_int_distribution<std::size_t> cat_dist(0, pool.size() - 1);
    std::bernoulli_distribution second(0.2);
    TaggedSentence ts;
    std::size_t n = len_dist(rng);
    for (std::size_t i = 0; i < n; ++i) {
        Token tok{"w" + std::to_string(i + 1), {}, {}};
        tok.candidates.push_back({parse_category(pool[cat_dist(rng)]), std::nullopt});
        if (second(rng)) {
            auto c = parse_category(pool[cat_dist(rng)]);
            if (!(c == tok.candidates.front().category))
                tok.candidates.push_back({c, std::nullopt});
        }
        ts.tokens.push_back(std::move(tok));
    }
    return ts;
}

/// Random category of bounded depth over a few atoms.
inline Category random_category(std::mt19937& rng, int depth) {
    static const char* atoms[] = {"S", "NP", "N", "PP", "conj", "X1"};
    std::uniform_int_distribution<int> pick(0, 5);
    std::bernoulli_distribution leaf(depth <= 0 ? 1.0 : 0.4);
    if (leaf(rng))
        return Category::atom(atoms[pick(rng)]);
    std::bernoulli_distribution fwd(0.5);
    return Category::functor(fwd(rng) ? Slash::Fwd : Slash::Bwd, random_category(rng, depth - 1),
                             random_category(rng, depth - 1));
}

/// Random derivation-shaped tree (categories are not required to obey any
/// combinator schema; used for serialization round trips).
inline DerivationTree random_tree(std::mt19937& rng, int depth, PositionId& next_pos) {
    std::bernoulli_distribution leaf(depth <= 0 ? 1.0 : 0.35);
    if (leaf(rng)) {
        std::bernoulli_distribution has_word(0.7);
        std::optional<std::string> w;
        if (has_word(rng))
            w = "tok" + std::to_string(next_pos);
        return DerivationTree::leaf(random_category(rng, 2), next_pos++, w);
    }
    std::uniform_int_distribution<std::size_t> k(0, kAllKinds.size() - 1);
    CombinatorKind kind = kAllKinds[k(rng)];
    std::vector<DerivationTree> kids;
    for (int i = 0; i < arity(kind); ++i)
        kids.push_back(random_tree(rng, depth - 1, next_pos));
    return DerivationTree::node(kind, random_category(rng, 2), std::move(kids));
}

/// Brute force: every binary bracketing of `cats` with every matching
/// binary combinator, no bans, no raising. Returns the number of derivations
/// whose root is `target`, optionally rejecting trees that a predicate
/// (kind, left producer, right producer) refuses.
struct BruteNode {
    Category cat;
    std::optional<CombinatorKind> kind;
};

template <class Accept>
std::vector<BruteNode> brute_force(const std::vector<Category>& cats, std::size_t i, std::size_t j,
                                   const std::vector<CombinatorKind>& kinds, Accept accept) {
    if (j - i == 1)
        return {{cats[i], std::nullopt}};
    std::vector<BruteNode> out;
    for (std::size_t k = i + 1; k < j; ++k) {
        auto left = brute_force(cats, i, k, kinds, accept);
        auto right = brute_force(cats, k, j, kinds, accept);
        for (const auto& l : left)
            for (const auto& r : right)
                for (CombinatorKind kind : kinds) {
                    std::optional<Category> o;
                    // schemas written out directly
                    if (kind == CombinatorKind::FwdAppl && l.cat.is_fwd() && l.cat.arg() == r.cat)
                        o = l.cat.result();
                    if (kind == CombinatorKind::FwdComp && l.cat.is_fwd() && r.cat.is_fwd() &&
                        l.cat.arg() == r.cat.result())
                        o = Category::fwd(l.cat.result(), r.cat.arg());
                    if (o && accept(kind, l.kind, r.kind))
                        out.push_back({*o, kind});
                }
    }
    return out;
}

/// Chain A/B, B/C, ... , last atom: n categories total.
inline std::vector<std::string> functor_chain(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i + 1 < n; ++i)
        out.push_back(std::string(1, static_cast<char>('A' + i)) + "/" + std::string(1, static_cast<char>('A' + i + 1)));
    out.push_back(std::string(1, static_cast<char>('A' + n - 1)));
    return out;
}

inline std::size_t catalan(std::size_t n) {
    std::size_t c = 1;
    for (std::size_t k = 0; k < n; ++k)
        c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

}  // namespace ccgplan::testing

#endif
