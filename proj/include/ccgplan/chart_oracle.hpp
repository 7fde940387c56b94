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

#ifndef CCGPLAN_CHART_ORACLE_HPP
#define CCGPLAN_CHART_ORACLE_HPP

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "combinators.hpp"
#include "derivation.hpp"
#include "lexicon.hpp"
#include "normal_form.hpp"
#include "plan_engine.hpp"

namespace ccgplan {

/// A fully expanded (unpacked) chart entry over tokens [start, end).
struct ChartItem {
    std::size_t start;
    std::size_t end;
    DerivationTree tree;

    const Category& cat() const { return tree.category(); }
    /// Combinator that built this constituent; nullopt for a lexical leaf.
    std::optional<CombinatorKind> built_by() const { return tree.kind(); }
};

inline constexpr std::size_t kOracleMaxLength = 10;

/// Exhaustive CKY chart over one category sequence. Every cell keeps every
/// tree, so this is only meant for short test sentences.
class Chart {
public:
    Chart(const std::vector<Category>& cats, std::span<const std::string> words, const RuleConfig& cfg,
          std::size_t max_length = kOracleMaxLength)
        : n_(cats.size()), cfg_(cfg), cells_(n_ * (n_ + 1)) {
        if (n_ == 0)
            throw std::invalid_argument("chart needs at least one token");
        if (n_ > max_length)
            throw std::invalid_argument("sentence of length " + std::to_string(n_) +
                                        " exceeds the oracle bound of " + std::to_string(max_length));
        for (std::size_t i = 0; i < n_; ++i) {
            std::optional<std::string> w;
            if (i < words.size())
                w = words[i];
            add(i, i + 1, DerivationTree::leaf(cats[i], static_cast<PositionId>(i + 1), std::move(w)));
            close_unary(i, i + 1);
        }
        for (std::size_t len = 2; len <= n_; ++len) {
            for (std::size_t i = 0; i + len <= n_; ++i) {
                std::size_t j = i + len;
                for (std::size_t k = i + 1; k < j; ++k)
                    combine_binary(i, k, j);
                for (std::size_t k1 = i + 1; k1 < j; ++k1)
                    for (std::size_t k2 = k1 + 1; k2 < j; ++k2)
                        combine_ternary(i, k1, k2, j);
                close_unary(i, j);
            }
        }
    }

    std::size_t length() const { return n_; }
    const std::vector<ChartItem>& cell(std::size_t i, std::size_t j) const { return cells_[index(i, j)]; }

private:
    std::size_t index(std::size_t i, std::size_t j) const { return i * (n_ + 1) + j; }

    void add(std::size_t i, std::size_t j, DerivationTree t) {
        // the plan search cannot build anything taller than its step bound
        if (t.height() > cfg_.max_steps)
            return;
        cells_[index(i, j)].push_back({i, j, std::move(t)});
    }

    bool allowed(CombinatorKind k, std::initializer_list<const ChartItem*> kids) const {
        std::vector<std::optional<CombinatorKind>> prod;
        std::vector<Category> cats;
        for (const ChartItem* c : kids) {
            prod.push_back(c->built_by());
            cats.push_back(c->cat());
        }
        return ban_clause(k, prod, cats, cfg_.normalize) == BanClause::None;
    }

    void combine_binary(std::size_t i, std::size_t k, std::size_t j) {
        const auto& left = cells_[index(i, k)];
        const auto& right = cells_[index(k, j)];
        for (const auto& l : left) {
            for (const auto& r : right) {
                for (auto& inst : binary_instances(l.cat(), r.cat(), cfg_)) {
                    if (!allowed(inst.kind, {&l, &r}))
                        continue;
                    add(i, j, DerivationTree::node(inst.kind, std::move(inst.output), {l.tree, r.tree}));
                }
            }
        }
    }

    void combine_ternary(std::size_t i, std::size_t k1, std::size_t k2, std::size_t j) {
        if (!cfg_.enabled.contains(CombinatorKind::Coord))
            return;
        for (const auto& l : cells_[index(i, k1)])
            for (const auto& m : cells_[index(k1, k2)])
                for (const auto& r : cells_[index(k2, j)])
                    for (auto& inst : ternary_instances(l.cat(), m.cat(), r.cat(), cfg_)) {
                        if (!allowed(inst.kind, {&l, &m, &r}))
                            continue;
                        add(i, j, DerivationTree::node(inst.kind, std::move(inst.output), {l.tree, m.tree, r.tree}));
                    }
    }

    // One round of raising: anything not itself produced by a raise.
    void close_unary(std::size_t i, std::size_t j) {
        auto& cell = cells_[index(i, j)];
        const std::size_t existing = cell.size();
        for (std::size_t c = 0; c < existing; ++c) {
            if (!raise_allowed_on(cell[c].built_by()))
                continue;
            for (auto& inst : unary_instances(cell[c].cat(), cfg_)) {
                const ChartItem& src = cells_[index(i, j)][c];
                if (!allowed(inst.kind, {&src}))
                    continue;
                DerivationTree child = src.tree;
                add(i, j, DerivationTree::node(inst.kind, std::move(inst.output), {std::move(child)}));
            }
        }
    }

    std::size_t n_;
    const RuleConfig& cfg_;
    std::vector<std::vector<ChartItem>> cells_;
};

namespace detail {

inline void collect_segmentations(const Chart& chart, std::size_t start, std::size_t remaining,
                                  Forest& prefix, ForestSet& out) {
    const std::size_t n = chart.length();
    if (start == n) {
        if (remaining == 0)
            out.insert(prefix);
        return;
    }
    if (remaining == 0)
        return;
    for (std::size_t end = start + 1; end <= n; ++end) {
        for (const auto& item : chart.cell(start, end)) {
            prefix.push_back(item.tree);
            collect_segmentations(chart, end, remaining - 1, prefix, out);
            prefix.pop_back();
        }
    }
}

}  // namespace detail

/// Every derivation over the sentence that respects the normal-form bans and
/// the step bound, goal-filtered like parse_all.
inline ParseResult chart_parse_all(const TaggedSentence& ts, const RuleConfig& cfg, const ParseGoal& goal,
                                   std::size_t max_length = kOracleMaxLength) {
    if (ts.tokens.size() > max_length)
        throw std::invalid_argument("sentence of length " + std::to_string(ts.tokens.size()) +
                                    " exceeds the oracle bound of " + std::to_string(max_length));
    const auto words = ts.words();
    ParseResult result;
    result.mode = goal.mode;

    if (goal.is_strict()) {
        TreeSet all;
        for (const Asr& asr : initial_asrs(ts)) {
            std::vector<Category> cats;
            for (const auto& it : asr.items())
                cats.push_back(it.cat);
            Chart chart(cats, words, cfg, max_length);
            for (const auto& item : chart.cell(0, chart.length()))
                if (item.cat() == goal.target)
                    all.insert(item.tree);
        }
        for (const auto& t : all.to_vector())
            result.forests.push_back({t});
        result.residue = result.forests.empty() ? 0 : 1;
        return result;
    }

    ForestSet best;
    std::size_t residue = std::numeric_limits<std::size_t>::max();
    for (const Asr& asr : initial_asrs(ts)) {
        std::vector<Category> cats;
        for (const auto& it : asr.items())
            cats.push_back(it.cat);
        Chart chart(cats, words, cfg, max_length);
        const std::size_t n = chart.length();
        // fewest[i]: fewest constituents covering tokens [i, n)
        std::vector<std::size_t> fewest(n + 1, std::numeric_limits<std::size_t>::max());
        fewest[n] = 0;
        for (std::size_t i = n; i-- > 0;)
            for (std::size_t j = i + 1; j <= n; ++j)
                if (!chart.cell(i, j).empty() && fewest[j] != std::numeric_limits<std::size_t>::max())
                    fewest[i] = std::min(fewest[i], fewest[j] + 1);
        if (fewest[0] > residue)
            continue;
        if (fewest[0] < residue) {
            residue = fewest[0];
            best.clear();
        }
        Forest prefix;
        detail::collect_segmentations(chart, 0, residue, prefix, best);
    }
    result.residue = residue;
    result.forests = best.to_vector();
    return result;
}

inline std::size_t count_parses(const TaggedSentence& ts, const RuleConfig& cfg, const ParseGoal& goal) {
    return chart_parse_all(ts, cfg, goal).forests.size();
}

}  // namespace ccgplan

#endif
