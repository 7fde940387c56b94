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

#ifndef CCGPLAN_PLAN_ENGINE_HPP
#define CCGPLAN_PLAN_ENGINE_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "asr.hpp"
#include "combinators.hpp"
#include "derivation.hpp"
#include "lexicon.hpp"
#include "normal_form.hpp"

namespace ccgplan {

/// Strict: reach a single `target` category (S unless overridden).
/// BestEffort: reach the shortest possible ASR.
struct ParseGoal {
    enum class Mode { Strict, BestEffort };

    Mode mode = Mode::Strict;
    Category target = Category::atom("S");

    static ParseGoal strict(Category target = Category::atom("S")) {
        return {Mode::Strict, std::move(target)};
    }
    static ParseGoal best_effort() { return {Mode::BestEffort, Category::atom("S")}; }

    bool is_strict() const { return mode == Mode::Strict; }
};

/// Thrown by step() when the actions violate its contract.
class PlanContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline std::vector<std::optional<CombinatorKind>> producers(const Asr& s, std::span<const PositionId> ps) {
    std::vector<std::optional<CombinatorKind>> out;
    out.reserve(ps.size());
    for (PositionId p : ps)
        out.push_back(s.last_action(p));
    return out;
}

inline std::vector<Category> input_categories(const Asr& s, std::span<const PositionId> ps) {
    std::vector<Category> out;
    out.reserve(ps.size());
    for (PositionId p : ps) {
        int i = s.index_of(p);
        if (i < 0)
            throw PlanContractError("position " + std::to_string(p) + " is not in the ASR");
        out.push_back(s.items()[static_cast<std::size_t>(i)].cat);
    }
    return out;
}

}  // namespace detail

/// The normalization clause that bans `a` in `s`, judged by the last action
/// that modified each input position.
inline BanClause ban_reason(const Action& a, const Asr& s, const RuleConfig& cfg) {
    auto prod = detail::producers(s, a.positions);
    auto cats = detail::input_categories(s, a.positions);
    return ban_clause(a.kind, prod, cats, cfg.normalize);
}

inline bool banned(const Action& a, const Asr& s, const RuleConfig& cfg) {
    return ban_reason(a, s, cfg) != BanClause::None;
}

/// Every unbanned action whose rule instance matches adjacent items of `s`,
/// ordered by leftmost item, then arity, then combinator kind.
inline std::vector<Action> applicable_actions(const Asr& s, const RuleConfig& cfg) {
    std::vector<Action> out;
    if (s.time() >= cfg.max_steps)
        return out;
    const auto& items = s.items();
    const int t = s.time();
    auto keep = [&](Action a) {
        if (!banned(a, s, cfg))
            out.push_back(std::move(a));
    };
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& here = items[i];
        if (raise_allowed_on(s.last_action(here.pos)))
            for (auto& inst : unary_instances(here.cat, cfg))
                keep(Action{inst.kind, {here.pos}, std::move(inst.output), t});
        if (i + 1 < items.size()) {
            const auto& next = items[i + 1];
            for (auto& inst : binary_instances(here.cat, next.cat, cfg))
                keep(Action{inst.kind, {here.pos, next.pos}, std::move(inst.output), t});
        }
        if (i + 2 < items.size()) {
            const auto& mid = items[i + 1];
            const auto& last = items[i + 2];
            for (auto& inst : ternary_instances(here.cat, mid.cat, last.cat, cfg))
                keep(Action{inst.kind, {here.pos, mid.pos, last.pos}, std::move(inst.output), t});
        }
    }
    return out;
}

/// Applies one action in place of its inputs without advancing time.
/// Folding this over a step's actions in any order must equal step().
inline Asr apply_action(const Asr& s, const Action& a) {
    int first = s.index_of(a.positions.front());
    if (first < 0)
        throw PlanContractError("action " + to_string(a) + " refers to a missing position");
    auto f = static_cast<std::size_t>(first);
    const auto& items = s.items();
    if (f + a.positions.size() > items.size())
        throw PlanContractError("action " + to_string(a) + " runs past the end of the ASR");
    std::vector<Category> inputs;
    for (std::size_t k = 0; k < a.positions.size(); ++k) {
        if (items[f + k].pos != a.positions[k])
            throw PlanContractError("action " + to_string(a) + " uses non-adjacent positions");
        inputs.push_back(items[f + k].cat);
    }
    if (!satisfies_schema(a.kind, inputs, a.output))
        throw PlanContractError("action " + to_string(a) + " does not match its combinator schema");

    AsrBuilder b(s);
    auto& out = b.items();
    out.erase(out.begin() + first + 1, out.begin() + first + static_cast<long>(a.positions.size()));
    out[f].cat = a.output;
    b.mark(a.positions.front(), s.time() + 1, a.kind);
    return std::move(b).build();
}

/// Closes a step begun with apply_action.
inline Asr finish_step(const Asr& s) {
    AsrBuilder b(s);
    b.set_time(s.time() + 1);
    return std::move(b).build();
}

/// Executes a set of concurrent, position-disjoint actions. Each consumed
/// run of items becomes one item carrying the leftmost id; all other items
/// carry over unchanged.
inline Asr step(const Asr& s, std::span<const Action> acts) {
    if (acts.empty())
        throw PlanContractError("a plan step must contain at least one action");
    const auto& items = s.items();
    std::vector<int> starts(items.size(), -1);
    std::vector<bool> used(items.size(), false);
    for (std::size_t ai = 0; ai < acts.size(); ++ai) {
        const Action& a = acts[ai];
        if (a.time != s.time())
            throw PlanContractError("action " + to_string(a) + " is not timed for step " +
                                    std::to_string(s.time()));
        if (static_cast<int>(a.positions.size()) != arity(a.kind))
            throw PlanContractError("action " + to_string(a) + " has the wrong number of positions");
        int first = s.index_of(a.positions.front());
        if (first < 0)
            throw PlanContractError("action " + to_string(a) + " refers to a missing position");
        auto f = static_cast<std::size_t>(first);
        if (f + a.positions.size() > items.size())
            throw PlanContractError("action " + to_string(a) + " runs past the end of the ASR");
        std::vector<Category> inputs;
        for (std::size_t k = 0; k < a.positions.size(); ++k) {
            if (items[f + k].pos != a.positions[k])
                throw PlanContractError("action " + to_string(a) + " uses non-adjacent positions");
            if (used[f + k])
                throw PlanContractError("overlapping actions at position " + std::to_string(a.positions[k]));
            used[f + k] = true;
            inputs.push_back(items[f + k].cat);
        }
        if (!satisfies_schema(a.kind, inputs, a.output))
            throw PlanContractError("action " + to_string(a) + " does not match its combinator schema");
        starts[f] = static_cast<int>(ai);
    }

    AsrBuilder b(s);
    std::vector<AnnotatedCategory> next;
    next.reserve(items.size());
    for (std::size_t i = 0; i < items.size();) {
        if (starts[i] < 0) {
            next.push_back(items[i]);
            ++i;
            continue;
        }
        const Action& a = acts[static_cast<std::size_t>(starts[i])];
        next.push_back({items[i].pos, a.output});
        b.mark(items[i].pos, s.time() + 1, a.kind);
        i += a.positions.size();
    }
    b.items() = std::move(next);
    b.set_time(s.time() + 1);
    return std::move(b).build();
}

struct SearchStats {
    std::size_t states = 0;
    std::size_t revisits = 0;
    std::size_t goal_plans = 0;  // goal-reaching canonical plans before tree dedup
};

struct BestEffortResult {
    std::size_t residue = 0;
    std::vector<Forest> forests;
};

namespace detail {

/// Depth-first search over canonical concurrent plans.
///
/// Canonicality: a category produced at step t may only be consumed at
/// step t+1, and every action after step 0 consumes something produced at
/// the previous step unless all of its inputs are lexical. The first rule
/// is enforced by never consuming a stale item (see Asr::is_stale); given
/// it, the second holds automatically.
class PlanSearch {
public:
    PlanSearch(const RuleConfig& cfg, ParseGoal goal, std::span<const std::string> words)
        : cfg_(cfg), goal_(std::move(goal)), words_(words.begin(), words.end()) {}

    void run(const Asr& initial) {
        if (initial.time() != 0)
            throw PlanContractError("search must start from a time-0 ASR");
        std::vector<DerivationTree> leaves;
        for (const auto& it : initial.items()) {
            std::optional<std::string> w;
            auto idx = static_cast<std::size_t>(it.pos - 1);
            if (idx < words_.size())
                w = words_[idx];
            leaves.push_back(DerivationTree::leaf(it.cat, it.pos, std::move(w)));
        }
        visit(initial, leaves);
    }

    TreeSet& trees() { return trees_; }
    std::size_t best_residue() const { return best_residue_; }
    ForestSet& forests() { return forests_; }
    const SearchStats& stats() const { return stats_; }

private:
    // Returns whether a goal state was recorded at or below `s`.
    bool visit(const Asr& s, const std::vector<DerivationTree>& trees) {
        const bool strict = goal_.is_strict();
        // The future of a state does not depend on the trees built so far,
        // so a dead end for one history is a dead end for all of them.
        std::string akey;
        if (strict) {
            akey = asr_key(s);
            if (dead_.count(akey)) {
                ++stats_.revisits;
                return false;
            }
        }
        if (!seen_.insert(state_key(s, trees)).second) {
            ++stats_.revisits;
            return true;
        }
        ++stats_.states;
        bool found = record(s, trees);
        if (s.time() < cfg_.max_steps && (!strict || can_still_reach_one(s)))
            found = expand_all(s, trees) || found;
        if (strict && !found)
            dead_.insert(std::move(akey));
        return found;
    }

    bool expand_all(const Asr& s, const std::vector<DerivationTree>& trees) {
        const bool strict = goal_.is_strict();

        std::vector<Action> candidates;
        for (auto& a : applicable_actions(s, cfg_)) {
            bool stale = std::any_of(a.positions.begin(), a.positions.end(),
                                     [&](PositionId p) { return s.is_stale(p); });
            if (!stale)
                candidates.push_back(std::move(a));
        }
        if (candidates.empty())
            return false;

        // Bucket by the item index each action starts at.
        const auto& items = s.items();
        std::vector<std::vector<const Action*>> by_start(items.size());
        for (const auto& a : candidates)
            by_start[static_cast<std::size_t>(s.index_of(a.positions.front()))].push_back(&a);

        // Under a strict goal an item produced at the previous step that is
        // left alone now can never be consumed again.
        std::vector<bool> must_consume(items.size(), false);
        if (strict && items.size() > 1 && s.time() > 0)
            for (std::size_t i = 0; i < items.size(); ++i)
                must_consume[i] = s.last_affected(items[i].pos) == s.time();

        std::vector<Action> chosen;
        std::vector<NextItem> built;
        return choose(s, trees, by_start, must_consume, 0, chosen, built);
    }

    // Item of the state the chosen actions will produce.
    struct NextItem {
        Category cat;
        std::optional<CombinatorKind> producer;
        bool fresh;
    };

    // Whether built[k] can take part in some unbanned action one step later.
    bool consumable(const std::vector<NextItem>& built, std::size_t k) const {
        auto fits = [&](std::size_t first, std::size_t count) {
            if (first + count > built.size())
                return false;
            std::vector<Category> cats;
            std::vector<std::optional<CombinatorKind>> prods;
            for (std::size_t i = first; i < first + count; ++i) {
                cats.push_back(built[i].cat);
                prods.push_back(built[i].producer);
            }
            std::vector<RuleInstance> insts;
            if (count == 1) {
                if (raise_allowed_on(prods[0]))
                    insts = unary_instances(cats[0], cfg_);
            } else if (count == 2) {
                insts = binary_instances(cats[0], cats[1], cfg_);
            } else {
                insts = ternary_instances(cats[0], cats[1], cats[2], cfg_);
            }
            return std::any_of(insts.begin(), insts.end(), [&](const RuleInstance& inst) {
                return ban_clause(inst.kind, prods, cats, cfg_.normalize) == BanClause::None;
            });
        };
        if (fits(k, 1) || fits(k, 2) || (k >= 1 && fits(k - 1, 2)))
            return true;
        if (!cfg_.enabled.contains(CombinatorKind::Coord))
            return false;
        for (std::size_t back = 0; back <= 2 && back <= k; ++back)
            if (fits(k - back, 3))
                return true;
        return false;
    }

    // Enumerates every non-empty set of disjoint actions by scanning items
    // left to right; each set is produced exactly once. Under a strict goal
    // a branch is cut as soon as a freshly produced item has no partner it
    // could combine with at the next step.
    bool choose(const Asr& s, const std::vector<DerivationTree>& trees,
                const std::vector<std::vector<const Action*>>& by_start,
                const std::vector<bool>& must_consume, std::size_t i, std::vector<Action>& chosen,
                std::vector<NextItem>& built) {
        const bool prune = goal_.is_strict() && s.time() + 1 < cfg_.max_steps;
        auto settled = [&](std::size_t k) { return !built[k].fresh || consumable(built, k); };
        if (i >= by_start.size()) {
            if (chosen.empty())
                return false;
            if (prune && built.size() > 1)
                for (std::size_t k = built.size() >= 2 ? built.size() - 2 : 0; k < built.size(); ++k)
                    if (!settled(k))
                        return false;
            return expand(s, trees, chosen);
        }
        // pushes one item; false if that closes the window of a dead item
        auto push = [&](NextItem item) {
            built.push_back(std::move(item));
            return !(prune && built.size() >= 3 && !settled(built.size() - 3));
        };
        bool found = false;
        const auto& items = s.items();
        if (!must_consume[i]) {
            if (push({items[i].cat, s.last_action(items[i].pos), false}))
                found = choose(s, trees, by_start, must_consume, i + 1, chosen, built);
            built.pop_back();
        }
        for (const Action* a : by_start[i]) {
            chosen.push_back(*a);
            if (push({a->output, a->kind, true}))
                found = choose(s, trees, by_start, must_consume, i + a->positions.size(), chosen, built) || found;
            built.pop_back();
            chosen.pop_back();
        }
        return found;
    }

    bool expand(const Asr& s, const std::vector<DerivationTree>& trees, const std::vector<Action>& acts) {
        Asr next = step(s, acts);
        const auto& items = s.items();
        std::vector<DerivationTree> next_trees;
        next_trees.reserve(next.size());
        std::size_t ai = 0;
        for (std::size_t i = 0; i < items.size();) {
            if (ai < acts.size() && acts[ai].positions.front() == items[i].pos) {
                const Action& a = acts[ai++];
                std::vector<DerivationTree> kids(trees.begin() + static_cast<long>(i),
                                                 trees.begin() + static_cast<long>(i + a.positions.size()));
                next_trees.push_back(DerivationTree::node(a.kind, a.output, std::move(kids)));
                i += a.positions.size();
            } else {
                next_trees.push_back(trees[i]);
                ++i;
            }
        }
        return visit(next, next_trees);
    }

    bool record(const Asr& s, const std::vector<DerivationTree>& trees) {
        if (goal_.is_strict()) {
            if (s.size() == 1 && s.items().front().cat == goal_.target) {
                ++stats_.goal_plans;
                trees_.insert(trees.front());
                return true;
            }
            return false;
        }
        if (s.size() < best_residue_) {
            best_residue_ = s.size();
            forests_.clear();
        }
        if (s.size() == best_residue_) {
            ++stats_.goal_plans;
            forests_.insert(trees);
        }
        return true;
    }

    bool can_still_reach_one(const Asr& s) const {
        std::size_t n = s.size();
        if (n <= 1)
            return true;
        if (std::any_of(s.items().begin(), s.items().end(),
                        [&](const AnnotatedCategory& a) { return s.is_stale(a.pos); }))
            return false;
        // One step merges runs of at most 2 items (3 with coordination).
        const std::size_t shrink = cfg_.enabled.contains(CombinatorKind::Coord) ? 3 : 2;
        for (int r = cfg_.max_steps - s.time(); r > 0 && n > 1; --r)
            n = (n + shrink - 1) / shrink;
        return n <= 1;
    }

    static std::string asr_key(const Asr& s) {
        std::string k = std::to_string(s.time());
        for (const auto& it : s.items()) {
            k += '|';
            k += std::to_string(s.last_affected(it.pos));
            auto by = s.last_action(it.pos);
            k += by ? kind_symbol(*by) : "-";
            k += ' ';
            k += it.cat.to_string();
        }
        return k;
    }

    static std::string state_key(const Asr& s, const std::vector<DerivationTree>& trees) {
        std::string k = std::to_string(s.time());
        for (std::size_t i = 0; i < trees.size(); ++i) {
            k += '|';
            k += std::to_string(s.last_affected(s.items()[i].pos));
            k += trees[i].key();
        }
        return k;
    }

    const RuleConfig& cfg_;
    ParseGoal goal_;
    std::vector<std::string> words_;
    std::unordered_set<std::string> seen_;
    std::unordered_set<std::string> dead_;
    TreeSet trees_;
    ForestSet forests_;
    std::size_t best_residue_ = std::numeric_limits<std::size_t>::max();
    SearchStats stats_;
};

}  // namespace detail

/// All distinct derivation trees denoted by canonical plans of at most
/// cfg.max_steps steps that turn `initial` into [target]. Sorted by
/// canonical key. `words`, when given, label the leaves (word i for id i+1).
inline std::vector<DerivationTree> enumerate_parses(const Asr& initial, const RuleConfig& cfg,
                                                    const ParseGoal& goal = ParseGoal::strict(),
                                                    std::span<const std::string> words = {},
                                                    SearchStats* stats = nullptr) {
    if (!goal.is_strict())
        throw std::invalid_argument("enumerate_parses needs a strict goal; use best_effort");
    detail::PlanSearch search(cfg, goal, words);
    search.run(initial);
    if (stats)
        *stats = search.stats();
    return search.trees().to_vector();
}

/// Minimal reachable ASR length and every distinct forest achieving it.
inline BestEffortResult best_effort(const Asr& initial, const RuleConfig& cfg,
                                    std::span<const std::string> words = {},
                                    SearchStats* stats = nullptr) {
    detail::PlanSearch search(cfg, ParseGoal::best_effort(), words);
    search.run(initial);
    if (stats)
        *stats = search.stats();
    return {search.best_residue(), search.forests().to_vector()};
}

/// Union over every initial ASR of a tagged sentence. Strict results hold
/// one single-tree forest per parse; for best effort the residue minimum is
/// taken over all ASRs.
struct ParseResult {
    ParseGoal::Mode mode = ParseGoal::Mode::Strict;
    std::size_t residue = 0;
    std::vector<Forest> forests;

    bool empty() const { return forests.empty(); }
    std::vector<DerivationTree> trees() const {
        std::vector<DerivationTree> out;
        for (const auto& f : forests)
            if (f.size() == 1)
                out.push_back(f.front());
        return out;
    }
};

inline ParseResult parse_all(const TaggedSentence& ts, const RuleConfig& cfg, const ParseGoal& goal) {
    const auto words = ts.words();
    ParseResult result;
    result.mode = goal.mode;
    if (goal.is_strict()) {
        TreeSet all;
        for (const Asr& asr : initial_asrs(ts))
            for (const auto& t : enumerate_parses(asr, cfg, goal, words))
                all.insert(t);
        for (const auto& t : all.to_vector())
            result.forests.push_back({t});
        result.residue = result.forests.empty() ? 0 : 1;
        return result;
    }
    ForestSet best;
    std::size_t residue = std::numeric_limits<std::size_t>::max();
    for (const Asr& asr : initial_asrs(ts)) {
        auto r = best_effort(asr, cfg, words);
        if (r.residue < residue) {
            residue = r.residue;
            best.clear();
        }
        if (r.residue == residue)
            for (const auto& f : r.forests)
                best.insert(f);
    }
    result.residue = residue;
    result.forests = best.to_vector();
    return result;
}

}  // namespace ccgplan

#endif
