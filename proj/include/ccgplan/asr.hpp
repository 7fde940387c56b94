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

#ifndef CCGPLAN_ASR_HPP
#define CCGPLAN_ASR_HPP

#include <optional>
#include <string>
#include <vector>

#include "category.hpp"
#include "combinators.hpp"

namespace ccgplan {

/// Annotation id of an ASR member. Ids are 1-based and stable for a whole search.
using PositionId = int;

struct AnnotatedCategory {
    PositionId pos;
    Category cat;

    friend bool operator==(const AnnotatedCategory&, const AnnotatedCategory&) = default;
};

/// Abstract sentence representation plus the bookkeeping the normal-form
/// bans need: for each position, when it was last modified and by what.
///
/// `last_affected(p) == t` means the action that modified p ran at step t-1,
/// i.e. p is affected at time t. Zero means p still holds its lexical category.
class Asr {
public:
    Asr() = default;

    /// Initial state at time 0 from a category sequence; ids are 1..n.
    explicit Asr(const std::vector<Category>& cats) {
        items_.reserve(cats.size());
        for (std::size_t i = 0; i < cats.size(); ++i)
            items_.push_back({static_cast<PositionId>(i + 1), cats[i]});
        last_affected_.assign(cats.size() + 1, 0);
        last_action_.assign(cats.size() + 1, std::nullopt);
    }

    const std::vector<AnnotatedCategory>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    int time() const { return time_; }

    int last_affected(PositionId p) const { return last_affected_.at(static_cast<std::size_t>(p)); }
    std::optional<CombinatorKind> last_action(PositionId p) const {
        return last_action_.at(static_cast<std::size_t>(p));
    }

    /// Index of `p` within items(), or -1.
    int index_of(PositionId p) const {
        for (std::size_t i = 0; i < items_.size(); ++i)
            if (items_[i].pos == p)
                return static_cast<int>(i);
        return -1;
    }

    /// Modified by an action at some step before the previous one.
    bool is_stale(PositionId p) const {
        int la = last_affected(p);
        return la > 0 && la < time_;
    }

    friend bool operator==(const Asr&, const Asr&) = default;

private:
    friend class AsrBuilder;

    std::vector<AnnotatedCategory> items_;
    int time_ = 0;
    // indexed by PositionId; slot 0 unused
    std::vector<int> last_affected_;
    std::vector<std::optional<CombinatorKind>> last_action_;
};

/// Internal mutator used by the transition function.
class AsrBuilder {
public:
    explicit AsrBuilder(const Asr& base) : asr_(base) {}

    std::vector<AnnotatedCategory>& items() { return asr_.items_; }
    void set_time(int t) { asr_.time_ = t; }
    void mark(PositionId p, int affected_at, CombinatorKind by) {
        asr_.last_affected_.at(static_cast<std::size_t>(p)) = affected_at;
        asr_.last_action_.at(static_cast<std::size_t>(p)) = by;
    }
    Asr build() && { return std::move(asr_); }

private:
    Asr asr_;
};

/// An annotated combinator occurrence: `kind` applied to the adjacent
/// `positions` at step `time`. The effect carries positions.front().
struct Action {
    CombinatorKind kind;
    std::vector<PositionId> positions;
    Category output;
    int time = 0;

    friend bool operator==(const Action&, const Action&) = default;
};

inline std::string to_string(const Action& a) {
    std::string s(kind_name(a.kind));
    s += '@';
    for (std::size_t i = 0; i < a.positions.size(); ++i) {
        s += i == 0 ? '(' : ',';
        s += std::to_string(a.positions[i]);
    }
    s += ")->" + a.output.to_string() + " t=" + std::to_string(a.time);
    return s;
}

/// One non-empty set of pairwise position-disjoint actions per time step.
struct Plan {
    std::vector<std::vector<Action>> steps;
};

}  // namespace ccgplan

#endif
