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

#ifndef CCGPLAN_NORMAL_FORM_HPP
#define CCGPLAN_NORMAL_FORM_HPP

#include <optional>
#include <span>
#include <string_view>

#include "combinators.hpp"

namespace ccgplan {

/// The normal-form restrictions. Each names the shape of the spurious
/// derivation it rules out.
enum class BanClause {
    None,
    RaiseThenApply,      // X >T then >  (rewrite: X Y\X <), and its mirror
    ComposeThenCompose,  // >B output as left input of >B, and its mirror
    ComposeThenApply,    // >B output as left input of >, and its mirror
    RaiseRestriction,    // only NP may be type-raised
};

constexpr std::string_view clause_name(BanClause c) {
    switch (c) {
    case BanClause::RaiseThenApply:
        return "raise-then-apply";
    case BanClause::ComposeThenCompose:
        return "compose-then-compose";
    case BanClause::ComposeThenApply:
        return "compose-then-apply";
    case BanClause::RaiseRestriction:
        return "raise-restriction";
    default:
        return "none";
    }
}

/// Which clause, if any, forbids applying `kind` to inputs whose last
/// modifying actions were `producers` (nullopt = lexical category).
/// `inputs` are the input categories, needed only for the raise restriction.
inline BanClause ban_clause(CombinatorKind kind, std::span<const std::optional<CombinatorKind>> producers,
                            std::span<const Category> inputs, bool normalize) {
    using K = CombinatorKind;
    if (!normalize)
        return BanClause::None;
    auto left = producers.empty() ? std::nullopt : producers.front();
    auto right = producers.empty() ? std::nullopt : producers.back();
    switch (kind) {
    case K::FwdAppl:
        if (left == K::FwdRaise)
            return BanClause::RaiseThenApply;
        if (left == K::FwdComp)
            return BanClause::ComposeThenApply;
        break;
    case K::BwdAppl:
        if (right == K::BwdRaise)
            return BanClause::RaiseThenApply;
        if (right == K::BwdComp)
            return BanClause::ComposeThenApply;
        break;
    case K::FwdComp:
        if (left == K::FwdComp)
            return BanClause::ComposeThenCompose;
        break;
    case K::BwdComp:
        if (right == K::BwdComp)
            return BanClause::ComposeThenCompose;
        break;
    case K::FwdRaise:
    case K::BwdRaise:
        if (!inputs.empty() && !inputs.front().is_atom("NP"))
            return BanClause::RaiseRestriction;
        break;
    default:
        break;
    }
    return BanClause::None;
}

/// A raised category is never raised again, with or without normalization;
/// otherwise unary closure would not terminate.
inline bool raise_allowed_on(std::optional<CombinatorKind> producer) {
    return !(producer && is_raise(*producer));
}

}  // namespace ccgplan

#endif
