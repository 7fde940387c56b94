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

#ifndef CCGPLAN_RULE_CONFIG_HPP
#define CCGPLAN_RULE_CONFIG_HPP

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "combinators.hpp"
#include "lexicon.hpp"

namespace ccgplan {

/// Contents of a rule file. max_steps stays unset unless the file gives it,
/// in which case the per-sentence default applies.
struct RuleSettings {
    KindSet enabled = RuleConfig::defaults(1).enabled;
    std::vector<Category> raise_targets = RuleConfig::default_raise_targets();
    bool normalize = true;
    std::optional<int> max_steps;

    RuleConfig for_sentence(std::size_t length) const {
        RuleConfig cfg;
        cfg.enabled = enabled;
        cfg.raise_targets = raise_targets;
        cfg.normalize = normalize;
        cfg.max_steps = max_steps.value_or(default_max_steps(length));
        return cfg;
    }
};

namespace detail {

inline std::vector<std::string_view> split_commas(std::string_view s) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        std::size_t c = s.find(',', start);
        auto part = trim(s.substr(start, c == std::string_view::npos ? c : c - start));
        if (!part.empty())
            parts.push_back(part);
        if (c == std::string_view::npos)
            break;
        start = c + 1;
    }
    return parts;
}

}  // namespace detail

inline std::optional<bool> parse_on_off(std::string_view v) {
    if (v == "on" || v == "true" || v == "1")
        return true;
    if (v == "off" || v == "false" || v == "0")
        return false;
    return std::nullopt;
}

/// `key = value` lines with keys rules, raise_targets, normalize, max_steps.
/// Keys left out keep their defaults. All problems are reported in `diags`.
inline RuleSettings parse_rule_settings(std::string_view source, std::vector<Diagnostic>& diags) {
    RuleSettings s;
    auto lines = detail::split_lines(source);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string_view line = detail::trim(lines[i]);
        if (line.empty() || line.front() == '#')
            continue;
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            diags.push_back({i + 1, "expected 'key = value'"});
            continue;
        }
        std::string_view key = detail::trim(line.substr(0, eq));
        std::string_view value = detail::trim(line.substr(eq + 1));
        if (key == "rules") {
            KindSet set;
            for (auto name : detail::split_commas(value)) {
                if (auto k = kind_from_name(name))
                    set.insert(*k);
                else
                    diags.push_back({i + 1, "unknown rule '" + std::string(name) + "'"});
            }
            s.enabled = set;
        } else if (key == "raise_targets") {
            s.raise_targets.clear();
            for (auto text : detail::split_commas(value)) {
                try {
                    s.raise_targets.push_back(parse_category(text));
                } catch (const CategorySyntaxError& e) {
                    diags.push_back({i + 1, "bad raise target '" + std::string(text) + "': " + e.what()});
                }
            }
        } else if (key == "normalize") {
            if (auto b = parse_on_off(value))
                s.normalize = *b;
            else
                diags.push_back({i + 1, "normalize must be on or off"});
        } else if (key == "max_steps") {
            int n = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
            if (ec != std::errc() || ptr != value.data() + value.size() || n < 1)
                diags.push_back({i + 1, "max_steps must be a positive integer"});
            else
                s.max_steps = n;
        } else {
            diags.push_back({i + 1, "unknown key '" + std::string(key) + "'"});
        }
    }
    if (s.enabled.empty())
        diags.push_back({0, "no combinators enabled"});
    else if (s.enabled.any_raise() && s.raise_targets.empty())
        diags.push_back({0, "type raising enabled without raise targets"});
    return s;
}

inline RuleSettings load_rule_settings(std::string_view source) {
    std::vector<Diagnostic> diags;
    RuleSettings s = parse_rule_settings(source, diags);
    if (!diags.empty()) {
        const auto& d = diags.front();
        std::string where = d.line ? "line " + std::to_string(d.line) + ": " : std::string();
        throw InputError(where + d.message, d.line);
    }
    return s;
}

}  // namespace ccgplan

#endif
