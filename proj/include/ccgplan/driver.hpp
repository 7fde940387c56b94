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

#ifndef CCGPLAN_DRIVER_HPP
#define CCGPLAN_DRIVER_HPP

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "chart_oracle.hpp"
#include "lexicon.hpp"
#include "plan_engine.hpp"
#include "render.hpp"
#include "rule_config.hpp"

namespace ccgplan {

enum class GoalChoice { Strict, BestEffort, Auto };
enum class Engine { Plan, Oracle };

inline constexpr int kExitStrict = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitBestEffort = 2;

struct ParseOptions {
    std::optional<std::string> lexicon_path;
    std::optional<std::string> words;
    std::optional<std::string> supertags_path;
    std::optional<std::string> rules_path;
    std::optional<int> max_steps;
    std::optional<bool> normalize;
    GoalChoice goal = GoalChoice::Auto;
    RenderFormat format = RenderFormat::AsciiDeriv;
    std::optional<std::string> out_dir;
    Engine engine = Engine::Plan;
    std::vector<double> cutoffs = {0.075, 0.03, 0.01};
};

struct SentenceReport {
    std::vector<std::string> words;
    bool strict = false;
    std::size_t residue = 0;
    std::optional<double> cutoff;  // supertag cutoff that produced the result
    std::vector<Forest> forests;
    std::vector<std::string> output_paths;
};

struct RunReport {
    std::vector<SentenceReport> sentences;
    double wall_seconds = 0.0;
    std::string error;

    /// "strict" if every sentence parsed strictly, "none" if some sentence
    /// has no parse at all, otherwise "best-effort".
    std::string mode() const {
        std::string m = "strict";
        for (const auto& s : sentences) {
            if (!s.strict && s.forests.empty())
                return "none";
            if (!s.strict)
                m = "best-effort";
        }
        return m;
    }
    std::size_t parse_count() const {
        std::size_t n = 0;
        for (const auto& s : sentences)
            n += s.forests.size();
        return n;
    }
    std::size_t residue() const {
        std::size_t r = 0;
        for (const auto& s : sentences)
            r = std::max(r, s.residue);
        return r;
    }
    int exit_status() const {
        if (!error.empty())
            return kExitError;
        const std::string m = mode();
        if (m == "none")
            return kExitError;
        return m == "strict" ? kExitStrict : kExitBestEffort;
    }
    std::string summary() const {
        std::ostringstream os;
        if (!error.empty()) {
            os << "error: " << error;
            return os.str();
        }
        os << "mode=" << mode() << " sentences=" << sentences.size() << " parses=" << parse_count()
           << " residue=" << residue() << " time=" << wall_seconds << "s";
        return os.str();
    }
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<std::string> split_words(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream is{std::string(text)};
    std::string w;
    while (is >> w)
        out.push_back(w);
    return out;
}

/// Tagged sentences before any supertag cutoff is applied.
struct LoadedInput {
    std::vector<TaggedSentence> sentences;
    bool supertagged = false;
};

inline LoadedInput load_input(const ParseOptions& opt) {
    const bool lexicon_mode = opt.lexicon_path || opt.words;
    if (lexicon_mode == static_cast<bool>(opt.supertags_path))
        throw InputError("give either --lexicon with --words, or --supertags", 0);
    LoadedInput in;
    if (lexicon_mode) {
        if (!opt.lexicon_path || !opt.words)
            throw InputError("--lexicon and --words must be given together", 0);
        Lexicon lex = load_lexicon(read_file(*opt.lexicon_path));
        in.sentences.push_back(tag_with_lexicon(split_words(*opt.words), lex));
    } else {
        in.sentences = parse_supertag_file(read_file(*opt.supertags_path));
        in.supertagged = true;
    }
    return in;
}

inline RuleSettings load_settings(const ParseOptions& opt) {
    RuleSettings s;
    if (opt.rules_path)
        s = load_rule_settings(read_file(*opt.rules_path));
    if (opt.normalize)
        s.normalize = *opt.normalize;
    if (opt.max_steps)
        s.max_steps = *opt.max_steps;
    return s;
}

inline ParseResult run_engine(Engine engine, const TaggedSentence& ts, const RuleConfig& cfg, const ParseGoal& goal) {
    return engine == Engine::Oracle ? chart_parse_all(ts, cfg, goal) : parse_all(ts, cfg, goal);
}

/// Strict first (widening the supertag cutoff step by step), then best
/// effort when the goal allows it.
inline SentenceReport parse_sentence(const TaggedSentence& full, bool supertagged, const RuleSettings& settings,
                                     const ParseOptions& opt) {
    SentenceReport rep;
    rep.words = full.words();
    const RuleConfig cfg = settings.for_sentence(full.size());
    if (auto e = cfg.validate(); !e.empty())
        throw InputError(e, 0);

    std::vector<std::optional<double>> ladder;
    if (supertagged) {
        if (opt.cutoffs.empty())
            throw InputError("empty cutoff ladder", 0);
        for (double c : opt.cutoffs)
            ladder.push_back(c);
    } else {
        ladder.push_back(std::nullopt);
    }
    auto tagged = [&](const std::optional<double>& c) { return c ? apply_cutoff(full, *c) : full; };

    if (opt.goal != GoalChoice::BestEffort) {
        for (const auto& c : ladder) {
            ParseResult r = run_engine(opt.engine, tagged(c), cfg, ParseGoal::strict());
            if (!r.empty()) {
                rep.strict = true;
                rep.residue = 1;
                rep.cutoff = c;
                rep.forests = std::move(r.forests);
                return rep;
            }
        }
        if (opt.goal == GoalChoice::Strict)
            return rep;
    }
    const auto& widest = ladder.back();
    ParseResult r = run_engine(opt.engine, tagged(widest), cfg, ParseGoal::best_effort());
    rep.residue = r.residue;
    rep.cutoff = widest;
    rep.forests = std::move(r.forests);
    return rep;
}

/// Renders every parse, to files under out_dir when set, else to `out`.
inline void emit(RunReport& report, const ParseOptions& opt, std::ostream& out) {
    namespace fs = std::filesystem;
    if (opt.out_dir)
        fs::create_directories(*opt.out_dir);
    for (std::size_t si = 0; si < report.sentences.size(); ++si) {
        auto& s = report.sentences[si];
        for (std::size_t pi = 0; pi < s.forests.size(); ++pi) {
            std::string doc = render(s.forests[pi], opt.format);
            if (opt.out_dir) {
                fs::path p = fs::path(*opt.out_dir) /
                             ("sentence" + std::to_string(si + 1) + "_parse" + std::to_string(pi + 1) +
                              std::string(format_extension(opt.format)));
                std::ofstream f(p, std::ios::binary);
                if (!f)
                    throw InputError("cannot write '" + p.string() + "'", 0);
                f << doc;
                s.output_paths.push_back(p.string());
            } else {
                if (opt.format == RenderFormat::AsciiDeriv)
                    out << "# sentence " << si + 1 << ", parse " << pi + 1 << "/" << s.forests.size()
                        << (s.strict ? "" : " (best effort, residue " + std::to_string(s.residue) + ")") << "\n";
                out << doc;
                if (opt.format == RenderFormat::AsciiDeriv)
                    out << "\n";
            }
        }
    }
}

inline RunReport cmd_parse(const ParseOptions& opt, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport report;
    try {
        LoadedInput in = load_input(opt);
        RuleSettings settings = load_settings(opt);
        for (const auto& ts : in.sentences)
            report.sentences.push_back(parse_sentence(ts, in.supertagged, settings, opt));
        emit(report, opt, out);
    } catch (const std::exception& e) {
        report.error = e.what();
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

struct CheckOptions {
    std::optional<std::string> lexicon_path;
    std::optional<std::string> rules_path;
};

/// Lints lexicon and rule files; prints `path:line: message` per problem.
inline int cmd_check(const CheckOptions& opt, std::ostream& out) {
    if (!opt.lexicon_path && !opt.rules_path) {
        out << "error: nothing to check (give --lexicon and/or --rules)\n";
        return kExitError;
    }
    bool clean = true;
    auto report = [&](const std::string& path, const std::vector<Diagnostic>& diags) {
        for (const auto& d : diags) {
            out << path << ':' << d.line << ": " << d.message << '\n';
            clean = false;
        }
    };
    try {
        if (opt.lexicon_path) {
            std::vector<Diagnostic> diags;
            parse_lexicon(read_file(*opt.lexicon_path), diags);
            report(*opt.lexicon_path, diags);
        }
        if (opt.rules_path) {
            std::vector<Diagnostic> diags;
            parse_rule_settings(read_file(*opt.rules_path), diags);
            report(*opt.rules_path, diags);
        }
    } catch (const std::exception& e) {
        out << "error: " << e.what() << '\n';
        return kExitError;
    }
    if (clean)
        out << "ok\n";
    return clean ? kExitStrict : kExitError;
}

struct CompareOptions {
    ParseOptions input;
    std::optional<bool> oracle_normalize;
};

/// Runs the plan engine and the chart oracle on the same input and prints
/// the symmetric difference of their parse sets. 0 iff identical.
inline int cmd_compare(const CompareOptions& opt, std::ostream& out) {
    try {
        LoadedInput in = load_input(opt.input);
        RuleSettings settings = load_settings(opt.input);
        const ParseGoal goal = opt.input.goal == GoalChoice::BestEffort ? ParseGoal::best_effort() : ParseGoal::strict();
        bool same = true;
        for (std::size_t si = 0; si < in.sentences.size(); ++si) {
            TaggedSentence ts = in.sentences[si];
            if (in.supertagged)
                ts = apply_cutoff(ts, opt.input.cutoffs.empty() ? 0.075 : opt.input.cutoffs.front());
            RuleConfig plan_cfg = settings.for_sentence(ts.size());
            RuleConfig oracle_cfg = plan_cfg;
            if (opt.oracle_normalize)
                oracle_cfg.normalize = *opt.oracle_normalize;
            ParseResult a = parse_all(ts, plan_cfg, goal);
            ParseResult b = chart_parse_all(ts, oracle_cfg, goal);
            std::map<std::string, Forest> ka, kb;
            for (const auto& f : a.forests)
                ka.emplace(forest_key(f), f);
            for (const auto& f : b.forests)
                kb.emplace(forest_key(f), f);
            std::size_t diff = 0;
            for (const auto& [k, _] : ka)
                if (!kb.count(k)) {
                    out << "sentence " << si + 1 << " only in plan:   " << k << '\n';
                    ++diff;
                }
            for (const auto& [k, _] : kb)
                if (!ka.count(k)) {
                    out << "sentence " << si + 1 << " only in oracle: " << k << '\n';
                    ++diff;
                }
            if (!goal.is_strict() && a.residue != b.residue) {
                out << "sentence " << si + 1 << " residue differs: plan " << a.residue << ", oracle " << b.residue
                    << '\n';
                ++diff;
            }
            out << "sentence " << si + 1 << ": plan " << a.forests.size() << ", oracle " << b.forests.size()
                << (diff ? ", MISMATCH" : ", identical") << '\n';
            same = same && diff == 0;
        }
        return same ? kExitStrict : kExitError;
    } catch (const std::exception& e) {
        out << "error: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace ccgplan

#endif
