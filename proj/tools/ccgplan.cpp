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

// ccgplan: parse, lint and cross-check CCG derivations.
//
//   ccgplan parse   --lexicon L --words "The dog bit John" [--format ascii|json|dot] [--out DIR]
//   ccgplan parse   --supertags FILE [--cutoffs 0.075,0.03,0.01]
//   ccgplan check   --lexicon L [--rules R]
//   ccgplan compare --lexicon L --words "..." [--oracle-normalize off]
//
// Exit status of parse: 0 strict parse found, 2 best-effort result, 1 error.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ccgplan/driver.hpp"

namespace {

struct InputFlags {
    std::string lexicon, words, supertags, rules, goal = "auto", normalize, format = "ascii", out,
        engine = "plan", cutoffs;
    int max_steps = 0;
};

void add_input_flags(CLI::App* cmd, InputFlags& f) {
    cmd->add_option("--lexicon", f.lexicon, "lexicon file (word<TAB>category per line)");
    cmd->add_option("--words", f.words, "space-separated tokens to parse");
    cmd->add_option("--supertags", f.supertags, "supertagger output, one sentence per line");
    cmd->add_option("--rules", f.rules, "rule configuration file");
    cmd->add_option("--max-steps", f.max_steps, "maximum plan length (default: tokens + 2)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--goal", f.goal, "strict, best-effort or auto")
        ->check(CLI::IsMember({"strict", "best-effort", "auto"}));
    cmd->add_option("--normalize", f.normalize, "normal-form bans on or off")->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--cutoffs", f.cutoffs, "supertag cutoff ladder, comma separated");
}

ccgplan::ParseOptions to_options(const InputFlags& f) {
    ccgplan::ParseOptions o;
    if (!f.lexicon.empty())
        o.lexicon_path = f.lexicon;
    if (!f.words.empty())
        o.words = f.words;
    if (!f.supertags.empty())
        o.supertags_path = f.supertags;
    if (!f.rules.empty())
        o.rules_path = f.rules;
    if (f.max_steps > 0)
        o.max_steps = f.max_steps;
    if (!f.normalize.empty())
        o.normalize = f.normalize == "on";
    o.goal = f.goal == "strict"        ? ccgplan::GoalChoice::Strict
             : f.goal == "best-effort" ? ccgplan::GoalChoice::BestEffort
                                       : ccgplan::GoalChoice::Auto;
    o.format = ccgplan::format_from_name(f.format).value_or(ccgplan::RenderFormat::AsciiDeriv);
    if (!f.out.empty())
        o.out_dir = f.out;
    o.engine = f.engine == "oracle" ? ccgplan::Engine::Oracle : ccgplan::Engine::Plan;
    if (!f.cutoffs.empty()) {
        o.cutoffs.clear();
        std::string token;
        std::istringstream is(f.cutoffs);
        while (std::getline(is, token, ','))
            o.cutoffs.push_back(std::stod(token));
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CCG parsing as planning over abstract sentence representations"};
    app.require_subcommand(1);

    InputFlags parse_flags;
    auto* parse = app.add_subcommand("parse", "enumerate all normal-form derivations");
    add_input_flags(parse, parse_flags);
    parse->add_option("--format", parse_flags.format, "ascii, json or dot")
        ->check(CLI::IsMember({"ascii", "json", "dot"}));
    parse->add_option("--out", parse_flags.out, "write one file per parse into this directory");
    parse->add_option("--engine", parse_flags.engine, "plan or oracle")->check(CLI::IsMember({"plan", "oracle"}));
    bool verbose = false;
    parse->add_flag("-v,--verbose", verbose, "list every parse with its output path");

    std::string check_lexicon, check_rules;
    auto* check = app.add_subcommand("check", "validate lexicon and rule files");
    check->add_option("--lexicon", check_lexicon, "lexicon file");
    check->add_option("--rules", check_rules, "rule configuration file");

    InputFlags compare_flags;
    std::string oracle_normalize;
    auto* compare = app.add_subcommand("compare", "diff plan-engine and chart-oracle parse sets");
    add_input_flags(compare, compare_flags);
    compare->add_option("--oracle-normalize", oracle_normalize, "override normalization for the oracle only")
        ->check(CLI::IsMember({"on", "off"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : ccgplan::kExitError;
    }

    try {
        if (*parse) {
            auto opts = to_options(parse_flags);
            auto report = ccgplan::cmd_parse(opts, std::cout);
            if (verbose)
                for (std::size_t s = 0; s < report.sentences.size(); ++s) {
                    const auto& sr = report.sentences[s];
                    std::cerr << "sentence " << s + 1 << ": " << (sr.strict ? "strict" : "best-effort") << ", "
                              << sr.forests.size() << " parse(s), residue " << sr.residue;
                    if (sr.cutoff)
                        std::cerr << ", cutoff " << *sr.cutoff;
                    std::cerr << '\n';
                    for (const auto& p : sr.output_paths)
                        std::cerr << "  " << p << '\n';
                }
            std::cerr << report.summary() << '\n';
            return report.exit_status();
        }
        if (*check) {
            ccgplan::CheckOptions o;
            if (!check_lexicon.empty())
                o.lexicon_path = check_lexicon;
            if (!check_rules.empty())
                o.rules_path = check_rules;
            return ccgplan::cmd_check(o, std::cout);
        }
        ccgplan::CompareOptions o;
        o.input = to_options(compare_flags);
        if (!oracle_normalize.empty())
            o.oracle_normalize = oracle_normalize == "on";
        return ccgplan::cmd_compare(o, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return ccgplan::kExitError;
    }
}
