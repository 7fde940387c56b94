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

#ifndef CCGPLAN_LEXICON_HPP
#define CCGPLAN_LEXICON_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "asr.hpp"
#include "category.hpp"

namespace ccgplan {

/// Error in a lexicon, supertag or rule file. `line` is 1-based (0 if not
/// line-specific); `token` is a 1-based token index for supertag records.
class InputError : public std::runtime_error {
public:
    InputError(const std::string& what, std::size_t line, std::size_t token = 0)
        : std::runtime_error(what), line_(line), token_(token) {}
    std::size_t line() const { return line_; }
    std::size_t token() const { return token_; }

private:
    std::size_t line_;
    std::size_t token_;
};

struct Diagnostic {
    std::size_t line;
    std::string message;
};

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size())
                lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    for (auto& l : lines)
        if (!l.empty() && l.back() == '\r')
            l.remove_suffix(1);
    return lines;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

}  // namespace detail

class Lexicon {
public:
    /// Adds (word, cat); duplicates collapse. Categories keep first-seen order.
    void add(const std::string& word, const Category& cat) {
        auto& cats = entries_[word];
        if (std::find(cats.begin(), cats.end(), cat) == cats.end())
            cats.push_back(cat);
    }

    const std::vector<Category>* find(const std::string& word) const {
        auto it = entries_.find(word);
        return it == entries_.end() ? nullptr : &it->second;
    }

    std::size_t size() const { return entries_.size(); }
    const std::map<std::string, std::vector<Category>>& entries() const { return entries_; }

private:
    std::map<std::string, std::vector<Category>> entries_;
};

/// Parses a lexicon file and reports every malformed line instead of
/// stopping at the first.
inline Lexicon parse_lexicon(std::string_view source, std::vector<Diagnostic>& diags) {
    Lexicon lex;
    auto lines = detail::split_lines(source);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string_view line = lines[i];
        std::string_view content = detail::trim(line);
        if (content.empty() || content.front() == '#')
            continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos) {
            diags.push_back({i + 1, "missing tab between word and category"});
            continue;
        }
        std::string_view word = detail::trim(line.substr(0, tab));
        std::string_view cat_text = detail::trim(line.substr(tab + 1));
        if (word.empty()) {
            diags.push_back({i + 1, "empty word"});
            continue;
        }
        try {
            lex.add(std::string(word), parse_category(cat_text));
        } catch (const CategorySyntaxError& e) {
            diags.push_back({i + 1, std::string("bad category '") + std::string(cat_text) + "': " + e.what()});
        }
    }
    if (lex.size() == 0 && diags.empty())
        diags.push_back({0, "lexicon has no entries"});
    return lex;
}

/// Format: one `word<TAB>category` per line; `#` comments and blank lines skipped.
inline Lexicon load_lexicon(std::string_view source) {
    std::vector<Diagnostic> diags;
    Lexicon lex = parse_lexicon(source, diags);
    if (!diags.empty()) {
        const auto& d = diags.front();
        std::string where = d.line ? "line " + std::to_string(d.line) + ": " : std::string();
        throw InputError(where + d.message, d.line);
    }
    return lex;
}

struct Candidate {
    Category category;
    std::optional<double> weight;
};

struct Token {
    std::string word;
    std::string pos_tag;
    std::vector<Candidate> candidates;
};

struct TaggedSentence {
    std::vector<Token> tokens;

    std::size_t size() const { return tokens.size(); }
    std::vector<std::string> words() const {
        std::vector<std::string> w;
        for (const auto& t : tokens)
            w.push_back(t.word);
        return w;
    }
};

inline TaggedSentence tag_with_lexicon(const std::vector<std::string>& words, const Lexicon& lex) {
    if (words.empty())
        throw InputError("sentence has no tokens", 0);
    TaggedSentence ts;
    for (std::size_t i = 0; i < words.size(); ++i) {
        const auto* cats = lex.find(words[i]);
        if (!cats)
            throw InputError("word '" + words[i] + "' at position " + std::to_string(i + 1) +
                                 " is not in the lexicon",
                             0, i + 1);
        Token tok{words[i], {}, {}};
        for (const auto& c : *cats)
            tok.candidates.push_back({c, std::nullopt});
        ts.tokens.push_back(std::move(tok));
    }
    return ts;
}

/// Parses one supertagged sentence without filtering. Candidates come back
/// in descending weight order (stable for ties).
inline TaggedSentence parse_supertag_line(std::string_view line) {
    TaggedSentence ts;
    line = detail::trim(line);
    std::size_t index = 0;
    std::size_t start = 0;
    while (start <= line.size()) {
        std::size_t sp = line.find(' ', start);
        std::string_view rec = line.substr(start, sp == std::string_view::npos ? sp : sp - start);
        start = sp == std::string_view::npos ? line.size() + 1 : sp + 1;
        if (rec.empty())
            continue;
        ++index;
        auto fail = [index](const std::string& msg) {
            return InputError("token " + std::to_string(index) + ": " + msg, 0, index);
        };

        std::vector<std::string_view> fields;
        std::size_t fs = 0;
        for (;;) {
            std::size_t bar = rec.find('|', fs);
            fields.push_back(rec.substr(fs, bar == std::string_view::npos ? bar : bar - fs));
            if (bar == std::string_view::npos)
                break;
            fs = bar + 1;
        }
        if (fields.size() < 3)
            throw fail("expected word|POS|cat:prob");
        if (fields[0].empty())
            throw fail("empty word");

        Token tok{std::string(fields[0]), std::string(fields[1]), {}};
        for (std::size_t f = 2; f < fields.size(); ++f) {
            std::string_view entry = fields[f];
            std::size_t colon = entry.rfind(':');
            if (colon == std::string_view::npos)
                throw fail("candidate '" + std::string(entry) + "' lacks ':prob'");
            std::string_view prob_text = entry.substr(colon + 1);
            double prob = 0;
            auto [ptr, ec] = std::from_chars(prob_text.data(), prob_text.data() + prob_text.size(), prob);
            if (ec != std::errc() || ptr != prob_text.data() + prob_text.size() || prob < 0.0 || prob > 1.0)
                throw fail("bad probability '" + std::string(prob_text) + "'");
            try {
                tok.candidates.push_back({parse_category(entry.substr(0, colon)), prob});
            } catch (const CategorySyntaxError& e) {
                throw fail(std::string("bad category: ") + e.what());
            }
        }
        if (tok.candidates.empty())
            throw fail("no candidates");
        std::stable_sort(tok.candidates.begin(), tok.candidates.end(),
                         [](const Candidate& a, const Candidate& b) { return *a.weight > *b.weight; });
        ts.tokens.push_back(std::move(tok));
    }
    if (ts.tokens.empty())
        throw InputError("sentence has no tokens", 0);
    return ts;
}

/// Keeps candidates whose weight is at least `cutoff` times the token's best.
inline TaggedSentence apply_cutoff(const TaggedSentence& ts, double cutoff) {
    if (!(cutoff > 0.0 && cutoff <= 1.0))
        throw std::invalid_argument("supertag cutoff must lie in (0, 1]");
    TaggedSentence out;
    for (std::size_t i = 0; i < ts.tokens.size(); ++i) {
        const Token& tok = ts.tokens[i];
        double best = 0.0;
        for (const auto& c : tok.candidates)
            best = std::max(best, c.weight.value_or(1.0));
        Token kept{tok.word, tok.pos_tag, {}};
        for (const auto& c : tok.candidates)
            if (c.weight.value_or(1.0) >= cutoff * best)
                kept.candidates.push_back(c);
        if (kept.candidates.empty())
            throw InputError("token " + std::to_string(i + 1) + " has no candidates", 0, i + 1);
        out.tokens.push_back(std::move(kept));
    }
    return out;
}

inline TaggedSentence ingest_supertags(std::string_view source, double cutoff) {
    return apply_cutoff(parse_supertag_line(source), cutoff);
}

/// One sentence per non-blank line, unfiltered.
inline std::vector<TaggedSentence> parse_supertag_file(std::string_view source) {
    std::vector<TaggedSentence> out;
    auto lines = detail::split_lines(source);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (detail::trim(lines[i]).empty())
            continue;
        try {
            out.push_back(parse_supertag_line(lines[i]));
        } catch (const InputError& e) {
            throw InputError("line " + std::to_string(i + 1) + ", " + e.what(), i + 1, e.token());
        }
    }
    if (out.empty())
        throw InputError("supertag file has no sentences", 0);
    return out;
}

/// Lazy Cartesian product of per-token candidates, each combination as an
/// initial ASR. Iterates like an odometer with the last token fastest, so
/// the first ASR picks every token's first (highest-weight) candidate.
class InitialAsrs {
public:
    explicit InitialAsrs(const TaggedSentence& ts) : ts_(&ts) {}

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Asr;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = Asr;

        iterator() = default;
        iterator(const TaggedSentence* ts, bool end) : ts_(ts), done_(end) {
            if (!end)
                index_.assign(ts->tokens.size(), 0);
        }

        Asr operator*() const {
            std::vector<Category> cats;
            cats.reserve(index_.size());
            for (std::size_t i = 0; i < index_.size(); ++i)
                cats.push_back(ts_->tokens[i].candidates[index_[i]].category);
            return Asr(cats);
        }

        const std::vector<std::size_t>& choice() const { return index_; }

        iterator& operator++() {
            for (std::size_t i = index_.size(); i-- > 0;) {
                if (++index_[i] < ts_->tokens[i].candidates.size())
                    return *this;
                index_[i] = 0;
            }
            done_ = true;
            return *this;
        }
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& a, const iterator& b) {
            if (a.done_ || b.done_)
                return a.done_ == b.done_;
            return a.index_ == b.index_;
        }

    private:
        const TaggedSentence* ts_ = nullptr;
        std::vector<std::size_t> index_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(ts_, ts_->tokens.empty()); }
    iterator end() const { return iterator(ts_, true); }

    std::size_t count() const {
        std::size_t n = ts_->tokens.empty() ? 0 : 1;
        for (const auto& t : ts_->tokens)
            n *= t.candidates.size();
        return n;
    }

private:
    const TaggedSentence* ts_;
};

inline InitialAsrs initial_asrs(const TaggedSentence& ts) { return InitialAsrs(ts); }

}  // namespace ccgplan

#endif
