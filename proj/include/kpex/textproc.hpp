// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 kpex contributors

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unistd.h>
#include <unordered_map>
#include <vector>

#include "kpex/errors.hpp"
#include "kpex/lexicon.hpp"
#include "kpex/porter.hpp"

namespace kpex {

struct Token {
    std::string surface;      // nonempty, no whitespace
    std::size_t start_char;   // offset of surface in the source text
    std::size_t word_index;   // 0-based position in the token sequence
};

struct TaggedToken {
    Token token;
    PosTag tag;
};

struct Sentence {
    std::string text;
    std::size_t index;       // 0-based position in the source
    std::size_t start_char;  // trimmed extent in the source
    std::size_t end_char;    // exclusive
};

// Half-open range of word indices.
struct TokenSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
    bool operator==(const TokenSpan&) const = default;
};

struct CandidatePhrase {
    std::string surface;  // earliest occurrence, token surfaces joined with ' '
    std::string key;      // lowercased, per-word stemmed, single-spaced
    TokenSpan token_span; // earliest occurrence
    std::size_t first_word_index = 0;
    std::vector<TokenSpan> occurrence_spans;  // all occurrences of this key
};

namespace textproc_detail {

inline bool is_ascii_punct(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return u < 128 && std::ispunct(u);
}

inline bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

inline bool is_upper(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return u < 128 && std::isupper(u);
}

inline bool is_alpha(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return u < 128 && std::isalpha(u);
}

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// Does text[0, dot_pos] end with a listed abbreviation (word-aligned)?
inline bool ends_with_abbreviation(std::string_view text, std::size_t dot_pos,
                                   const std::vector<std::string>& abbrevs) {
    std::string_view head = text.substr(0, dot_pos + 1);
    for (const auto& a : abbrevs) {
        if (head.size() < a.size() || !head.ends_with(a)) continue;
        if (head.size() == a.size()) return true;
        char before = head[head.size() - a.size() - 1];
        if (!std::isalnum(static_cast<unsigned char>(before))) return true;
    }
    return false;
}

}  // namespace textproc_detail

/// Splits on '.', '?' or '!' followed by whitespace+uppercase or end of
/// text, except after a listed abbreviation. Sentences are trimmed and
/// never empty; char spans cover the trimmed extents in order.
inline std::vector<Sentence> split_sentences(
    std::string_view text,
    const std::vector<std::string>& abbrevs = builtin_abbreviations()) {
    using namespace textproc_detail;
    std::vector<Sentence> out;
    std::size_t n = text.size();
    std::size_t seg_start = 0;

    auto emit = [&](std::size_t from, std::size_t to) {
        while (from < to && is_space(text[from])) ++from;
        while (to > from && is_space(text[to - 1])) --to;
        if (from >= to) return;
        out.push_back(Sentence{std::string(text.substr(from, to - from)), out.size(), from, to});
    };

    for (std::size_t i = 0; i < n; ++i) {
        char c = text[i];
        if (c != '.' && c != '?' && c != '!') continue;
        std::size_t j = i + 1;
        while (j < n && is_space(text[j])) ++j;
        bool at_end = (j == n);
        bool upper_next = !at_end && j > i + 1 && is_upper(text[j]);
        if (!at_end && !upper_next) continue;
        if (c == '.' && ends_with_abbreviation(text, i, abbrevs)) continue;
        emit(seg_start, i + 1);
        seg_start = i + 1;
    }
    emit(seg_start, n);
    return out;
}

/// Whitespace split, then leading/trailing ASCII punctuation stripped
/// (inner characters, including hyphens, survive). Case is preserved.
inline std::vector<Token> tokenize(std::string_view text) {
    using namespace textproc_detail;
    std::vector<Token> out;
    std::size_t n = text.size();
    std::size_t i = 0;
    while (i < n) {
        while (i < n && is_space(text[i])) ++i;
        if (i >= n) break;
        std::size_t e = i;
        while (e < n && !is_space(text[e])) ++e;
        std::size_t b2 = i, e2 = e;
        while (b2 < e2 && is_ascii_punct(text[b2])) ++b2;
        while (e2 > b2 && is_ascii_punct(text[e2 - 1])) --e2;
        if (b2 < e2) {
            out.push_back(Token{std::string(text.substr(b2, e2 - b2)), b2, out.size()});
        }
        i = e;
    }
    return out;
}

// Tagging interface; the default implementation is the layered rule tagger,
// an external tagger can be swapped in via SubprocessTagger below.
class Tagger {
public:
    virtual ~Tagger() = default;
    virtual std::vector<TaggedToken> tag(const std::vector<Token>& tokens) const = 0;
};

// Layered rules: lexicon, then capitalization, then suffix heuristics with
// plural backoff, then a noun-biased default (recall-oriented candidates).
class RuleTagger : public Tagger {
public:
    explicit RuleTagger(const Lexicon& lex = Lexicon::builtin()) : lex_(&lex) {}

    std::vector<TaggedToken> tag(const std::vector<Token>& tokens) const override {
        std::vector<TaggedToken> out;
        out.reserve(tokens.size());
        for (const auto& t : tokens) out.push_back(TaggedToken{t, tag_word(t.surface)});
        return out;
    }

    PosTag tag_word(const std::string& surface) const {
        using namespace textproc_detail;
        bool any_alpha = false;
        for (char c : surface)
            if (is_alpha(c) || static_cast<unsigned char>(c) >= 128) any_alpha = true;
        if (!any_alpha) return PosTag::Other;  // numbers, symbol runs

        std::string lower = to_lower(surface);
        if (auto t = lookup(lower)) return *t;

        if (surface.find('-') == std::string::npos) {
            if (auto t = case_heuristic(surface)) return *t;
            if (auto t = suffix_heuristic(lower, true)) return *t;
        } else {
            // Unresolved hyphenated compound: classify by its last component.
            auto pos = lower.find_last_of('-');
            std::string tail = lower.substr(pos + 1);
            if (!tail.empty()) {
                if (auto t = lookup(tail)) return *t;
                if (auto t = suffix_heuristic(tail, true)) return *t;
            }
        }
        return PosTag::Noun;
    }

private:
    std::optional<PosTag> lookup(const std::string& lower) const {
        const Lexicon::Entry* e = lex_->find(lower);
        if (!e) return std::nullopt;
        switch (*e) {
            case Lexicon::Entry::Adj: return PosTag::Adj;
            case Lexicon::Entry::Noun: return PosTag::Noun;
            case Lexicon::Entry::Other:
            case Lexicon::Entry::Verb: return PosTag::Other;
        }
        return std::nullopt;
    }

    std::optional<PosTag> case_heuristic(const std::string& surface) const {
        using namespace textproc_detail;
        std::size_t alpha = 0, upper = 0;
        bool inner_upper = false;
        for (std::size_t i = 0; i < surface.size(); ++i) {
            if (!is_alpha(surface[i])) continue;
            ++alpha;
            if (is_upper(surface[i])) {
                ++upper;
                if (alpha > 1) inner_upper = true;
            }
        }
        if (alpha >= 2 && upper == alpha) return PosTag::Noun;  // acronyms
        if (inner_upper) return PosTag::Noun;                   // PageRank, tf-idf variants
        return std::nullopt;
    }

    // allow_plural guards the single level of -s backoff recursion.
    std::optional<PosTag> suffix_heuristic(const std::string& lower, bool allow_plural) const {
        static const char* kAdjSuffixes[] = {"al", "ive", "ous", "ic",
                                             "able", "ible", "ful", "less"};
        static const char* kNounSuffixes[] = {"tion", "ment", "ness", "ity",
                                              "ism", "er", "or"};
        auto ends = [&](std::string_view suf) {
            return lower.size() >= suf.size() + 3 &&
                   std::string_view(lower).ends_with(suf);
        };
        for (auto* s : kAdjSuffixes)
            if (ends(s)) return PosTag::Adj;
        for (auto* s : kNounSuffixes)
            if (ends(s)) return PosTag::Noun;
        if (ends("ing")) {
            std::string base = lower.substr(0, lower.size() - 3);
            if (lex_->is_verb(base) || lex_->is_verb(base + "e") ||
                (base.size() >= 2 && base[base.size() - 1] == base[base.size() - 2] &&
                 lex_->is_verb(base.substr(0, base.size() - 1))))
                return PosTag::Other;
            return PosTag::Noun;
        }
        if (allow_plural && lower.size() >= 4 && lower.back() == 's' &&
            lower[lower.size() - 2] != 's') {
            std::vector<std::string> singulars;
            singulars.push_back(lower.substr(0, lower.size() - 1));
            if (lower.ends_with("ies"))
                singulars.push_back(lower.substr(0, lower.size() - 3) + "y");
            else if (lower.ends_with("ses") || lower.ends_with("xes") ||
                     lower.ends_with("zes") || lower.ends_with("ches") ||
                     lower.ends_with("shes"))
                singulars.push_back(lower.substr(0, lower.size() - 2));
            for (const auto& s : singulars) {
                if (auto t = lookup(s)) return *t;
                if (auto t = suffix_heuristic(s, false)) return *t;
            }
        }
        return std::nullopt;
    }

    const Lexicon* lex_;
};

// External tagger adapter: runs `command` with one token per input line and
// expects one tag per output line; tags are mapped to ADJ/NOUN/OTHER by a
// user-supplied mapping (unmapped tags become OTHER).
class SubprocessTagger : public Tagger {
public:
    SubprocessTagger(std::string command, std::map<std::string, PosTag> mapping)
        : command_(std::move(command)), mapping_(std::move(mapping)) {}

    static std::map<std::string, PosTag> load_mapping(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw Error(ErrorKind::Io, "cannot open tag mapping file: " + path);
        std::map<std::string, PosTag> mapping;
        std::string from, to;
        while (in >> from >> to) {
            if (to == "ADJ") mapping[from] = PosTag::Adj;
            else if (to == "NOUN") mapping[from] = PosTag::Noun;
            else if (to == "OTHER") mapping[from] = PosTag::Other;
            else
                throw Error(ErrorKind::Validation,
                            path + ": unknown mapped tag '" + to + "'");
        }
        return mapping;
    }

    std::vector<TaggedToken> tag(const std::vector<Token>& tokens) const override {
        namespace fs = std::filesystem;
        fs::path dir = fs::temp_directory_path();
        fs::path in_path = dir / ("kpex_tagger_in_" + std::to_string(::getpid()) + ".txt");
        fs::path out_path = dir / ("kpex_tagger_out_" + std::to_string(::getpid()) + ".txt");
        {
            std::ofstream out(in_path);
            for (const auto& t : tokens) out << t.surface << "\n";
        }
        std::string cmd = command_ + " < " + in_path.string() + " > " + out_path.string();
        int rc = std::system(cmd.c_str());
        if (rc != 0) {
            std::error_code ec;
            fs::remove(in_path, ec);
            fs::remove(out_path, ec);
            throw Error(ErrorKind::Provider,
                        "external tagger failed (exit " + std::to_string(rc) + "): " + command_);
        }
        std::vector<std::string> lines;
        {
            std::ifstream in(out_path);
            std::string line;
            while (std::getline(in, line)) {
                while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                    line.pop_back();
                lines.push_back(line);
            }
        }
        std::error_code ec;
        fs::remove(in_path, ec);
        fs::remove(out_path, ec);
        if (lines.size() != tokens.size())
            throw Error(ErrorKind::Provider,
                        "external tagger returned " + std::to_string(lines.size()) +
                            " tags for " + std::to_string(tokens.size()) + " tokens");
        std::vector<TaggedToken> out;
        out.reserve(tokens.size());
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            auto it = mapping_.find(lines[i]);
            PosTag t = it == mapping_.end() ? PosTag::Other : it->second;
            out.push_back(TaggedToken{tokens[i], t});
        }
        return out;
    }

private:
    std::string command_;
    std::map<std::string, PosTag> mapping_;
};

inline std::vector<TaggedToken> pos_tag(const std::vector<Token>& tokens,
                                        const Lexicon& lex = Lexicon::builtin()) {
    return RuleTagger(lex).tag(tokens);
}

/// Porter stem of the lowercased word.
inline std::string stem(std::string_view word) { return porter_stem(word); }

/// Lowercase, split on whitespace and hyphens, stem each word, rejoin with
/// single spaces. Matching against gold keywords happens in this space.
inline std::string normalize_phrase(std::string_view phrase) {
    using namespace textproc_detail;
    std::string out;
    std::size_t i = 0, n = phrase.size();
    bool any = false;
    while (i < n) {
        while (i < n && (is_space(phrase[i]) || phrase[i] == '-')) ++i;
        if (i >= n) break;
        std::size_t e = i;
        while (e < n && !is_space(phrase[e]) && phrase[e] != '-') ++e;
        std::size_t b2 = i, e2 = e;
        while (b2 < e2 && is_ascii_punct(phrase[b2])) ++b2;
        while (e2 > b2 && is_ascii_punct(phrase[e2 - 1])) --e2;
        if (b2 < e2) {
            if (any) out.push_back(' ');
            out += porter_stem(phrase.substr(b2, e2 - b2));
            any = true;
        }
        i = e;
    }
    if (!any) throw Error(ErrorKind::Validation, "normalize_phrase: empty phrase");
    return out;
}

struct CandidateOptions {
    std::size_t max_phrase_len = 5;
    const Tagger* tagger = nullptr;  // defaults to the builtin rule tagger
};

/// Maximal ADJ*NOUN+ runs over the tagged token stream; runs never cross
/// clause punctuation (. ? ! ; : ,) between tokens; runs longer than
/// max_phrase_len keep the trailing window (head noun preserved).
/// Occurrences sharing a normalized key merge into one candidate; output is
/// ordered by first occurrence.
inline std::vector<CandidatePhrase> extract_candidates(std::string_view text,
                                                       const CandidateOptions& opts = {}) {
    static const RuleTagger default_tagger;
    const Tagger& tagger = opts.tagger ? *opts.tagger : default_tagger;

    std::vector<Token> tokens = tokenize(text);
    std::vector<TaggedToken> tagged = tagger.tag(tokens);
    std::size_t n = tagged.size();

    // chain_ok[i]: token i may chain to token i+1.
    std::vector<bool> chain_ok(n > 0 ? n - 1 : 0, true);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::size_t gap_begin = tokens[i].start_char + tokens[i].surface.size();
        std::size_t gap_end = tokens[i + 1].start_char;
        for (std::size_t p = gap_begin; p < gap_end; ++p) {
            char c = text[p];
            if (c == '.' || c == '?' || c == '!' || c == ';' || c == ':' || c == ',') {
                chain_ok[i] = false;
                break;
            }
        }
    }

    std::vector<TokenSpan> runs;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && tagged[j].tag == PosTag::Adj && (j == i || chain_ok[j - 1])) ++j;
        std::size_t k = j;
        while (k < n && tagged[k].tag == PosTag::Noun && (k == i || chain_ok[k - 1])) ++k;
        if (k > j) {
            std::size_t begin = i;
            if (k - begin > opts.max_phrase_len) begin = k - opts.max_phrase_len;
            runs.push_back(TokenSpan{begin, k});
            i = k;
        } else {
            ++i;
        }
    }

    std::vector<CandidatePhrase> out;
    std::unordered_map<std::string, std::size_t> by_key;
    for (const auto& span : runs) {
        std::string surface;
        for (std::size_t t = span.begin; t < span.end; ++t) {
            if (t > span.begin) surface.push_back(' ');
            surface += tokens[t].surface;
        }
        std::string key = normalize_phrase(surface);
        auto it = by_key.find(key);
        if (it == by_key.end()) {
            by_key.emplace(key, out.size());
            out.push_back(CandidatePhrase{std::move(surface), std::move(key), span,
                                          span.begin, {span}});
        } else {
            out[it->second].occurrence_spans.push_back(span);
        }
    }
    // runs are found left to right, so out is already ordered by first
    // occurrence; keep the invariant explicit anyway.
    std::stable_sort(out.begin(), out.end(),
                     [](const CandidatePhrase& a, const CandidatePhrase& b) {
                         return a.first_word_index < b.first_word_index;
                     });
    return out;
}

}  // namespace kpex
