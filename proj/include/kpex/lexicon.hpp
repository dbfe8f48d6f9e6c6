// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 kpex contributors

#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kpex/default_lexicon.hpp"
#include "kpex/errors.hpp"

namespace kpex {

enum class PosTag { Adj, Noun, Other };

inline const char* pos_tag_name(PosTag t) {
    switch (t) {
        case PosTag::Adj: return "ADJ";
        case PosTag::Noun: return "NOUN";
        case PosTag::Other: return "OTHER";
    }
    return "OTHER";
}

// Word lists backing the rule tagger. Entries are one "word TAG" per line,
// TAG in {ADJ, NOUN, OTHER, VERB}. OTHER holds the closed class; VERB
// entries also tag as OTHER but additionally feed the -ing morphology check.
class Lexicon {
public:
    enum class Entry { Adj, Noun, Other, Verb };

    void add(std::string word, Entry e) { entries_[std::move(word)] = e; }

    void load_stream(std::istream& in, const std::string& origin) {
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            std::string word, tag;
            if (!(ls >> word >> tag)) {
                throw Error(ErrorKind::Validation,
                            origin + ":" + std::to_string(lineno) + ": malformed lexicon line");
            }
            Entry e;
            if (tag == "ADJ") e = Entry::Adj;
            else if (tag == "NOUN") e = Entry::Noun;
            else if (tag == "OTHER") e = Entry::Other;
            else if (tag == "VERB") e = Entry::Verb;
            else
                throw Error(ErrorKind::Validation,
                            origin + ":" + std::to_string(lineno) + ": unknown tag '" + tag + "'");
            add(word, e);
        }
    }

    void load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw Error(ErrorKind::Io, "cannot open lexicon file: " + path);
        load_stream(in, path);
    }

    const Entry* find(const std::string& lower_word) const {
        auto it = entries_.find(lower_word);
        return it == entries_.end() ? nullptr : &it->second;
    }

    bool is_verb(const std::string& lower_word) const {
        const Entry* e = find(lower_word);
        return e && *e == Entry::Verb;
    }

    std::size_t size() const { return entries_.size(); }

    static Lexicon from_string(std::string_view text, const std::string& origin) {
        Lexicon lex;
        std::istringstream in{std::string(text)};
        lex.load_stream(in, origin);
        return lex;
    }

    static const Lexicon& builtin() {
        static const Lexicon lex =
            from_string(builtin::kDefaultLexicon, "<builtin lexicon>");
        return lex;
    }

private:
    std::unordered_map<std::string, Entry> entries_;
};

inline std::vector<std::string> parse_abbreviations(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty() && line[0] != '#') out.push_back(line);
    }
    return out;
}

inline std::vector<std::string> load_abbreviations(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open abbreviation file: " + path);
    return parse_abbreviations(in);
}

inline const std::vector<std::string>& builtin_abbreviations() {
    static const std::vector<std::string> abbrevs = [] {
        std::istringstream in{std::string(builtin::kDefaultAbbreviations)};
        return parse_abbreviations(in);
    }();
    return abbrevs;
}

}  // namespace kpex
