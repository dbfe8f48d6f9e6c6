// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 kpex contributors

#pragma once

#include <array>
#include <cctype>
#include <string>
#include <string_view>

#include "kpex/errors.hpp"

namespace kpex {
namespace porter_detail {

inline bool is_consonant(std::string_view w, std::size_t i) {
    char c = w[i];
    if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return false;
    if (c == 'y') return i == 0 || !is_consonant(w, i - 1);
    return true;
}

// m in the [C](VC)^m[V] decomposition.
inline int measure(std::string_view stem) {
    int m = 0;
    bool prev_cons = false;
    bool seen_vowel = false;
    for (std::size_t i = 0; i < stem.size(); ++i) {
        bool cons = is_consonant(stem, i);
        if (cons && seen_vowel && !prev_cons) ++m;
        if (!cons) seen_vowel = true;
        prev_cons = cons;
    }
    return m;
}

inline bool has_vowel(std::string_view stem) {
    for (std::size_t i = 0; i < stem.size(); ++i)
        if (!is_consonant(stem, i)) return true;
    return false;
}

inline bool ends_double_consonant(std::string_view stem) {
    auto n = stem.size();
    return n >= 2 && stem[n - 1] == stem[n - 2] && is_consonant(stem, n - 1) &&
           is_consonant(stem, n - 2);
}

// *o: stem ends cvc where the final c is not w, x or y.
inline bool ends_cvc(std::string_view stem) {
    auto n = stem.size();
    if (n < 3) return false;
    if (!is_consonant(stem, n - 3) || is_consonant(stem, n - 2) ||
        !is_consonant(stem, n - 1))
        return false;
    char c = stem[n - 1];
    return c != 'w' && c != 'x' && c != 'y';
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

// Within a step, the longest matching suffix wins; if its condition fails,
// no other rule of the step is tried.
template <std::size_t N, typename Cond>
inline bool apply_step(std::string& w, const std::array<Rule, N>& rules, Cond cond) {
    const Rule* best = nullptr;
    for (const auto& r : rules) {
        if (w.size() >= r.suffix.size() &&
            std::string_view(w).substr(w.size() - r.suffix.size()) == r.suffix) {
            if (!best || r.suffix.size() > best->suffix.size()) best = &r;
        }
    }
    if (!best) return false;
    std::string_view stem(w.data(), w.size() - best->suffix.size());
    if (!cond(stem, *best)) return false;
    w.resize(stem.size());
    w.append(best->replacement);
    return true;
}

inline void step1a(std::string& w) {
    static constexpr std::array<Rule, 4> rules{
        Rule{"sses", "ss"}, Rule{"ies", "i"}, Rule{"ss", "ss"}, Rule{"s", ""}};
    apply_step(w, rules, [](std::string_view, const Rule&) { return true; });
}

inline void step1b(std::string& w) {
    if (w.ends_with("eed")) {
        std::string_view stem(w.data(), w.size() - 3);
        if (measure(stem) > 0) w.resize(w.size() - 1);
        return;
    }
    bool fired = false;
    if (w.ends_with("ed")) {
        std::string_view stem(w.data(), w.size() - 2);
        if (has_vowel(stem)) {
            w.resize(stem.size());
            fired = true;
        }
    } else if (w.ends_with("ing")) {
        std::string_view stem(w.data(), w.size() - 3);
        if (has_vowel(stem)) {
            w.resize(stem.size());
            fired = true;
        }
    }
    if (!fired) return;
    if (w.ends_with("at") || w.ends_with("bl") || w.ends_with("iz")) {
        w.push_back('e');
    } else if (ends_double_consonant(w)) {
        char c = w.back();
        if (c != 'l' && c != 's' && c != 'z') w.pop_back();
    } else if (measure(w) == 1 && ends_cvc(w)) {
        w.push_back('e');
    }
}

inline void step1c(std::string& w) {
    if (w.ends_with("y") && has_vowel(std::string_view(w.data(), w.size() - 1)))
        w.back() = 'i';
}

inline void step2(std::string& w) {
    static constexpr std::array<Rule, 20> rules{
        Rule{"ational", "ate"}, Rule{"tional", "tion"}, Rule{"enci", "ence"},
        Rule{"anci", "ance"},   Rule{"izer", "ize"},    Rule{"abli", "able"},
        Rule{"alli", "al"},     Rule{"entli", "ent"},   Rule{"eli", "e"},
        Rule{"ousli", "ous"},   Rule{"ization", "ize"}, Rule{"ation", "ate"},
        Rule{"ator", "ate"},    Rule{"alism", "al"},    Rule{"iveness", "ive"},
        Rule{"fulness", "ful"}, Rule{"ousness", "ous"}, Rule{"aliti", "al"},
        Rule{"iviti", "ive"},   Rule{"biliti", "ble"}};
    apply_step(w, rules,
               [](std::string_view stem, const Rule&) { return measure(stem) > 0; });
}

inline void step3(std::string& w) {
    static constexpr std::array<Rule, 7> rules{
        Rule{"icate", "ic"}, Rule{"ative", ""}, Rule{"alize", "al"},
        Rule{"iciti", "ic"}, Rule{"ical", "ic"}, Rule{"ful", ""},
        Rule{"ness", ""}};
    apply_step(w, rules,
               [](std::string_view stem, const Rule&) { return measure(stem) > 0; });
}

inline void step4(std::string& w) {
    static constexpr std::array<Rule, 19> rules{
        Rule{"al", ""},    Rule{"ance", ""}, Rule{"ence", ""}, Rule{"er", ""},
        Rule{"ic", ""},    Rule{"able", ""}, Rule{"ible", ""}, Rule{"ant", ""},
        Rule{"ement", ""}, Rule{"ment", ""}, Rule{"ent", ""},  Rule{"ion", ""},
        Rule{"ou", ""},    Rule{"ism", ""},  Rule{"ate", ""},  Rule{"iti", ""},
        Rule{"ous", ""},   Rule{"ive", ""},  Rule{"ize", ""}};
    apply_step(w, rules, [](std::string_view stem, const Rule& r) {
        if (measure(stem) <= 1) return false;
        if (r.suffix == "ion")
            return !stem.empty() && (stem.back() == 's' || stem.back() == 't');
        return true;
    });
}

inline void step5a(std::string& w) {
    if (!w.ends_with("e")) return;
    std::string_view stem(w.data(), w.size() - 1);
    int m = measure(stem);
    if (m > 1 || (m == 1 && !ends_cvc(stem))) w.pop_back();
}

inline void step5b(std::string& w) {
    if (measure(w) > 1 && ends_double_consonant(w) && w.ends_with("l"))
        w.pop_back();
}

}  // namespace porter_detail

/// Classic Porter stemmer (the original 1980 rule set, steps 1a-5b).
/// Lowercases the input; words of length <= 2 are returned unchanged.
inline std::string porter_stem(std::string_view word) {
    if (word.empty()) throw Error(ErrorKind::Validation, "porter_stem: empty input");
    std::string w(word);
    for (auto& c : w) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (w.size() <= 2) return w;
    using namespace porter_detail;
    step1a(w);
    step1b(w);
    step1c(w);
    step2(w);
    step3(w);
    step4(w);
    step5a(w);
    step5b(w);
    return w;
}

}  // namespace kpex
