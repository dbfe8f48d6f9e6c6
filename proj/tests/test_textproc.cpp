// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 kpex contributors

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include "kpex/textproc.hpp"
#include "test_util.hpp"

using namespace kpex;

namespace {

std::string collapse_ws(std::string_view s) {
    std::string out;
    bool in_ws = true;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!in_ws) out.push_back(' ');
            in_ws = true;
        } else {
            out.push_back(c);
            in_ws = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

// Assigns tags from synthetic token names: aa* -> ADJ, nn* -> NOUN,
// everything else OTHER. Lets candidate tests control tag sequences.
class NameTagger : public Tagger {
public:
    std::vector<TaggedToken> tag(const std::vector<Token>& tokens) const override {
        std::vector<TaggedToken> out;
        for (const auto& t : tokens) {
            PosTag tag = PosTag::Other;
            if (t.surface.rfind("aa", 0) == 0) tag = PosTag::Adj;
            else if (t.surface.rfind("nn", 0) == 0) tag = PosTag::Noun;
            out.push_back(TaggedToken{t, tag});
        }
        return out;
    }
};

std::vector<std::string> keys_of(const std::vector<CandidatePhrase>& cands) {
    std::vector<std::string> keys;
    for (const auto& c : cands) keys.push_back(c.key);
    return keys;
}

}  // namespace

TEST_CASE("split_sentences: basic splitting", "[textproc]") {
    auto s = split_sentences("A works. B fails.");
    REQUIRE(s.size() == 2);
    CHECK(s[0].text == "A works.");
    CHECK(s[1].text == "B fails.");
    CHECK(s[0].index == 0);
    CHECK(s[1].index == 1);
}

TEST_CASE("split_sentences: abbreviations do not split", "[textproc]") {
    auto s = split_sentences("We use e.g. Two models.");
    REQUIRE(s.size() == 1);
    CHECK(split_sentences("We use e.g. two models.").size() == 1);
    CHECK(split_sentences("Shown in Fig. 3 and Eq. 2.").size() == 1);
    CHECK(split_sentences("Smith et al. Proposed this.").size() == 1);
    // lowercase "no." at sentence end is not the abbreviation "No."
    CHECK(split_sentences("The answer is no. Therefore we stop.").size() == 2);
}

TEST_CASE("split_sentences: lowercase continuation does not split", "[textproc]") {
    auto s = split_sentences("It reaches 3.5 points. the gain persists");
    REQUIRE(s.size() == 1);
}

TEST_CASE("split_sentences: question and exclamation marks", "[textproc]") {
    auto s = split_sentences("Does it work? Yes! It does.");
    REQUIRE(s.size() == 3);
    CHECK(s[0].text == "Does it work?");
    CHECK(s[1].text == "Yes!");
}

TEST_CASE("split_sentences: empty and whitespace input", "[textproc]") {
    CHECK(split_sentences("").empty());
    CHECK(split_sentences("   \n\t ").empty());
}

TEST_CASE("split_sentences: spans tile the source (reconstruction oracle)", "[textproc]") {
    std::mt19937 rng(1234);
    const std::vector<std::string> words = {
        "graph",  "ranking", "model", "corpus", "we",   "the",  "results",
        "method", "improve", "show",  "e.g.",   "Fig.", "score"};
    const std::vector<std::string> terms = {".", "?", "!"};
    for (int iter = 0; iter < 30; ++iter) {
        std::string text;
        int sentences = 1 + static_cast<int>(rng() % 5);
        for (int s = 0; s < sentences; ++s) {
            int len = 2 + static_cast<int>(rng() % 6);
            for (int w = 0; w < len; ++w) {
                std::string word = words[rng() % words.size()];
                if (w == 0 && !word.empty())
                    word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
                text += word;
                text += (rng() % 5 == 0) ? "  " : " ";
            }
            while (!text.empty() && text.back() == ' ') text.pop_back();
            text += terms[rng() % terms.size()];
            text += (rng() % 3 == 0) ? "\n" : " ";
        }
        auto sents = split_sentences(text);
        std::size_t prev_end = 0;
        std::string rebuilt;
        for (const auto& s : sents) {
            CHECK(!s.text.empty());
            CHECK(s.start_char >= prev_end);
            CHECK(s.end_char > s.start_char);
            CHECK(text.substr(s.start_char, s.end_char - s.start_char) == s.text);
            prev_end = s.end_char;
            rebuilt += s.text;
            rebuilt += ' ';
        }
        CHECK(collapse_ws(rebuilt) == collapse_ws(text));
    }
}

TEST_CASE("tokenize: punctuation stripping", "[textproc]") {
    auto t = tokenize("graph-based ranking.");
    REQUIRE(t.size() == 2);
    CHECK(t[0].surface == "graph-based");
    CHECK(t[1].surface == "ranking");

    auto t2 = tokenize("(F1@5)");
    REQUIRE(t2.size() == 1);
    CHECK(t2[0].surface == "F1@5");

    CHECK(tokenize("-- ... ---").empty());
}

TEST_CASE("tokenize: offsets point at source substrings (oracle)", "[textproc]") {
    std::mt19937 rng(99);
    const std::string alphabet = "abcXY12 .,-()!?;: \t\n\"'";
    for (int iter = 0; iter < 200; ++iter) {
        std::string text;
        int len = static_cast<int>(rng() % 60);
        for (int i = 0; i < len; ++i) text += alphabet[rng() % alphabet.size()];
        auto toks = tokenize(text);
        std::size_t prev_index = 0;
        bool first = true;
        for (const auto& t : toks) {
            CHECK(!t.surface.empty());
            CHECK(t.surface.find_first_of(" \t\n") == std::string::npos);
            CHECK(text.substr(t.start_char, t.surface.size()) == t.surface);
            if (!first) CHECK(t.word_index == prev_index + 1);
            prev_index = t.word_index;
            first = false;
        }
    }
}

TEST_CASE("pos_tag: lexicon and suffix rules", "[textproc]") {
    auto tag_one = [](const std::string& w) {
        auto tagged = pos_tag({Token{w, 0, 0}});
        return tagged[0].tag;
    };
    CHECK(tag_one("the") == PosTag::Other);
    CHECK(tag_one("semantic") == PosTag::Adj);
    CHECK(tag_one("extraction") == PosTag::Noun);
    CHECK(tag_one("unsupervised") == PosTag::Adj);
    CHECK(tag_one("proposes") == PosTag::Other);
    CHECK(tag_one("networks") == PosTag::Noun);
    CHECK(tag_one("BERT") == PosTag::Noun);
    CHECK(tag_one("PageRank") == PosTag::Noun);
    CHECK(tag_one("graph-based") == PosTag::Adj);
    CHECK(tag_one("2024") == PosTag::Other);
    CHECK(tag_one("3.5") == PosTag::Other);
    CHECK(tag_one("learning") == PosTag::Noun);   // gerund noun entry
    CHECK(tag_one("combining") == PosTag::Other); // verb gerund
    CHECK(tag_one("zyzzyva") == PosTag::Noun);    // unknown word defaults to noun
}

TEST_CASE("pos_tag: fixture agreement >= 90%", "[textproc]") {
    std::ifstream in(kpex_test::data_file("pos_fixture.txt"));
    REQUIRE(in.good());
    std::string line;
    std::size_t total = 0, agree = 0, sentences = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++sentences;
        std::istringstream ls(line);
        std::string item;
        std::vector<Token> tokens;
        std::vector<std::string> gold;
        while (ls >> item) {
            auto slash = item.rfind('/');
            REQUIRE(slash != std::string::npos);
            tokens.push_back(Token{item.substr(0, slash), 0, tokens.size()});
            gold.push_back(item.substr(slash + 1));
        }
        auto tagged = pos_tag(tokens);
        REQUIRE(tagged.size() == gold.size());
        for (std::size_t i = 0; i < gold.size(); ++i) {
            ++total;
            if (pos_tag_name(tagged[i].tag) == gold[i]) ++agree;
        }
    }
    REQUIRE(sentences == 200);
    double ratio = static_cast<double>(agree) / static_cast<double>(total);
    INFO("agreement: " << agree << "/" << total << " = " << ratio);
    CHECK(ratio >= 0.90);
}

TEST_CASE("lexicon resource files match embedded defaults", "[textproc]") {
    std::filesystem::path repo_data(KPEX_REPO_DATA_DIR);
    CHECK(kpex_test::read_file(repo_data / "lexicon.txt") ==
          std::string(builtin::kDefaultLexicon));
    CHECK(kpex_test::read_file(repo_data / "abbreviations.txt") ==
          std::string(builtin::kDefaultAbbreviations));
}

TEST_CASE("lexicon: malformed lines rejected", "[textproc]") {
    std::istringstream bad("word\n");
    Lexicon lex;
    CHECK_THROWS_AS(lex.load_stream(bad, "<test>"), Error);
    std::istringstream badtag("word XYZ\n");
    CHECK_THROWS_AS(lex.load_stream(badtag, "<test>"), Error);
}

TEST_CASE("normalize_phrase: stemming and hyphen splitting", "[textproc]") {
    CHECK(normalize_phrase("Machine Learning") == "machin learn");
    CHECK(normalize_phrase("graph-based") == "graph base");
    CHECK(normalize_phrase("  keyword   extraction ") == "keyword extract");
    CHECK_THROWS_AS(normalize_phrase("   "), Error);
    CHECK_THROWS_AS(normalize_phrase(""), Error);
}

TEST_CASE("normalize_phrase: case-insensitive", "[textproc]") {
    std::mt19937 rng(7);
    const std::vector<std::string> vocab = {"Graph",  "Ranking", "Models",
                                            "Deep",   "Learning", "Corpus",
                                            "Masked", "Embedding"};
    for (int iter = 0; iter < 50; ++iter) {
        std::string phrase;
        int len = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < len; ++i) {
            if (i) phrase += ' ';
            phrase += vocab[rng() % vocab.size()];
        }
        CHECK(normalize_phrase(phrase) ==
              normalize_phrase(textproc_detail::to_lower(phrase)));
    }
}

TEST_CASE("extract_candidates: pattern examples", "[textproc]") {
    auto cands = extract_candidates("unsupervised keyword extraction");
    REQUIRE(cands.size() == 1);
    CHECK(cands[0].key == "unsupervis keyword extract");
    CHECK(cands[0].surface == "unsupervised keyword extraction");
    CHECK(cands[0].token_span == TokenSpan{0, 3});

    CHECK(extract_candidates("the of and").empty());
}

TEST_CASE("extract_candidates: repeated keys merge", "[textproc]") {
    auto cands = extract_candidates(
        "Keyword extraction improves when keyword extraction uses graphs");
    auto it = std::find_if(cands.begin(), cands.end(), [](const CandidatePhrase& c) {
        return c.key == "keyword extract";
    });
    REQUIRE(it != cands.end());
    CHECK(it->occurrence_spans.size() == 2);
    CHECK(it->first_word_index == 0);
    CHECK(it->surface == "Keyword extraction");
}

TEST_CASE("extract_candidates: clause punctuation blocks runs", "[textproc]") {
    NameTagger tagger;
    CandidateOptions opts;
    opts.tagger = &tagger;
    auto blocked = extract_candidates("aa1, nn1", opts);
    REQUIRE(blocked.size() == 1);
    CHECK(blocked[0].surface == "nn1");

    auto split = extract_candidates("nn1. nn2", opts);
    REQUIRE(split.size() == 2);

    auto joined = extract_candidates("aa1 nn1", opts);
    REQUIRE(joined.size() == 1);
    CHECK(joined[0].surface == "aa1 nn1");
}

TEST_CASE("extract_candidates: matches regex over tag strings (oracle)", "[textproc]") {
    NameTagger tagger;
    CandidateOptions opts;
    opts.tagger = &tagger;
    std::mt19937 rng(4242);
    const std::regex pattern("A*N+");
    for (int iter = 0; iter < 100; ++iter) {
        int len = 1 + static_cast<int>(rng() % 14);
        std::string tagstr;
        std::string text;
        for (int i = 0; i < len; ++i) {
            int r = static_cast<int>(rng() % 3);
            char t = r == 0 ? 'A' : (r == 1 ? 'N' : 'O');
            tagstr.push_back(t);
            if (i) text += ' ';
            const char* prefix = t == 'A' ? "aa" : (t == 'N' ? "nn" : "oo");
            text += prefix + std::to_string(i);
        }
        // oracle: greedy regex over the tag string, trailing-window cap
        std::vector<std::pair<std::size_t, std::size_t>> expected;
        for (auto it = std::sregex_iterator(tagstr.begin(), tagstr.end(), pattern);
             it != std::sregex_iterator(); ++it) {
            std::size_t begin = static_cast<std::size_t>(it->position());
            std::size_t end = begin + static_cast<std::size_t>(it->length());
            if (end - begin > opts.max_phrase_len) begin = end - opts.max_phrase_len;
            expected.emplace_back(begin, end);
        }
        auto cands = extract_candidates(text, opts);
        std::vector<std::pair<std::size_t, std::size_t>> actual;
        for (const auto& c : cands)
            for (const auto& s : c.occurrence_spans) actual.emplace_back(s.begin, s.end);
        std::sort(actual.begin(), actual.end());
        std::sort(expected.begin(), expected.end());
        INFO("tags: " << tagstr);
        CHECK(actual == expected);
    }
}

TEST_CASE("extract_candidates: no OTHER tokens inside candidates", "[textproc]") {
    const std::string text =
        "The proposed graph-based ranking model improves unsupervised keyword "
        "extraction on large academic corpora. We evaluate semantic similarity "
        "and positional features, using filtered abstracts.";
    auto tokens = tokenize(text);
    auto tagged = pos_tag(tokens);
    for (const auto& c : extract_candidates(text)) {
        for (const auto& span : c.occurrence_spans) {
            bool seen_noun = false;
            for (std::size_t i = span.begin; i < span.end; ++i) {
                CHECK(tagged[i].tag != PosTag::Other);
                if (tagged[i].tag == PosTag::Noun) seen_noun = true;
                if (seen_noun) CHECK(tagged[i].tag == PosTag::Noun);  // ADJ* then NOUN+
            }
            CHECK(seen_noun);
            CHECK(span.end - span.begin <= 5);
        }
    }
}

TEST_CASE("extract_candidates: deterministic and pure", "[textproc]") {
    const std::string text =
        "Deep learning models improve keyword extraction. Deep learning helps.";
    auto a = extract_candidates(text);
    auto b = extract_candidates(text);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].key == b[i].key);
        CHECK(a[i].occurrence_spans.size() == b[i].occurrence_spans.size());
    }
}

TEST_CASE("extract_candidates: concatenation superset property", "[textproc]") {
    std::mt19937 rng(31337);
    const std::vector<std::string> vocab = {
        "deep",     "learning",  "graph",   "ranking",   "novel",  "method",
        "the",      "of",        "we",      "propose",   "corpus", "semantic",
        "keyword",  "extraction", "shows",  "baseline",  "masked", "embedding"};
    for (int iter = 0; iter < 50; ++iter) {
        auto make_text = [&]() {
            std::string s;
            int len = 1 + static_cast<int>(rng() % 8);
            for (int i = 0; i < len; ++i) {
                if (i) s += ' ';
                s += vocab[rng() % vocab.size()];
            }
            return s;
        };
        std::string s = make_text(), t = make_text();
        auto combined = keys_of(extract_candidates(s + ". " + t));
        std::set<std::string> combined_set(combined.begin(), combined.end());
        for (const auto& k : keys_of(extract_candidates(s))) {
            INFO("s=" << s << " t=" << t << " missing=" << k);
            CHECK(combined_set.count(k) == 1);
        }
        for (const auto& k : keys_of(extract_candidates(t))) {
            INFO("s=" << s << " t=" << t << " missing=" << k);
            CHECK(combined_set.count(k) == 1);
        }
    }
}

TEST_CASE("subprocess tagger adapter", "[textproc]") {
    namespace fs = std::filesystem;
    kpex_test::TempDir dir("tagger");
    fs::path map_path = dir.path / "mapping.txt";
    {
        std::ofstream map(map_path);
        map << "J ADJ\nN NOUN\nX OTHER\n";
    }
    // tokens ending in 'x' become J, everything else N
    std::string cmd = "awk '{ if ($0 ~ /x$/) print \"J\"; else print \"N\" }'";
    SubprocessTagger tagger(cmd, SubprocessTagger::load_mapping(map_path.string()));
    std::vector<Token> tokens{{"fastx", 0, 0}, {"model", 6, 1}};
    auto tagged = tagger.tag(tokens);
    REQUIRE(tagged.size() == 2);
    CHECK(tagged[0].tag == PosTag::Adj);
    CHECK(tagged[1].tag == PosTag::Noun);

    SubprocessTagger broken("head -0", {});
    CHECK_THROWS_AS(broken.tag(tokens), Error);
}
