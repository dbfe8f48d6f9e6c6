// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 kpex contributors

#pragma once

#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "kpex/errors.hpp"
#include "kpex/textproc.hpp"

namespace kpex {

struct Document {
    std::string id;
    std::string title;
    std::string abstract_text;
    std::vector<std::string> highlights;     // ordered bullet texts
    std::vector<std::string> gold_keywords;  // author-assigned phrases

    bool operator==(const Document&) const = default;
};

struct Corpus {
    std::vector<Document> documents;
    std::string label;

    bool operator==(const Corpus&) const = default;
};

struct CorpusStats {
    std::map<std::size_t, std::size_t> keyword_count_histogram;
    std::map<std::size_t, std::size_t> abstract_sentence_count_histogram;
    std::map<std::size_t, std::size_t> highlight_bullet_count_histogram;
    double mean_abstract_sentences = 0.0;
};

struct ValidationResult {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

namespace corpus_detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// A single highlights string splits into bullets on newlines/semicolons.
inline std::vector<std::string> split_bullets(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == '\n' || c == ';') {
            std::string t = trim(cur);
            if (!t.empty()) out.push_back(t);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    std::string t = trim(cur);
    if (!t.empty()) out.push_back(t);
    return out;
}

}  // namespace corpus_detail

/// Checks every Document invariant; violations are data, not failures.
inline ValidationResult validate_document(const Document& doc) {
    using corpus_detail::trim;
    ValidationResult r;
    if (trim(doc.id).empty()) r.violations.push_back("id empty");
    if (trim(doc.abstract_text).empty()) r.violations.push_back("abstract empty");
    if (doc.highlights.empty()) {
        r.violations.push_back("highlights empty");
    } else {
        for (std::size_t i = 0; i < doc.highlights.size(); ++i) {
            if (trim(doc.highlights[i]).empty())
                r.violations.push_back("highlight bullet " + std::to_string(i) + " empty");
        }
    }
    std::size_t k = doc.gold_keywords.size();
    if (k < 3)
        r.violations.push_back("keyword count " + std::to_string(k) +
                               " below required range 3..6");
    else if (k > 6)
        r.violations.push_back("keyword count " + std::to_string(k) +
                               " above required range 3..6");
    for (std::size_t i = 0; i < doc.gold_keywords.size(); ++i) {
        if (trim(doc.gold_keywords[i]).empty())
            r.violations.push_back("keyword " + std::to_string(i) + " empty");
    }
    return r;
}

namespace corpus_detail {

inline Document parse_record(const nlohmann::json& j, std::size_t lineno) {
    auto fail = [&](const std::string& msg) -> void {
        throw Error(ErrorKind::Validation, "line " + std::to_string(lineno) + ": " + msg);
    };
    if (!j.is_object()) fail("record is not a JSON object");
    auto need = [&](const char* field) -> const nlohmann::json& {
        auto it = j.find(field);
        if (it == j.end()) fail(std::string("missing field \"") + field + "\"");
        return *it;
    };
    Document doc;
    const auto& id = need("id");
    if (!id.is_string()) fail("field \"id\" must be a string");
    doc.id = id.get<std::string>();
    if (auto it = j.find("title"); it != j.end()) {
        if (!it->is_string()) fail("field \"title\" must be a string");
        doc.title = it->get<std::string>();
    }
    const auto& abs = need("abstract");
    if (!abs.is_string()) fail("field \"abstract\" must be a string");
    doc.abstract_text = abs.get<std::string>();
    const auto& hl = need("highlights");
    if (hl.is_string()) {
        doc.highlights = split_bullets(hl.get<std::string>());
    } else if (hl.is_array()) {
        for (const auto& b : hl) {
            if (!b.is_string()) fail("field \"highlights\" must hold strings");
            doc.highlights.push_back(b.get<std::string>());
        }
    } else {
        fail("field \"highlights\" must be a string or an array of strings");
    }
    const auto& kw = need("keywords");
    if (!kw.is_array()) fail("field \"keywords\" must be an array of strings");
    for (const auto& k : kw) {
        if (!k.is_string()) fail("field \"keywords\" must hold strings");
        doc.gold_keywords.push_back(k.get<std::string>());
    }
    return doc;
}

}  // namespace corpus_detail

struct LoadReport {
    std::size_t loaded = 0;
    std::size_t dropped = 0;
    std::vector<std::pair<std::size_t, std::string>> errors;  // (line, message)

    nlohmann::json to_json() const {
        nlohmann::json errs = nlohmann::json::array();
        for (const auto& [line, msg] : errors)
            errs.push_back({{"line", line}, {"error", msg}});
        return {{"loaded", loaded}, {"dropped", dropped}, {"errors", errs}};
    }
};

/// Loads a JSONL corpus. Strict mode fails on the first invalid record;
/// lenient mode drops invalid records and reports them. When report_stream
/// is set, the lenient-mode load report is written there as JSON.
inline Corpus load_corpus(const std::string& path, bool strict = true,
                          std::ostream* report_stream = nullptr) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open corpus file: " + path);
    Corpus corpus;
    corpus.label = path;
    LoadReport report;
    std::set<std::string> ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (corpus_detail::trim(line).empty()) continue;
        try {
            nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
            if (j.is_discarded())
                throw Error(ErrorKind::Validation,
                            "line " + std::to_string(lineno) + ": malformed JSON record");
            Document doc = corpus_detail::parse_record(j, lineno);
            if (!ids.insert(doc.id).second)
                throw Error(ErrorKind::Validation, "line " + std::to_string(lineno) +
                                                       ": duplicate id \"" + doc.id + "\"");
            ValidationResult v = validate_document(doc);
            if (!v.ok()) {
                std::string joined;
                for (const auto& s : v.violations) {
                    if (!joined.empty()) joined += "; ";
                    joined += s;
                }
                throw Error(ErrorKind::Validation,
                            "line " + std::to_string(lineno) + ": " + joined);
            }
            corpus.documents.push_back(std::move(doc));
            ++report.loaded;
        } catch (const Error& e) {
            if (strict) throw;
            ++report.dropped;
            report.errors.emplace_back(lineno, e.what());
        }
    }
    if (!strict && report_stream) *report_stream << report.to_json().dump() << "\n";
    return corpus;
}

inline nlohmann::json document_to_json(const Document& doc) {
    return {{"id", doc.id},
            {"title", doc.title},
            {"abstract", doc.abstract_text},
            {"highlights", doc.highlights},
            {"keywords", doc.gold_keywords}};
}

inline void save_corpus(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write corpus file: " + path);
    for (const auto& doc : corpus.documents) out << document_to_json(doc).dump() << "\n";
}

/// Histograms over keyword counts, abstract sentence counts (via the
/// textproc splitter) and highlight bullet counts.
inline CorpusStats corpus_stats(const Corpus& corpus) {
    if (corpus.documents.empty())
        throw Error(ErrorKind::Validation, "corpus_stats: empty corpus");
    CorpusStats stats;
    std::size_t total_sentences = 0;
    for (const auto& doc : corpus.documents) {
        std::size_t sentences = split_sentences(doc.abstract_text).size();
        stats.keyword_count_histogram[doc.gold_keywords.size()]++;
        stats.abstract_sentence_count_histogram[sentences]++;
        stats.highlight_bullet_count_histogram[doc.highlights.size()]++;
        total_sentences += sentences;
    }
    stats.mean_abstract_sentences =
        static_cast<double>(total_sentences) / static_cast<double>(corpus.documents.size());
    return stats;
}

}  // namespace kpex
