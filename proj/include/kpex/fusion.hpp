// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 kpex contributors

#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "kpex/corpus.hpp"
#include "kpex/embedding.hpp"
#include "kpex/errors.hpp"
#include "kpex/textproc.hpp"

namespace kpex {

enum class Strategy { A, H, FA, A_H, H_A, FA_H, H_FA };

inline const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::A: return "A";
        case Strategy::H: return "H";
        case Strategy::FA: return "FA";
        case Strategy::A_H: return "A+H";
        case Strategy::H_A: return "H+A";
        case Strategy::FA_H: return "FA+H";
        case Strategy::H_FA: return "H+FA";
    }
    return "?";
}

inline Strategy parse_strategy(std::string name) {
    for (auto& c : name) {
        if (c == '_') c = '+';
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    if (name == "A") return Strategy::A;
    if (name == "H") return Strategy::H;
    if (name == "FA") return Strategy::FA;
    if (name == "A+H") return Strategy::A_H;
    if (name == "H+A") return Strategy::H_A;
    if (name == "FA+H") return Strategy::FA_H;
    if (name == "H+FA") return Strategy::H_FA;
    throw Error(ErrorKind::Validation, "unknown strategy: " + name);
}

inline bool strategy_uses_filter(Strategy s) {
    return s == Strategy::FA || s == Strategy::FA_H || s == Strategy::H_FA;
}

inline bool strategy_uses_highlights(Strategy s) { return s != Strategy::A; }

struct FusionStrategy {
    Strategy kind = Strategy::A;
    std::size_t filter_k = 4;
};

enum class SegmentSource { Abstract, Highlights, FilteredAbstract };

inline const char* segment_source_name(SegmentSource s) {
    switch (s) {
        case SegmentSource::Abstract: return "abstract";
        case SegmentSource::Highlights: return "highlights";
        case SegmentSource::FilteredAbstract: return "filtered_abstract";
    }
    return "?";
}

struct Segment {
    SegmentSource source;
    std::size_t start = 0;  // char span in FusedInput::text
    std::size_t end = 0;
};

// The canonical separator between fused segments; a sentence terminator so
// candidate runs never straddle two segments.
inline constexpr const char* kSegmentSeparator = ". ";

struct FusedInput {
    std::string text;
    std::vector<Segment> segments;
    FusionStrategy strategy;
    std::string doc_id;
};

struct ScoredSentence {
    Sentence sentence;
    double similarity = 0.0;
};

struct FilteredAbstract {
    std::vector<ScoredSentence> kept_sentences;  // descending similarity
    std::size_t k_requested = 0;
    std::size_t k_effective = 0;
};

inline std::string join_highlights(const Document& doc) {
    std::string out;
    for (std::size_t i = 0; i < doc.highlights.size(); ++i) {
        if (i) out += kSegmentSeparator;
        out += doc.highlights[i];
    }
    return out;
}

/// Ranks abstract sentences by cosine similarity to the embedded highlights
/// block and keeps the top-k (ties: lower sentence index). Output is ordered
/// by descending similarity; k past the sentence count keeps everything.
inline FilteredAbstract filter_abstract(const Document& doc, std::size_t k,
                                        const Embedder& embedder) {
    if (k < 1) throw Error(ErrorKind::Validation, "filter_abstract: k must be >= 1");
    auto sentences = split_sentences(doc.abstract_text);
    if (sentences.empty())
        throw Error(ErrorKind::Validation,
                    "filter_abstract: abstract yields no sentences (doc " + doc.id + ")");
    std::string highlights_block = join_highlights(doc);
    if (highlights_block.empty())
        throw Error(ErrorKind::Validation,
                    "filter_abstract: document has no highlights (doc " + doc.id + ")");

    std::vector<std::string> texts;
    texts.reserve(sentences.size() + 1);
    for (const auto& s : sentences) texts.push_back(s.text);
    texts.push_back(highlights_block);
    auto vectors = embedder.embed_texts(texts);
    const EmbeddingVector& highlight_vec = vectors.back();

    std::vector<double> sims(sentences.size());
    for (std::size_t i = 0; i < sentences.size(); ++i)
        sims[i] = cosine_similarity(vectors[i], highlight_vec);

    std::vector<std::size_t> order(sentences.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (sims[a] != sims[b]) return sims[a] > sims[b];
        return a < b;
    });

    FilteredAbstract out;
    out.k_requested = k;
    out.k_effective = std::min(k, sentences.size());
    out.kept_sentences.reserve(out.k_effective);
    for (std::size_t i = 0; i < out.k_effective; ++i)
        out.kept_sentences.push_back(ScoredSentence{sentences[order[i]], sims[order[i]]});
    return out;
}

inline std::string filtered_abstract_text(const FilteredAbstract& fa) {
    std::string out;
    for (std::size_t i = 0; i < fa.kept_sentences.size(); ++i) {
        if (i) out += ' ';
        out += fa.kept_sentences[i].sentence.text;
    }
    return out;
}

namespace fusion_detail {

inline FusedInput assemble(const std::string& doc_id, FusionStrategy strategy,
                           const std::vector<std::pair<SegmentSource, std::string>>& parts) {
    FusedInput out;
    out.doc_id = doc_id;
    out.strategy = strategy;
    for (const auto& [source, text] : parts) {
        if (text.empty())
            throw Error(ErrorKind::Validation,
                        std::string("fusion: empty ") + segment_source_name(source) +
                            " segment (doc " + doc_id + ")");
        if (!out.text.empty()) out.text += kSegmentSeparator;
        std::size_t start = out.text.size();
        out.text += text;
        out.segments.push_back(Segment{source, start, out.text.size()});
    }
    return out;
}

}  // namespace fusion_detail

/// Builds the input text for one of the seven strategies, with per-segment
/// provenance spans over the final text.
inline FusedInput build_input(const Document& doc, FusionStrategy strategy,
                              const Embedder& embedder) {
    using fusion_detail::assemble;
    const auto abstract = [&] { return doc.abstract_text; };
    const auto highlights = [&] { return join_highlights(doc); };
    const auto filtered = [&] {
        return filtered_abstract_text(filter_abstract(doc, strategy.filter_k, embedder));
    };
    switch (strategy.kind) {
        case Strategy::A:
            return assemble(doc.id, strategy, {{SegmentSource::Abstract, abstract()}});
        case Strategy::H:
            return assemble(doc.id, strategy, {{SegmentSource::Highlights, highlights()}});
        case Strategy::FA:
            return assemble(doc.id, strategy,
                            {{SegmentSource::FilteredAbstract, filtered()}});
        case Strategy::A_H:
            return assemble(doc.id, strategy,
                            {{SegmentSource::Abstract, abstract()},
                             {SegmentSource::Highlights, highlights()}});
        case Strategy::H_A:
            return assemble(doc.id, strategy,
                            {{SegmentSource::Highlights, highlights()},
                             {SegmentSource::Abstract, abstract()}});
        case Strategy::FA_H:
            return assemble(doc.id, strategy,
                            {{SegmentSource::FilteredAbstract, filtered()},
                             {SegmentSource::Highlights, highlights()}});
        case Strategy::H_FA:
            return assemble(doc.id, strategy,
                            {{SegmentSource::Highlights, highlights()},
                             {SegmentSource::FilteredAbstract, filtered()}});
    }
    throw Error(ErrorKind::Internal, "unknown strategy");
}

}  // namespace kpex
