// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 kpex contributors

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "kpex/embedding.hpp"
#include "kpex/errors.hpp"
#include "kpex/fusion.hpp"
#include "kpex/textproc.hpp"

namespace kpex {

// Undirected co-occurrence graph over ADJ/NOUN word stems.
class WordGraph {
public:
    std::size_t add_node(const std::string& stem, PosTag tag) {
        auto it = index_.find(stem);
        if (it != index_.end()) return it->second;
        std::size_t id = nodes_.size();
        index_.emplace(stem, id);
        nodes_.push_back(stem);
        tags_.push_back(tag);
        weights_.emplace_back();
        return id;
    }

    void add_edge(std::size_t u, std::size_t v, double w = 1.0) {
        if (u == v) return;  // no self-loops
        if (u >= nodes_.size() || v >= nodes_.size())
            throw Error(ErrorKind::Internal, "word graph: edge endpoint out of range");
        weights_[u][v] += w;
        weights_[v][u] += w;
    }

    static WordGraph from_tokens(const std::vector<TaggedToken>& tagged,
                                 std::size_t window) {
        WordGraph g;
        g.window_ = window;
        std::vector<std::size_t> node_of(tagged.size(), SIZE_MAX);
        for (std::size_t i = 0; i < tagged.size(); ++i) {
            if (tagged[i].tag == PosTag::Other) continue;
            node_of[i] = g.add_node(stem(textproc_detail::to_lower(tagged[i].token.surface)),
                                    tagged[i].tag);
        }
        // tokens co-occur when their word positions are closer than `window`,
        // counted over the raw token stream (OTHER tokens still take space)
        for (std::size_t i = 0; i < tagged.size(); ++i) {
            if (node_of[i] == SIZE_MAX) continue;
            for (std::size_t j = i + 1;
                 j < tagged.size() &&
                 tagged[j].token.word_index - tagged[i].token.word_index < window;
                 ++j) {
                if (node_of[j] == SIZE_MAX) continue;
                g.add_edge(node_of[i], node_of[j]);
            }
        }
        return g;
    }

    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }
    std::size_t window() const { return window_; }
    const std::vector<std::string>& nodes() const { return nodes_; }
    PosTag tag_of(std::size_t id) const { return tags_[id]; }
    const std::unordered_map<std::size_t, double>& neighbors(std::size_t id) const {
        return weights_[id];
    }
    const std::size_t* find(const std::string& stem) const {
        auto it = index_.find(stem);
        return it == index_.end() ? nullptr : &it->second;
    }

private:
    std::vector<std::string> nodes_;
    std::vector<PosTag> tags_;
    std::vector<std::unordered_map<std::size_t, double>> weights_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t window_ = 2;
};

struct RankConfig {
    double damping = 0.85;
    double tol = 1e-6;
    std::size_t max_iter = 100;
    std::size_t window_textrank = 2;
    std::size_t window_positionrank = 10;
    std::size_t top_n = 15;
    bool phrase_score_mean = false;  // sum by default
};

struct RankedKeyword {
    std::string surface;  // earliest-occurring surface form for the key
    std::string key;
    double score = 0.0;
    std::size_t rank = 0;  // 1-based, contiguous
};

/// Personalized PageRank with column-stochastic transitions from edge
/// weights; dangling nodes redistribute to the personalization vector.
/// Returned scores sum to 1.
inline std::unordered_map<std::string, double> rank_graph(
    const WordGraph& graph,
    const std::unordered_map<std::string, double>* personalization,
    const RankConfig& cfg = {}) {
    if (graph.empty()) throw Error(ErrorKind::Validation, "rank_graph: empty graph");
    if (cfg.damping <= 0.0 || cfg.damping >= 1.0)
        throw Error(ErrorKind::Validation, "rank_graph: damping must be in (0,1)");
    std::size_t n = graph.size();

    std::vector<double> p(n, 1.0 / static_cast<double>(n));
    if (personalization) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            auto it = personalization->find(graph.nodes()[i]);
            double w = it == personalization->end() ? 0.0 : it->second;
            if (w < 0.0)
                throw Error(ErrorKind::Validation,
                            "rank_graph: negative personalization weight");
            p[i] = w;
            total += w;
        }
        if (total <= 0.0)
            throw Error(ErrorKind::Validation,
                        "rank_graph: personalization weights all zero");
        for (double& w : p) w /= total;
    }

    std::vector<double> out_weight(n, 0.0);
    for (std::size_t u = 0; u < n; ++u)
        for (const auto& [v, w] : graph.neighbors(u)) out_weight[u] += w;

    std::vector<double> s(p), next(n);
    const double d = cfg.damping;
    for (std::size_t iter = 0; iter < cfg.max_iter; ++iter) {
        double dangling = 0.0;
        for (std::size_t u = 0; u < n; ++u)
            if (out_weight[u] == 0.0) dangling += s[u];
        for (std::size_t v = 0; v < n; ++v) next[v] = (1.0 - d + d * dangling) * p[v];
        for (std::size_t u = 0; u < n; ++u) {
            if (out_weight[u] == 0.0) continue;
            double share = d * s[u] / out_weight[u];
            for (const auto& [v, w] : graph.neighbors(u)) next[v] += share * w;
        }
        double delta = 0.0;
        for (std::size_t v = 0; v < n; ++v) delta += std::abs(next[v] - s[v]);
        s.swap(next);
        if (delta < cfg.tol) break;
    }

    std::unordered_map<std::string, double> scores;
    scores.reserve(n);
    for (std::size_t i = 0; i < n; ++i) scores.emplace(graph.nodes()[i], s[i]);
    return scores;
}

/// PositionRank's restart weights: sum of 1/position over every occurrence
/// of each ADJ/NOUN stem, positions 1-based over the raw token stream.
inline std::unordered_map<std::string, double> reciprocal_position_weights(
    const std::vector<TaggedToken>& tagged) {
    std::unordered_map<std::string, double> weights;
    for (const auto& t : tagged) {
        if (t.tag == PosTag::Other) continue;
        weights[stem(textproc_detail::to_lower(t.token.surface))] +=
            1.0 / static_cast<double>(t.token.word_index + 1);
    }
    return weights;
}

namespace ranker_detail {

inline std::vector<RankedKeyword> graph_rank(const FusedInput& input,
                                             const RankConfig& cfg,
                                             bool positional) {
    auto tokens = tokenize(input.text);
    auto tagged = pos_tag(tokens);
    auto candidates = extract_candidates(input.text);
    if (candidates.empty())
        throw Error(ErrorKind::Validation,
                    "no extractable content (doc " + input.doc_id + ")");

    std::size_t window = positional ? cfg.window_positionrank : cfg.window_textrank;
    WordGraph graph = WordGraph::from_tokens(tagged, window);

    std::unordered_map<std::string, double> personalization;
    if (positional) personalization = reciprocal_position_weights(tagged);
    auto scores = rank_graph(graph, positional ? &personalization : nullptr, cfg);

    std::vector<RankedKeyword> out;
    out.reserve(candidates.size());
    for (const auto& c : candidates) {
        double total = 0.0;
        for (std::size_t i = c.token_span.begin; i < c.token_span.end; ++i) {
            const std::string word_stem =
                stem(textproc_detail::to_lower(tokens[i].surface));
            auto it = scores.find(word_stem);
            if (it != scores.end()) total += it->second;
        }
        if (cfg.phrase_score_mean)
            total /= static_cast<double>(c.token_span.end - c.token_span.begin);
        out.push_back(RankedKeyword{c.surface, c.key, total, 0});
    }
    std::unordered_map<std::string, std::size_t> first_pos;
    for (const auto& c : candidates) first_pos[c.key] = c.first_word_index;
    std::sort(out.begin(), out.end(), [&](const RankedKeyword& a, const RankedKeyword& b) {
        if (a.score != b.score) return a.score > b.score;
        if (first_pos.at(a.key) != first_pos.at(b.key))
            return first_pos.at(a.key) < first_pos.at(b.key);
        return a.key < b.key;
    });
    if (cfg.top_n > 0 && out.size() > cfg.top_n) out.resize(cfg.top_n);
    for (std::size_t i = 0; i < out.size(); ++i) out[i].rank = i + 1;
    return out;
}

}  // namespace ranker_detail

/// TextRank: uniform restart, co-occurrence window cfg.window_textrank,
/// phrase score = sum of member-word PageRank scores.
inline std::vector<RankedKeyword> textrank(const FusedInput& input,
                                           const RankConfig& cfg = {}) {
    return ranker_detail::graph_rank(input, cfg, false);
}

/// PositionRank: TextRank with reciprocal-position restart weights and its
/// own (wider) co-occurrence window.
inline std::vector<RankedKeyword> positionrank(const FusedInput& input,
                                               const RankConfig& cfg = {}) {
    return ranker_detail::graph_rank(input, cfg, true);
}

// Placeholder spliced over masked token spans; one per original token, so
// the token count is preserved.
inline constexpr const char* kMaskToken = "[MASK]";

inline std::string mask_candidate_text(const std::string& text,
                                       const std::vector<Token>& tokens,
                                       const CandidatePhrase& candidate) {
    std::vector<std::pair<std::size_t, std::size_t>> spans;  // (start, len)
    for (const auto& occ : candidate.occurrence_spans)
        for (std::size_t i = occ.begin; i < occ.end; ++i)
            spans.emplace_back(tokens[i].start_char, tokens[i].surface.size());
    std::sort(spans.rbegin(), spans.rend());
    std::string masked = text;
    for (const auto& [start, len] : spans) masked.replace(start, len, kMaskToken);
    return masked;
}

/// MDERank: embed the document, embed each candidate-masked variant, score
/// by cosine to the original. Low cosine = large semantic shift = high
/// importance, so ranking is ascending by score.
inline std::vector<RankedKeyword> mderank(const FusedInput& input,
                                          const Embedder& embedder,
                                          const RankConfig& cfg = {}) {
    auto tokens = tokenize(input.text);
    auto candidates = extract_candidates(input.text);
    if (candidates.empty())
        throw Error(ErrorKind::Validation,
                    "no extractable content (doc " + input.doc_id + ")");

    std::vector<std::string> texts;
    texts.reserve(candidates.size() + 1);
    texts.push_back(input.text);
    for (const auto& c : candidates)
        texts.push_back(mask_candidate_text(input.text, tokens, c));
    auto vectors = embedder.embed_texts(texts);

    std::vector<RankedKeyword> out;
    out.reserve(candidates.size());
    std::unordered_map<std::string, std::size_t> first_pos;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto& c = candidates[i];
        double sim = cosine_similarity(vectors[0], vectors[i + 1]);
        out.push_back(RankedKeyword{c.surface, c.key, sim, 0});
        first_pos[c.key] = c.first_word_index;
    }
    std::sort(out.begin(), out.end(), [&](const RankedKeyword& a, const RankedKeyword& b) {
        if (a.score != b.score) return a.score < b.score;  // ascending cosine
        if (first_pos.at(a.key) != first_pos.at(b.key))
            return first_pos.at(a.key) < first_pos.at(b.key);
        return a.key < b.key;
    });
    if (cfg.top_n > 0 && out.size() > cfg.top_n) out.resize(cfg.top_n);
    for (std::size_t i = 0; i < out.size(); ++i) out[i].rank = i + 1;
    return out;
}

struct GenerationProviderSpec {
    std::string endpoint;
    std::string auth_env;
};

// Instruction prefix sent ahead of the document text.
inline constexpr const char* kExtractionPrompt =
    "Based on the text below, give the keyword set of the paper in which it "
    "is located, sort the results from high to low importance, and separate "
    "the results with commas. Note that only the results are given without "
    "any additional explanations.";

/// Parses a comma-separated model reply into ranked keywords; empty items
/// are dropped, duplicate keys keep their first (best) rank.
inline std::vector<RankedKeyword> parse_generation_reply(const std::string& reply,
                                                         std::size_t top_n) {
    std::vector<RankedKeyword> out;
    std::unordered_map<std::string, bool> seen;
    std::string item;
    auto flush = [&] {
        std::size_t b = 0, e = item.size();
        while (b < e && std::isspace(static_cast<unsigned char>(item[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(item[e - 1]))) --e;
        std::string surface = item.substr(b, e - b);
        item.clear();
        if (surface.empty()) return;
        std::string key;
        try {
            key = normalize_phrase(surface);
        } catch (const Error&) {
            return;  // punctuation-only item, treat as empty
        }
        if (seen.emplace(key, true).second)
            out.push_back(RankedKeyword{surface, key, 0.0, 0});
    };
    for (char c : reply) {
        if (c == ',' || c == '\n') flush();
        else item.push_back(c);
    }
    flush();
    if (out.empty())
        throw Error(ErrorKind::Provider, "empty extraction: reply held no keywords");
    if (top_n > 0 && out.size() > top_n) out.resize(top_n);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].rank = i + 1;
        out[i].score = static_cast<double>(out.size() - i);  // rank-derived
    }
    return out;
}

/// Prompt-based extraction through the generation provider:
/// POST {"prompt": str} -> {"text": str}.
inline std::vector<RankedKeyword> llm_extract(const FusedInput& input,
                                              const GenerationProviderSpec& gen,
                                              std::size_t top_n) {
    if (gen.endpoint.empty())
        throw Error(ErrorKind::Validation, "llm_extract: no generation endpoint configured");
    auto scheme = gen.endpoint.find("://");
    if (scheme == std::string::npos)
        throw Error(ErrorKind::Validation,
                    "generation endpoint must be an http URL: " + gen.endpoint);
    auto slash = gen.endpoint.find('/', scheme + 3);
    std::string base = slash == std::string::npos ? gen.endpoint : gen.endpoint.substr(0, slash);
    std::string path = slash == std::string::npos ? "/" : gen.endpoint.substr(slash);

    httplib::Client client(base);
    client.set_read_timeout(300, 0);
    httplib::Headers headers;
    if (!gen.auth_env.empty()) {
        const char* token = std::getenv(gen.auth_env.c_str());
        if (token && *token) headers.emplace("Authorization", std::string("Bearer ") + token);
    }
    nlohmann::json body{{"prompt", std::string(kExtractionPrompt) + "\n" + input.text}};
    auto res = client.Post(path, headers, body.dump(), "application/json");
    if (!res)
        throw Error(ErrorKind::Provider, "generation endpoint unreachable: " + gen.endpoint);
    if (res->status != 200)
        throw Error(ErrorKind::Provider,
                    "generation endpoint returned status " + std::to_string(res->status));
    nlohmann::json j = nlohmann::json::parse(res->body, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("text") || !j["text"].is_string())
        throw Error(ErrorKind::Provider, "generation response is not {\"text\": str}");
    return parse_generation_reply(j["text"].get<std::string>(), top_n);
}

}  // namespace kpex
