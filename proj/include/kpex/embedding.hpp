// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 kpex contributors

#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <semaphore>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <httplib.h>
#include <json.hpp>
#include <openssl/evp.h>

#include "kpex/errors.hpp"
#include "kpex/textproc.hpp"

namespace kpex {

struct EmbeddingVector {
    std::vector<double> values;
    std::size_t dim = 0;
    std::string provider_id;
};

enum class ProviderKind { BuiltinHash, RemoteHttp };

struct EmbeddingProviderSpec {
    std::string provider_id = "builtin-hash";
    std::size_t dim = 384;
    ProviderKind kind = ProviderKind::BuiltinHash;
    std::string endpoint;      // required for remote-http, forbidden for builtin
    std::size_t max_batch = 32;
    std::size_t max_inflight = 4;
    std::string auth_env;      // env var holding the bearer token, optional
};

inline double cosine_similarity(const EmbeddingVector& u, const EmbeddingVector& v) {
    if (u.dim != v.dim)
        throw Error(ErrorKind::Validation, "cosine_similarity: dimension mismatch");
    if (u.provider_id != v.provider_id)
        throw Error(ErrorKind::Validation, "cosine_similarity: provider mismatch");
    double dot = 0, nu = 0, nv = 0;
    for (std::size_t i = 0; i < u.dim; ++i) {
        dot += u.values[i] * v.values[i];
        nu += u.values[i] * u.values[i];
        nv += v.values[i] * v.values[i];
    }
    if (nu == 0.0 || nv == 0.0)
        throw Error(ErrorKind::Validation, "cosine_similarity: zero-norm vector");
    return dot / (std::sqrt(nu) * std::sqrt(nv));
}

namespace embedding_detail {

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string sha256_hex(std::string_view data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw Error(ErrorKind::Internal, "sha256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xf]);
    }
    return out;
}

}  // namespace embedding_detail

class EmbeddingBackend {
public:
    virtual ~EmbeddingBackend() = default;
    virtual std::vector<std::vector<double>> embed(
        const std::vector<std::string>& texts) const = 0;
};

// Deterministic offline backend: a term-frequency bag over lowercased
// tokens, each term hashed (FNV-1a 64) to a bucket with a +-1 sign from the
// hash's top bit, then L2-normalized. Invariant under token reordering,
// which is the documented bag-of-words limitation.
class BuiltinHashBackend : public EmbeddingBackend {
public:
    explicit BuiltinHashBackend(std::size_t dim) : dim_(dim) {}

    std::vector<std::vector<double>> embed(
        const std::vector<std::string>& texts) const override {
        std::vector<std::vector<double>> out;
        out.reserve(texts.size());
        for (const auto& t : texts) out.push_back(embed_one(t));
        return out;
    }

    std::vector<double> embed_one(const std::string& text) const {
        using embedding_detail::fnv1a64;
        std::vector<double> values(dim_, 0.0);
        auto tokens = tokenize(text);
        if (tokens.empty())
            throw Error(ErrorKind::Validation,
                        "builtin-hash backend: text has no tokens");
        for (const auto& tok : tokens) {
            std::string term = textproc_detail::to_lower(tok.surface);
            std::uint64_t h = fnv1a64(term);
            std::size_t bucket = static_cast<std::size_t>(h % dim_);
            double sign = (h >> 63) ? -1.0 : 1.0;
            values[bucket] += sign;
        }
        double norm = 0;
        for (double v : values) norm += v * v;
        if (norm == 0.0)
            throw Error(ErrorKind::Internal,
                        "builtin-hash backend: degenerate zero-norm embedding");
        norm = std::sqrt(norm);
        for (double& v : values) v /= norm;
        return values;
    }

private:
    std::size_t dim_;
};

// POST {"texts": [...]} -> {"vectors": [[...]]}; non-200 or a shape mismatch
// is a provider error. Requests are batched by max_batch and bounded by
// max_inflight across threads.
class RemoteHttpBackend : public EmbeddingBackend {
public:
    explicit RemoteHttpBackend(const EmbeddingProviderSpec& spec)
        : spec_(spec), inflight_(static_cast<std::ptrdiff_t>(
                           spec.max_inflight > 0 ? spec.max_inflight : 1)) {
        auto scheme = spec_.endpoint.find("://");
        if (scheme == std::string::npos)
            throw Error(ErrorKind::Validation,
                        "remote endpoint must be an http URL: " + spec_.endpoint);
        auto slash = spec_.endpoint.find('/', scheme + 3);
        base_ = slash == std::string::npos ? spec_.endpoint : spec_.endpoint.substr(0, slash);
        path_ = slash == std::string::npos ? "/" : spec_.endpoint.substr(slash);
    }

    std::vector<std::vector<double>> embed(
        const std::vector<std::string>& texts) const override {
        std::vector<std::vector<double>> out;
        out.reserve(texts.size());
        for (std::size_t i = 0; i < texts.size(); i += spec_.max_batch) {
            std::size_t end = std::min(texts.size(), i + spec_.max_batch);
            std::vector<std::string> batch(texts.begin() + i, texts.begin() + end);
            auto vectors = request(batch);
            for (auto& v : vectors) out.push_back(std::move(v));
        }
        return out;
    }

private:
    std::vector<std::vector<double>> request(const std::vector<std::string>& batch) const {
        inflight_.acquire();
        struct Release {
            std::counting_semaphore<>& sem;
            ~Release() { sem.release(); }
        } release{inflight_};

        httplib::Client client(base_);
        client.set_read_timeout(120, 0);
        httplib::Headers headers;
        if (!spec_.auth_env.empty()) {
            const char* token = std::getenv(spec_.auth_env.c_str());
            if (token && *token)
                headers.emplace("Authorization", std::string("Bearer ") + token);
        }
        nlohmann::json body{{"texts", batch}};
        auto res = client.Post(path_, headers, body.dump(), "application/json");
        if (!res)
            throw Error(ErrorKind::Provider,
                        "embedding endpoint unreachable: " + spec_.endpoint);
        if (res->status != 200)
            throw Error(ErrorKind::Provider, "embedding endpoint returned status " +
                                                 std::to_string(res->status));
        nlohmann::json j = nlohmann::json::parse(res->body, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("vectors") ||
            !j["vectors"].is_array())
            throw Error(ErrorKind::Provider, "embedding response is not {\"vectors\": [[..]]}");
        const auto& vecs = j["vectors"];
        if (vecs.size() != batch.size())
            throw Error(ErrorKind::Provider,
                        "embedding response count " + std::to_string(vecs.size()) +
                            " != request count " + std::to_string(batch.size()));
        std::vector<std::vector<double>> out;
        out.reserve(vecs.size());
        for (const auto& v : vecs) {
            if (!v.is_array() || v.size() != spec_.dim)
                throw Error(ErrorKind::Provider,
                            "embedding dimension mismatch: expected " +
                                std::to_string(spec_.dim));
            std::vector<double> values;
            values.reserve(spec_.dim);
            for (const auto& x : v) {
                if (!x.is_number())
                    throw Error(ErrorKind::Provider, "non-numeric embedding value");
                values.push_back(x.get<double>());
            }
            out.push_back(std::move(values));
        }
        return out;
    }

    EmbeddingProviderSpec spec_;
    std::string base_;
    std::string path_;
    mutable std::counting_semaphore<> inflight_;
};

inline std::unique_ptr<EmbeddingBackend> make_backend(const EmbeddingProviderSpec& spec) {
    if (spec.dim == 0)
        throw Error(ErrorKind::Validation, "embedding dim must be positive");
    switch (spec.kind) {
        case ProviderKind::BuiltinHash:
            if (!spec.endpoint.empty())
                throw Error(ErrorKind::Validation,
                            "builtin-hash provider forbids an endpoint");
            return std::make_unique<BuiltinHashBackend>(spec.dim);
        case ProviderKind::RemoteHttp:
            if (spec.endpoint.empty())
                throw Error(ErrorKind::Validation,
                            "remote-http provider requires an endpoint");
            return std::make_unique<RemoteHttpBackend>(spec);
    }
    throw Error(ErrorKind::Internal, "unknown provider kind");
}

// Embeds texts through the configured backend with an optional disk cache.
// Cache entries are keyed by SHA-256 of (provider_id, dim, text) and written
// atomically (write-then-rename), so concurrent writers are benign.
class Embedder {
public:
    explicit Embedder(EmbeddingProviderSpec spec, std::string cache_dir = "")
        : spec_(std::move(spec)), cache_dir_(std::move(cache_dir)),
          backend_(make_backend(spec_)) {
        if (!cache_dir_.empty()) std::filesystem::create_directories(cache_dir_);
    }

    const EmbeddingProviderSpec& spec() const { return spec_; }

    EmbeddingVector embed(const std::string& text) const {
        return embed_texts({text})[0];
    }

    std::vector<EmbeddingVector> embed_texts(const std::vector<std::string>& texts) const {
        if (texts.empty())
            throw Error(ErrorKind::Validation, "embed_texts: empty text list");
        for (const auto& t : texts) {
            if (corpus_trimmed_empty(t))
                throw Error(ErrorKind::Validation, "embed_texts: empty text");
        }
        std::vector<EmbeddingVector> out(texts.size());
        std::vector<std::size_t> missing;
        for (std::size_t i = 0; i < texts.size(); ++i) {
            if (!cache_dir_.empty()) {
                auto cached = cache_read(texts[i]);
                if (cached) {
                    out[i] = std::move(*cached);
                    continue;
                }
            }
            missing.push_back(i);
        }
        if (!missing.empty()) {
            std::vector<std::string> todo;
            todo.reserve(missing.size());
            for (auto i : missing) todo.push_back(texts[i]);
            auto vectors = backend_->embed(todo);
            if (vectors.size() != todo.size())
                throw Error(ErrorKind::Internal, "backend returned wrong vector count");
            for (std::size_t k = 0; k < missing.size(); ++k) {
                EmbeddingVector v{std::move(vectors[k]), spec_.dim, spec_.provider_id};
                if (!cache_dir_.empty()) cache_write(texts[missing[k]], v);
                out[missing[k]] = std::move(v);
            }
        }
        return out;
    }

private:
    static bool corpus_trimmed_empty(const std::string& s) {
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c))) return false;
        return true;
    }

    std::filesystem::path cache_path(const std::string& text) const {
        std::string key = spec_.provider_id;
        key.push_back('\0');
        key += std::to_string(spec_.dim);
        key.push_back('\0');
        key += text;
        return std::filesystem::path(cache_dir_) /
               (embedding_detail::sha256_hex(key) + ".vec");
    }

    std::optional<EmbeddingVector> cache_read(const std::string& text) const {
        auto path = cache_path(text);
        std::ifstream in(path, std::ios::binary);
        if (!in) return std::nullopt;
        std::uint32_t dim = 0;
        in.read(reinterpret_cast<char*>(&dim), sizeof(dim));
        if (!in || dim != spec_.dim) return std::nullopt;
        std::vector<double> values(dim);
        in.read(reinterpret_cast<char*>(values.data()),
                static_cast<std::streamsize>(dim * sizeof(double)));
        if (!in) return std::nullopt;
        return EmbeddingVector{std::move(values), spec_.dim, spec_.provider_id};
    }

    void cache_write(const std::string& text, const EmbeddingVector& v) const {
        static std::atomic<std::uint64_t> counter{0};
        auto path = cache_path(text);
        auto tmp = path;
        tmp += ".tmp" + std::to_string(::getpid()) + "_" +
               std::to_string(counter.fetch_add(1));
        {
            std::ofstream out(tmp, std::ios::binary);
            if (!out) throw Error(ErrorKind::Io, "cannot write cache file: " + tmp.string());
            std::uint32_t dim = static_cast<std::uint32_t>(v.dim);
            out.write(reinterpret_cast<const char*>(&dim), sizeof(dim));
            out.write(reinterpret_cast<const char*>(v.values.data()),
                      static_cast<std::streamsize>(v.values.size() * sizeof(double)));
        }
        std::error_code ec;
        std::filesystem::rename(tmp, path, ec);
        if (ec) {
            std::filesystem::remove(tmp, ec);
            throw Error(ErrorKind::Io, "cache rename failed: " + path.string());
        }
    }

    EmbeddingProviderSpec spec_;
    std::string cache_dir_;
    std::unique_ptr<EmbeddingBackend> backend_;
};

/// One-shot convenience over Embedder.
inline std::vector<EmbeddingVector> embed_texts(const EmbeddingProviderSpec& spec,
                                                const std::vector<std::string>& texts,
                                                const std::string& cache_dir = "") {
    return Embedder(spec, cache_dir).embed_texts(texts);
}

}  // namespace kpex
