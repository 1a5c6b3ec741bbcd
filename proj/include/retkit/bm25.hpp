#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "retkit/corpus.hpp"
#include "retkit/run.hpp"
#include "retkit/tokenize.hpp"

namespace retkit {

struct Bm25Params {
    double k1 = 1.2;
    double b = 0.75;

    bool operator==(const Bm25Params&) const = default;
};

struct Posting {
    uint32_t doc_index = 0;
    uint32_t tf = 0;

    bool operator==(const Posting&) const = default;
};

/// Okapi BM25 inverted index with the non-negative +1-smoothed idf:
///   idf(t) = ln((N - df + 0.5) / (df + 0.5) + 1)
///   score  = sum_t idf(t) * tf*(k1+1) / (tf + k1*(1 - b + b*dl/avgdl))
class Bm25Index {
public:
    Bm25Index() = default;

    /// Builds from a non-empty collection; deterministic.
    static Bm25Index build(const std::vector<Document>& docs,
                           const Bm25Params& params = {},
                           const TokenizerOptions& tokenizer = {},
                           bool concat_title = true);

    /// Sum over the given query tokens for one document (repeated query
    /// tokens contribute once per occurrence). Throws on unknown doc id.
    double score(const std::vector<std::string>& query_tokens,
                 const std::string& doc_id) const;

    double idf(const std::string& term) const;

    /// Tokenizes `text` with the index's tokenizer, scores all matching
    /// docs, returns the top k (score desc, doc id asc; zero scores
    /// dropped). Throws when k < 1.
    RankedList search(const std::string& query_id, const std::string& text,
                      int k) const;

    size_t doc_count() const { return doc_ids_.size(); }
    double avgdl() const { return avgdl_; }
    uint32_t doc_length(const std::string& doc_id) const;
    const std::vector<Posting>* postings(const std::string& term) const;
    const Bm25Params& params() const { return params_; }
    const TokenizerOptions& tokenizer() const { return tokenizer_; }
    bool concat_title() const { return concat_title_; }

    // Versioned binary persistence (magic + version + payload).
    void save(const std::filesystem::path& p) const;
    static Bm25Index load(const std::filesystem::path& p);

    bool operator==(const Bm25Index&) const = default;

private:
    double tf_component(uint32_t tf, uint32_t dl) const;

    Bm25Params params_;
    TokenizerOptions tokenizer_;
    bool concat_title_ = true;
    std::vector<std::string> doc_ids_;
    std::vector<uint32_t> doc_lengths_;
    std::map<std::string, uint32_t> doc_index_;  // id -> position
    std::map<std::string, std::vector<Posting>> postings_;
    double avgdl_ = 0.0;
};

}  // namespace retkit
