#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "retkit/common.hpp"
#include "retkit/rewrite_types.hpp"

namespace retkit {

// ── Domain types ────────────────────────────────────────────────────────

struct Document {
    std::string id;
    std::optional<std::string> title;
    std::string text;

    bool operator==(const Document&) const = default;

    /// Text used for indexing/embedding: `title + " " + text` when a title
    /// is present and concat_title is set, body text otherwise.
    std::string indexed_text(bool concat_title) const;
};

struct Query {
    std::string id;
    std::string text;
    std::vector<std::string> answers;

    bool operator==(const Query&) const = default;
};

/// Graded relevance judgments: query id → doc id → grade (>= 0).
class Qrels {
public:
    using GradeMap = std::map<std::string, int>;

    void set(const std::string& query_id, const std::string& doc_id, int grade);
    int grade(const std::string& query_id, const std::string& doc_id) const;
    const GradeMap* for_query(const std::string& query_id) const;
    size_t relevant_count(const std::string& query_id) const;  // grade >= 1

    const std::map<std::string, GradeMap>& judgments() const { return judgments_; }
    bool operator==(const Qrels&) const = default;

private:
    std::map<std::string, GradeMap> judgments_;
};

/// Cached raw output + parsed record for one (query, method) pair.
struct RewriteCacheEntry {
    std::string query_id;
    RewriteMethod method = RewriteMethod::Ctp;
    std::string raw;
    RewriteRecord record;

    bool operator==(const RewriteCacheEntry&) const = default;
};

// ── Loaders / writers (BEIR JSONL + TREC-style TSV) ─────────────────────

std::vector<Document> load_corpus(const std::filesystem::path& p);
void save_corpus(const std::vector<Document>& docs, const std::filesystem::path& p);

std::vector<Query> load_queries(const std::filesystem::path& p);
void save_queries(const std::vector<Query>& queries, const std::filesystem::path& p);

struct QrelsLoadResult {
    Qrels qrels;
    size_t duplicate_pairs = 0;  // later entries overwrote earlier ones
};
QrelsLoadResult load_qrels(const std::filesystem::path& p);
void save_qrels(const Qrels& qrels, const std::filesystem::path& p);

std::vector<RewriteCacheEntry> load_cache(const std::filesystem::path& p);
void save_cache(const std::vector<RewriteCacheEntry>& entries,
                const std::filesystem::path& p);

}  // namespace retkit
