#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "retkit/common.hpp"

namespace retkit {

struct RankedEntry {
    std::string doc_id;
    double score = 0.0;
    int rank = 0;  // 1-based

    bool operator==(const RankedEntry&) const = default;
};

/// Per-query ranking; scores non-increasing, ranks consecutive from 1,
/// doc ids distinct.
struct RankedList {
    std::string query_id;
    std::vector<RankedEntry> entries;

    bool operator==(const RankedList&) const = default;
};

/// Sorts (score desc, doc id asc), assigns ranks 1..n, truncates to k.
/// Pairs with score 0 are dropped when drop_zero is set.
RankedList make_ranked_list(std::string query_id,
                            std::vector<std::pair<std::string, double>> scored,
                            size_t k, bool drop_zero = true);

// TREC run format: `qid Q0 docid rank score tag`, one line per entry.
void write_trec_run(const std::vector<RankedList>& runs,
                    const std::filesystem::path& p, const std::string& tag);
std::vector<RankedList> read_trec_run(const std::filesystem::path& p);

}  // namespace retkit
