#include "retkit/tokenize.hpp"

#include <algorithm>
#include <unordered_set>

#include "retkit/stem.hpp"

namespace retkit {

namespace {

// Classic minimal English stopword list.
const std::vector<std::string> kStopwords = {
    "a",    "an",   "and",  "are",   "as",    "at",    "be",   "but",
    "by",   "for",  "if",   "in",    "into",  "is",    "it",   "no",
    "not",  "of",   "on",   "or",    "such",  "that",  "the",  "their",
    "then", "there", "these", "they", "this",  "to",    "was",  "will",
    "with",
};

const std::unordered_set<std::string>& stopword_set() {
    static const std::unordered_set<std::string> set(kStopwords.begin(),
                                                     kStopwords.end());
    return set;
}

inline bool ascii_alnum(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9');
}

inline char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

}  // namespace

const std::vector<std::string>& stopword_list() { return kStopwords; }

bool is_stopword(std::string_view token) {
    return stopword_set().count(std::string(token)) > 0;
}

std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerOptions& opts) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        std::string tok = std::move(cur);
        cur.clear();
        if (opts.drop_stopwords && is_stopword(tok)) return;
        if (opts.stem) tok = porter_stem(tok);
        out.push_back(std::move(tok));
    };
    for (char c : text) {
        if (ascii_alnum(c)) {
            cur.push_back(opts.lowercase ? ascii_lower(c) : c);
        } else {
            flush();
        }
    }
    flush();
    return out;
}

}  // namespace retkit
