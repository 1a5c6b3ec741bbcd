#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace retkit {

/// Document/query tokenization pipeline; every stage can be switched off.
struct TokenizerOptions {
    bool lowercase = true;
    bool drop_stopwords = true;
    bool stem = true;

    bool operator==(const TokenizerOptions&) const = default;
};

/// Lowercase, split on non-alphanumeric runs (ASCII), drop stopwords from
/// the shipped English list, Porter-stem. Digit-bearing tokens pass
/// through the stemmer unchanged.
std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerOptions& opts = {});

bool is_stopword(std::string_view lowercase_token);

/// The shipped stopword list (lowercase, sorted).
const std::vector<std::string>& stopword_list();

}  // namespace retkit
