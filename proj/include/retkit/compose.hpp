#pragma once

#include <string>
#include <string_view>

namespace retkit {

/// Sparse retriever input: the query repeated three times, then the
/// rewrite, joined by single spaces. Empty rewrites degrade to the bare
/// triple repetition. Throws on an empty query.
std::string compose_sparse(std::string_view query_text, std::string_view qr_text);

/// Dense retriever input: `query [SEP] rewrite`; an empty rewrite yields
/// the query unchanged (no dangling separator). Throws on an empty query.
std::string compose_dense(std::string_view query_text, std::string_view qr_text);

inline constexpr std::string_view kDenseSeparator = "[SEP]";

}  // namespace retkit
