#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "retkit/common.hpp"

namespace retkit {

enum class RewriteMethod { Ctp, Q2d, Q2e, Q2c };

/// Lowercase tag used in CLI flags, cache files, and report names.
std::string_view method_tag(RewriteMethod m);
RewriteMethod method_from_tag(std::string_view tag);

/// One rewritten query. CTP records carry three step texts; the baseline
/// methods carry a single body. `qr` is the composed rewrite string that
/// feeds the retriever-input composers.
struct RewriteRecord {
    std::string query_id;
    RewriteMethod method = RewriteMethod::Ctp;
    std::vector<std::string> steps;
    bool none_flag = false;
    std::string qr;

    bool operator==(const RewriteRecord&) const = default;
};

}  // namespace retkit
