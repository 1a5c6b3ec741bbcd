#include "retkit/compose.hpp"

#include "retkit/common.hpp"

namespace retkit {

std::string compose_sparse(std::string_view query_text, std::string_view qr_text) {
    if (query_text.empty()) throw Error("compose_sparse: empty query text");
    std::string out;
    out.reserve(query_text.size() * 3 + qr_text.size() + 3);
    out.append(query_text);
    out.push_back(' ');
    out.append(query_text);
    out.push_back(' ');
    out.append(query_text);
    if (!qr_text.empty()) {
        out.push_back(' ');
        out.append(qr_text);
    }
    return out;
}

std::string compose_dense(std::string_view query_text, std::string_view qr_text) {
    if (query_text.empty()) throw Error("compose_dense: empty query text");
    if (qr_text.empty()) return std::string(query_text);
    std::string out;
    out.reserve(query_text.size() + qr_text.size() + kDenseSeparator.size() + 2);
    out.append(query_text);
    out.push_back(' ');
    out.append(kDenseSeparator);
    out.push_back(' ');
    out.append(qr_text);
    return out;
}

}  // namespace retkit
