#include "retkit/bm25.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

namespace retkit {

namespace {

constexpr char kMagic[4] = {'R', 'K', 'I', 'X'};
constexpr uint32_t kVersion = 1;

template <typename T>
void put(std::ostream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& in, const std::filesystem::path& p) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw IoError("truncated index file: " + p.string());
    return v;
}

void put_str(std::ostream& out, const std::string& s) {
    put<uint32_t>(out, static_cast<uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string get_str(std::istream& in, const std::filesystem::path& p) {
    uint32_t n = get<uint32_t>(in, p);
    std::string s(n, '\0');
    in.read(s.data(), n);
    if (!in) throw IoError("truncated index file: " + p.string());
    return s;
}

}  // namespace

Bm25Index Bm25Index::build(const std::vector<Document>& docs,
                           const Bm25Params& params,
                           const TokenizerOptions& tokenizer,
                           bool concat_title) {
    if (docs.empty()) throw Error("bm25: cannot build an index from an empty collection");
    if (params.k1 <= 0.0) throw Error("bm25: k1 must be > 0");
    if (params.b < 0.0 || params.b > 1.0) throw Error("bm25: b must lie in [0, 1]");

    Bm25Index idx;
    idx.params_ = params;
    idx.tokenizer_ = tokenizer;
    idx.concat_title_ = concat_title;
    idx.doc_ids_.reserve(docs.size());
    idx.doc_lengths_.reserve(docs.size());

    uint64_t total_len = 0;
    for (uint32_t i = 0; i < docs.size(); ++i) {
        const Document& d = docs[i];
        if (!idx.doc_index_.emplace(d.id, i).second)
            throw Error("bm25: duplicate document id `" + d.id + "`");
        std::vector<std::string> toks = tokenize(d.indexed_text(concat_title), tokenizer);
        idx.doc_ids_.push_back(d.id);
        idx.doc_lengths_.push_back(static_cast<uint32_t>(toks.size()));
        total_len += toks.size();

        std::map<std::string, uint32_t> tf;
        for (auto& t : toks) ++tf[t];
        for (auto& [term, count] : tf)
            idx.postings_[term].push_back({i, count});
    }
    idx.avgdl_ = static_cast<double>(total_len) / static_cast<double>(docs.size());
    return idx;
}

double Bm25Index::idf(const std::string& term) const {
    auto it = postings_.find(term);
    size_t df = it == postings_.end() ? 0 : it->second.size();
    double n = static_cast<double>(doc_ids_.size());
    return std::log((n - static_cast<double>(df) + 0.5) /
                        (static_cast<double>(df) + 0.5) +
                    1.0);
}

double Bm25Index::tf_component(uint32_t tf, uint32_t dl) const {
    double norm = params_.k1 * (1.0 - params_.b +
                                params_.b * static_cast<double>(dl) / avgdl_);
    return static_cast<double>(tf) * (params_.k1 + 1.0) /
           (static_cast<double>(tf) + norm);
}

double Bm25Index::score(const std::vector<std::string>& query_tokens,
                        const std::string& doc_id) const {
    auto it = doc_index_.find(doc_id);
    if (it == doc_index_.end()) throw Error("bm25: unknown doc id `" + doc_id + "`");
    uint32_t di = it->second;
    uint32_t dl = doc_lengths_[di];
    double s = 0.0;
    for (const auto& t : query_tokens) {
        auto pit = postings_.find(t);
        if (pit == postings_.end()) continue;
        const auto& plist = pit->second;
        auto p = std::lower_bound(plist.begin(), plist.end(), di,
                                  [](const Posting& a, uint32_t b) {
                                      return a.doc_index < b;
                                  });
        if (p == plist.end() || p->doc_index != di) continue;
        s += idf(t) * tf_component(p->tf, dl);
    }
    return s;
}

RankedList Bm25Index::search(const std::string& query_id, const std::string& text,
                             int k) const {
    if (k < 1) throw Error("bm25: search requires k >= 1");
    std::vector<std::string> toks = tokenize(text, tokenizer_);

    // Term-at-a-time accumulation in query-token order; matches score().
    std::vector<double> acc(doc_ids_.size(), 0.0);
    std::vector<char> touched(doc_ids_.size(), 0);
    for (const auto& t : toks) {
        auto pit = postings_.find(t);
        if (pit == postings_.end()) continue;
        double w = idf(t);
        for (const Posting& p : pit->second) {
            acc[p.doc_index] += w * tf_component(p.tf, doc_lengths_[p.doc_index]);
            touched[p.doc_index] = 1;
        }
    }
    std::vector<std::pair<std::string, double>> scored;
    for (size_t i = 0; i < acc.size(); ++i)
        if (touched[i]) scored.emplace_back(doc_ids_[i], acc[i]);
    return make_ranked_list(query_id, std::move(scored), static_cast<size_t>(k));
}

uint32_t Bm25Index::doc_length(const std::string& doc_id) const {
    auto it = doc_index_.find(doc_id);
    if (it == doc_index_.end()) throw Error("bm25: unknown doc id `" + doc_id + "`");
    return doc_lengths_[it->second];
}

const std::vector<Posting>* Bm25Index::postings(const std::string& term) const {
    auto it = postings_.find(term);
    return it == postings_.end() ? nullptr : &it->second;
}

void Bm25Index::save(const std::filesystem::path& p) const {
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open index file for writing: " + p.string());
    out.write(kMagic, 4);
    put(out, kVersion);
    put(out, params_.k1);
    put(out, params_.b);
    uint8_t flags = static_cast<uint8_t>(tokenizer_.lowercase) |
                    static_cast<uint8_t>(tokenizer_.drop_stopwords) << 1 |
                    static_cast<uint8_t>(tokenizer_.stem) << 2 |
                    static_cast<uint8_t>(concat_title_) << 3;
    put(out, flags);
    put<uint64_t>(out, doc_ids_.size());
    put(out, avgdl_);
    for (size_t i = 0; i < doc_ids_.size(); ++i) {
        put_str(out, doc_ids_[i]);
        put(out, doc_lengths_[i]);
    }
    put<uint64_t>(out, postings_.size());
    for (const auto& [term, plist] : postings_) {
        put_str(out, term);
        put<uint64_t>(out, plist.size());
        for (const Posting& p : plist) {
            put(out, p.doc_index);
            put(out, p.tf);
        }
    }
    if (!out) throw IoError("write failed: " + p.string());
}

Bm25Index Bm25Index::load(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IoError("cannot open index file: " + p.string());
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw IoError("not a bm25 index file: " + p.string());
    uint32_t version = get<uint32_t>(in, p);
    if (version != kVersion)
        throw IoError("unsupported index version " + std::to_string(version) +
                      " in " + p.string());
    Bm25Index idx;
    idx.params_.k1 = get<double>(in, p);
    idx.params_.b = get<double>(in, p);
    uint8_t flags = get<uint8_t>(in, p);
    idx.tokenizer_.lowercase = flags & 1;
    idx.tokenizer_.drop_stopwords = flags & 2;
    idx.tokenizer_.stem = flags & 4;
    idx.concat_title_ = flags & 8;
    uint64_t n_docs = get<uint64_t>(in, p);
    idx.avgdl_ = get<double>(in, p);
    idx.doc_ids_.reserve(n_docs);
    idx.doc_lengths_.reserve(n_docs);
    for (uint64_t i = 0; i < n_docs; ++i) {
        std::string id = get_str(in, p);
        uint32_t len = get<uint32_t>(in, p);
        idx.doc_index_.emplace(id, static_cast<uint32_t>(i));
        idx.doc_ids_.push_back(std::move(id));
        idx.doc_lengths_.push_back(len);
    }
    uint64_t n_terms = get<uint64_t>(in, p);
    for (uint64_t t = 0; t < n_terms; ++t) {
        std::string term = get_str(in, p);
        uint64_t n_postings = get<uint64_t>(in, p);
        std::vector<Posting> plist;
        plist.reserve(n_postings);
        for (uint64_t j = 0; j < n_postings; ++j) {
            Posting po;
            po.doc_index = get<uint32_t>(in, p);
            po.tf = get<uint32_t>(in, p);
            plist.push_back(po);
        }
        idx.postings_.emplace(std::move(term), std::move(plist));
    }
    return idx;
}

}  // namespace retkit
