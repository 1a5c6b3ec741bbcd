#include "retkit/corpus.hpp"

#include <fstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace retkit {

using ordered_json = nlohmann::ordered_json;

std::string Document::indexed_text(bool concat_title) const {
    if (concat_title && title && !title->empty()) return *title + " " + text;
    return text;
}

void Qrels::set(const std::string& query_id, const std::string& doc_id, int grade) {
    if (query_id.empty() || doc_id.empty())
        throw Error("qrels: empty query or doc id");
    if (grade < 0) throw Error("qrels: negative grade for " + query_id + "/" + doc_id);
    judgments_[query_id][doc_id] = grade;
}

int Qrels::grade(const std::string& query_id, const std::string& doc_id) const {
    auto q = judgments_.find(query_id);
    if (q == judgments_.end()) return 0;
    auto d = q->second.find(doc_id);
    return d == q->second.end() ? 0 : d->second;
}

const Qrels::GradeMap* Qrels::for_query(const std::string& query_id) const {
    auto q = judgments_.find(query_id);
    return q == judgments_.end() ? nullptr : &q->second;
}

size_t Qrels::relevant_count(const std::string& query_id) const {
    const GradeMap* m = for_query(query_id);
    if (!m) return 0;
    size_t n = 0;
    for (const auto& [_, g] : *m)
        if (g >= 1) ++n;
    return n;
}

namespace {

ordered_json parse_json_line(const std::filesystem::path& p, size_t lineno,
                             std::string_view line) {
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw ParseError(p.string(), lineno, "malformed JSON object");
    return j;
}

std::string require_string(const ordered_json& j, const char* field,
                           const std::filesystem::path& p, size_t lineno) {
    auto it = j.find(field);
    if (it == j.end() || !it->is_string())
        throw ParseError(p.string(), lineno,
                         std::string("missing or non-string field `") + field + "`");
    return it->get<std::string>();
}

std::ofstream open_out(const std::filesystem::path& p) {
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open file for writing: " + p.string());
    return out;
}

}  // namespace

std::vector<Document> load_corpus(const std::filesystem::path& p) {
    std::vector<Document> docs;
    std::unordered_set<std::string> seen;
    for_each_line(p, [&](size_t lineno, std::string_view line) {
        if (trim(line).empty()) return;
        ordered_json j = parse_json_line(p, lineno, line);
        Document d;
        d.id = require_string(j, "_id", p, lineno);
        if (d.id.empty()) throw ParseError(p.string(), lineno, "empty `_id`");
        d.text = require_string(j, "text", p, lineno);
        if (auto it = j.find("title"); it != j.end() && it->is_string())
            d.title = it->get<std::string>();
        if (!seen.insert(d.id).second)
            throw ParseError(p.string(), lineno, "duplicate document id `" + d.id + "`");
        docs.push_back(std::move(d));
    });
    return docs;
}

void save_corpus(const std::vector<Document>& docs, const std::filesystem::path& p) {
    auto out = open_out(p);
    for (const auto& d : docs) {
        ordered_json j;
        j["_id"] = d.id;
        if (d.title) j["title"] = *d.title;
        j["text"] = d.text;
        out << j.dump() << '\n';
    }
    if (!out) throw IoError("write failed: " + p.string());
}

std::vector<Query> load_queries(const std::filesystem::path& p) {
    std::vector<Query> queries;
    std::unordered_set<std::string> seen;
    for_each_line(p, [&](size_t lineno, std::string_view line) {
        if (trim(line).empty()) return;
        ordered_json j = parse_json_line(p, lineno, line);
        Query q;
        q.id = require_string(j, "_id", p, lineno);
        if (q.id.empty()) throw ParseError(p.string(), lineno, "empty `_id`");
        q.text = require_string(j, "text", p, lineno);
        if (q.text.empty()) throw ParseError(p.string(), lineno, "empty `text`");
        auto read_answers = [&](const ordered_json& node) {
            if (node.is_array()) {
                for (const auto& a : node)
                    if (a.is_string()) q.answers.push_back(a.get<std::string>());
            } else if (node.is_string()) {
                q.answers.push_back(node.get<std::string>());
            }
        };
        if (auto it = j.find("answers"); it != j.end()) read_answers(*it);
        if (auto it = j.find("metadata"); it != j.end() && it->is_object()) {
            if (auto a = it->find("answers"); a != it->end()) read_answers(*a);
            if (auto a = it->find("answer"); a != it->end()) read_answers(*a);
        }
        if (!seen.insert(q.id).second)
            throw ParseError(p.string(), lineno, "duplicate query id `" + q.id + "`");
        queries.push_back(std::move(q));
    });
    return queries;
}

void save_queries(const std::vector<Query>& queries, const std::filesystem::path& p) {
    auto out = open_out(p);
    for (const auto& q : queries) {
        ordered_json j;
        j["_id"] = q.id;
        j["text"] = q.text;
        if (!q.answers.empty()) j["answers"] = q.answers;
        out << j.dump() << '\n';
    }
    if (!out) throw IoError("write failed: " + p.string());
}

QrelsLoadResult load_qrels(const std::filesystem::path& p) {
    QrelsLoadResult result;
    for_each_line(p, [&](size_t lineno, std::string_view line) {
        if (trim(line).empty()) return;
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 3)
            throw ParseError(p.string(), lineno,
                             "expected 3 tab-separated columns, got " +
                                 std::to_string(cols.size()));
        // Optional header row: third column is non-numeric.
        if (lineno == 1) {
            const std::string& s = cols[2];
            bool numeric = !s.empty() &&
                           s.find_first_not_of("0123456789-") == std::string::npos;
            if (!numeric) return;
        }
        int grade = 0;
        try {
            size_t pos = 0;
            grade = std::stoi(cols[2], &pos);
            if (pos != cols[2].size()) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            throw ParseError(p.string(), lineno, "non-integer grade `" + cols[2] + "`");
        }
        if (grade < 0)
            throw ParseError(p.string(), lineno,
                             "negative grade " + std::to_string(grade));
        if (cols[0].empty() || cols[1].empty())
            throw ParseError(p.string(), lineno, "empty query or doc id");
        if (result.qrels.for_query(cols[0]) &&
            result.qrels.for_query(cols[0])->count(cols[1]))
            ++result.duplicate_pairs;  // last write wins
        result.qrels.set(cols[0], cols[1], grade);
    });
    return result;
}

void save_qrels(const Qrels& qrels, const std::filesystem::path& p) {
    auto out = open_out(p);
    out << "query-id\tcorpus-id\tscore\n";
    for (const auto& [qid, grades] : qrels.judgments())
        for (const auto& [did, g] : grades)
            out << qid << '\t' << did << '\t' << g << '\n';
    if (!out) throw IoError("write failed: " + p.string());
}

std::vector<RewriteCacheEntry> load_cache(const std::filesystem::path& p) {
    std::vector<RewriteCacheEntry> entries;
    std::unordered_set<std::string> seen;
    for_each_line(p, [&](size_t lineno, std::string_view line) {
        if (trim(line).empty()) return;
        ordered_json j = parse_json_line(p, lineno, line);
        RewriteCacheEntry e;
        e.query_id = require_string(j, "query_id", p, lineno);
        e.method = method_from_tag(require_string(j, "method", p, lineno));
        e.raw = require_string(j, "raw", p, lineno);
        e.record.query_id = e.query_id;
        e.record.method = e.method;
        auto steps = j.find("steps");
        if (steps == j.end() || !steps->is_array())
            throw ParseError(p.string(), lineno, "missing or non-array field `steps`");
        for (const auto& s : *steps) {
            if (!s.is_string())
                throw ParseError(p.string(), lineno, "non-string step");
            e.record.steps.push_back(s.get<std::string>());
        }
        auto nf = j.find("none_flag");
        if (nf == j.end() || !nf->is_boolean())
            throw ParseError(p.string(), lineno, "missing or non-bool field `none_flag`");
        e.record.none_flag = nf->get<bool>();
        e.record.qr = require_string(j, "qr", p, lineno);
        std::string key = e.query_id + "\x1f" + std::string(method_tag(e.method));
        if (!seen.insert(key).second)
            throw ParseError(p.string(), lineno,
                             "duplicate cache key (" + e.query_id + ", " +
                                 std::string(method_tag(e.method)) + ")");
        entries.push_back(std::move(e));
    });
    return entries;
}

void save_cache(const std::vector<RewriteCacheEntry>& entries,
                const std::filesystem::path& p) {
    auto out = open_out(p);
    for (const auto& e : entries) {
        ordered_json j;
        j["query_id"] = e.query_id;
        j["method"] = std::string(method_tag(e.method));
        j["raw"] = e.raw;
        j["steps"] = e.record.steps;
        j["none_flag"] = e.record.none_flag;
        j["qr"] = e.record.qr;
        out << j.dump() << '\n';
    }
    if (!out) throw IoError("write failed: " + p.string());
}

}  // namespace retkit
