#include "retkit/run.hpp"

#include <algorithm>
#include <fstream>
#include <map>

namespace retkit {

RankedList make_ranked_list(std::string query_id,
                            std::vector<std::pair<std::string, double>> scored,
                            size_t k, bool drop_zero) {
    if (drop_zero) {
        std::erase_if(scored, [](const auto& e) { return e.second == 0.0; });
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (scored.size() > k) scored.resize(k);
    RankedList out;
    out.query_id = std::move(query_id);
    out.entries.reserve(scored.size());
    int rank = 1;
    for (auto& [id, score] : scored)
        out.entries.push_back({std::move(id), score, rank++});
    return out;
}

void write_trec_run(const std::vector<RankedList>& runs,
                    const std::filesystem::path& p, const std::string& tag) {
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open run file for writing: " + p.string());
    for (const auto& run : runs)
        for (const auto& e : run.entries)
            out << run.query_id << " Q0 " << e.doc_id << ' ' << e.rank << ' '
                << fmt_double(e.score, 6) << ' ' << tag << '\n';
    if (!out) throw IoError("write failed: " + p.string());
}

std::vector<RankedList> read_trec_run(const std::filesystem::path& p) {
    std::vector<RankedList> runs;
    std::map<std::string, size_t> index;
    for_each_line(p, [&](size_t lineno, std::string_view line) {
        if (trim(line).empty()) return;
        std::vector<std::string> cols;
        std::string cur;
        for (char c : line) {
            if (c == ' ' || c == '\t') {
                if (!cur.empty()) cols.push_back(std::move(cur)), cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) cols.push_back(std::move(cur));
        if (cols.size() != 6)
            throw ParseError(p.string(), lineno,
                             "expected 6 whitespace-separated run columns, got " +
                                 std::to_string(cols.size()));
        RankedEntry e;
        e.doc_id = cols[2];
        try {
            e.rank = std::stoi(cols[3]);
            e.score = std::stod(cols[4]);
        } catch (const std::exception&) {
            throw ParseError(p.string(), lineno, "bad rank or score");
        }
        auto [it, inserted] = index.try_emplace(cols[0], runs.size());
        if (inserted) runs.push_back({cols[0], {}});
        runs[it->second].entries.push_back(std::move(e));
    });
    for (auto& run : runs) {
        std::sort(run.entries.begin(), run.entries.end(),
                  [](const auto& a, const auto& b) { return a.rank < b.rank; });
        for (size_t i = 0; i < run.entries.size(); ++i)
            if (run.entries[i].rank != static_cast<int>(i) + 1)
                throw Error("run file " + p.string() + ": ranks for query " +
                            run.query_id + " are not consecutive from 1");
    }
    return runs;
}

}  // namespace retkit
