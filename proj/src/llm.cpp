#include "retkit/llm.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

namespace retkit {

using ordered_json = nlohmann::ordered_json;
using clock = std::chrono::steady_clock;

// ── LatencyLog ──────────────────────────────────────────────────────────

void LatencyLog::record(double ms) {
    std::lock_guard<std::mutex> lock(mu_);
    samples_ms_.push_back(ms);
}

size_t LatencyLog::count() const {
    std::lock_guard<std::mutex> lock(mu_);
    return samples_ms_.size();
}

std::vector<double> LatencyLog::snapshot() const {
    std::lock_guard<std::mutex> lock(mu_);
    return samples_ms_;
}

void LatencyLog::reset() {
    std::lock_guard<std::mutex> lock(mu_);
    samples_ms_.clear();
}

// ── LlmClient ───────────────────────────────────────────────────────────

std::string LlmClient::complete(std::string_view prompt) {
    if (prompt.empty()) throw LlmError("complete: empty prompt");
    auto start = clock::now();
    struct Recorder {
        LatencyLog& log;
        clock::time_point start;
        ~Recorder() {
            log.record(std::chrono::duration<double, std::milli>(clock::now() - start)
                           .count());
        }
    } recorder{latency_, start};
    return do_complete(prompt);
}

uint64_t prompt_fingerprint(std::string_view prompt) { return fnv1a64(prompt); }

// ── MockLlm ─────────────────────────────────────────────────────────────

void MockLlm::add(std::string_view prompt, std::string completion) {
    responses_[prompt_fingerprint(prompt)] = std::move(completion);
}

void MockLlm::add_fingerprint(uint64_t fingerprint, std::string completion) {
    responses_[fingerprint] = std::move(completion);
}

bool MockLlm::has(std::string_view prompt) const {
    return responses_.count(prompt_fingerprint(prompt)) > 0;
}

std::string MockLlm::do_complete(std::string_view prompt) {
    int now = in_flight_.fetch_add(1) + 1;
    int seen = max_in_flight_.load();
    while (now > seen && !max_in_flight_.compare_exchange_weak(seen, now)) {
    }
    calls_.fetch_add(1);
    if (delay_ms_ > 0)
        std::this_thread::sleep_for(std::chrono::duration<double, std::milli>(delay_ms_));
    auto it = responses_.find(prompt_fingerprint(prompt));
    in_flight_.fetch_sub(1);
    if (it == responses_.end())
        throw LlmError("mock miss: no canned completion for fingerprint " +
                       fingerprint_hex(prompt) + " (prompt starts: \"" +
                       std::string(prompt.substr(0, 60)) + "\")");
    return it->second;
}

MockLlm MockLlm::from_file(const std::filesystem::path& p) {
    MockLlm mock;
    for_each_line(p, [&](size_t lineno, std::string_view line) {
        if (trim(line).empty()) return;
        ordered_json j = ordered_json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("fingerprint") ||
            !j.contains("completion") || !j["fingerprint"].is_string() ||
            !j["completion"].is_string())
            throw ParseError(p.string(), lineno,
                             "expected {\"fingerprint\": hex, \"completion\": text}");
        std::string hex = j["fingerprint"].get<std::string>();
        uint64_t fp = 0;
        try {
            fp = std::stoull(hex, nullptr, 16);
        } catch (const std::exception&) {
            throw ParseError(p.string(), lineno, "bad fingerprint hex `" + hex + "`");
        }
        mock.responses_[fp] = j["completion"].get<std::string>();
    });
    return mock;
}

void MockLlm::save(const std::filesystem::path& p) const {
    std::string out;
    for (const auto& [fp, completion] : responses_) {
        char buf[17];
        std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fp));
        ordered_json j;
        j["fingerprint"] = std::string(buf);
        j["completion"] = completion;
        out += j.dump();
        out += '\n';
    }
    write_text_file(p, out);
}

// ── HttpLlm ─────────────────────────────────────────────────────────────

namespace {

// Splits http://host:port/prefix into pieces httplib understands.
void parse_base_url(const std::string& url, std::string& scheme_host_port,
                    std::string& path_prefix) {
    size_t scheme = url.find("://");
    if (scheme == std::string::npos)
        throw LlmError("endpoint base_url must start with http:// or https://: " + url);
    size_t path = url.find('/', scheme + 3);
    if (path == std::string::npos) {
        scheme_host_port = url;
        path_prefix.clear();
    } else {
        scheme_host_port = url.substr(0, path);
        path_prefix = url.substr(path);
    }
    while (!path_prefix.empty() && path_prefix.back() == '/') path_prefix.pop_back();
}

}  // namespace

HttpLlm::HttpLlm(LlmEndpoint endpoint) : endpoint_(std::move(endpoint)) {
    if (endpoint_.max_retries < 0) throw LlmError("retry budget must be >= 0");
    if (endpoint_.max_parallel < 1) throw LlmError("max_parallel must be >= 1");
    std::string scheme_host_port;
    parse_base_url(endpoint_.base_url, scheme_host_port, path_prefix_);
    host_ = scheme_host_port;
}

std::string HttpLlm::do_complete(std::string_view prompt) {
    ordered_json body;
    body["model"] = endpoint_.model;
    body["messages"] = ordered_json::array(
        {ordered_json{{"role", "user"}, {"content", std::string(prompt)}}});
    body["temperature"] = endpoint_.temperature;
    body["max_tokens"] = endpoint_.max_tokens;
    const std::string payload = body.dump();
    const std::string url_path = path_prefix_ + "/chat/completions";

    const char* key = nullptr;
    if (!endpoint_.api_key_env.empty()) key = std::getenv(endpoint_.api_key_env.c_str());

    std::string last_error;
    for (int attempt = 0; attempt <= endpoint_.max_retries; ++attempt) {
        if (attempt > 0) {
            double delay = endpoint_.backoff_base_ms * static_cast<double>(1u << (attempt - 1));
            std::this_thread::sleep_for(std::chrono::duration<double, std::milli>(delay));
        }
        attempts_.fetch_add(1);
        httplib::Client cli(host_);
        cli.set_connection_timeout(std::chrono::duration<double>(endpoint_.timeout_s));
        cli.set_read_timeout(std::chrono::duration<double>(endpoint_.timeout_s));
        httplib::Headers headers;
        if (key) headers.emplace("Authorization", std::string("Bearer ") + key);
        auto res = cli.Post(url_path, headers, payload, "application/json");
        if (!res) {
            last_error = "connection error: " + httplib::to_string(res.error());
            continue;  // retryable
        }
        if (res->status == 200) {
            ordered_json j = ordered_json::parse(res->body, nullptr, false);
            if (j.is_discarded())
                throw LlmError("chat-completions: response is not JSON");
            try {
                return j.at("choices").at(0).at("message").at("content")
                    .get<std::string>();
            } catch (const std::exception&) {
                throw LlmError("chat-completions: unexpected response shape: " +
                               res->body.substr(0, 200));
            }
        }
        if (res->status == 429 || res->status >= 500) {
            last_error = "HTTP " + std::to_string(res->status);
            continue;  // retryable
        }
        throw LlmError("chat-completions: HTTP " + std::to_string(res->status) + ": " +
                       res->body.substr(0, 200));
    }
    throw LlmError("chat-completions: retries exhausted after " +
                   std::to_string(endpoint_.max_retries + 1) + " attempts (" +
                   last_error + ")");
}

// ── Batch helper ────────────────────────────────────────────────────────

std::vector<std::string> complete_batch(LlmClient& client,
                                        const std::vector<std::string>& prompts) {
    std::vector<std::string> out(prompts.size());
    parallel_for(prompts.size(), client.max_parallel(),
                 [&](size_t i) { out[i] = client.complete(prompts[i]); });
    return out;
}

}  // namespace retkit
