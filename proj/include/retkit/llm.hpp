#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "retkit/common.hpp"

namespace retkit {

class LlmError : public Error {
public:
    explicit LlmError(const std::string& msg) : Error(msg) {}
};

/// Thread-safe wall-clock record, one sample per completed call.
class LatencyLog {
public:
    void record(double ms);
    size_t count() const;
    std::vector<double> snapshot() const;
    void reset();

private:
    mutable std::mutex mu_;
    std::vector<double> samples_ms_;
};

/// Chat-completion endpoint description. `api_key_env` names the
/// environment variable holding the key; keys never live in config files.
struct LlmEndpoint {
    std::string base_url;          // e.g. http://localhost:8000/v1
    std::string model;
    double temperature = 0.0;
    int max_tokens = 512;
    double timeout_s = 30.0;
    int max_retries = 3;           // additional attempts after the first
    int max_parallel = 4;
    double backoff_base_ms = 200;  // doubles per retry
    std::string api_key_env = "RETKIT_API_KEY";

    bool operator==(const LlmEndpoint&) const = default;
};

class LlmClient {
public:
    virtual ~LlmClient() = default;

    /// Returns the completion for a non-empty prompt. Wall-clock latency
    /// is recorded for every call, success or failure.
    std::string complete(std::string_view prompt);

    LatencyLog& latency() { return latency_; }
    const LatencyLog& latency() const { return latency_; }
    virtual int max_parallel() const { return 1; }

protected:
    virtual std::string do_complete(std::string_view prompt) = 0;

private:
    LatencyLog latency_;
};

/// Deterministic responder keyed by prompt fingerprint. A lookup miss is
/// a hard error, never a fallback. Instrumented with an in-flight gauge
/// so tests can observe concurrency bounds.
class MockLlm : public LlmClient {
public:
    MockLlm() = default;

    void add(std::string_view prompt, std::string completion);
    void add_fingerprint(uint64_t fingerprint, std::string completion);
    bool has(std::string_view prompt) const;
    size_t size() const { return responses_.size(); }

    size_t call_count() const { return calls_.load(); }
    int max_in_flight_seen() const { return max_in_flight_.load(); }
    void set_artificial_delay_ms(double ms) { delay_ms_ = ms; }
    int max_parallel() const override { return 1 << 16; }

    static MockLlm from_file(const std::filesystem::path& p);
    void save(const std::filesystem::path& p) const;

protected:
    std::string do_complete(std::string_view prompt) override;

private:
    std::map<uint64_t, std::string> responses_;
    std::atomic<size_t> calls_{0};
    std::atomic<int> in_flight_{0};
    std::atomic<int> max_in_flight_{0};
    double delay_ms_ = 0.0;
};

/// OpenAI-compatible chat-completions client. Retries transient failures
/// (connection errors, HTTP 429 and 5xx) with exponential backoff up to
/// the endpoint's retry budget.
class HttpLlm : public LlmClient {
public:
    explicit HttpLlm(LlmEndpoint endpoint);

    const LlmEndpoint& endpoint() const { return endpoint_; }
    int max_parallel() const override { return endpoint_.max_parallel; }
    size_t attempt_count() const { return attempts_.load(); }

protected:
    std::string do_complete(std::string_view prompt) override;

private:
    LlmEndpoint endpoint_;
    std::string host_;
    int port_ = 80;
    std::string path_prefix_;
    std::atomic<size_t> attempts_{0};
};

/// Fingerprint used to key mock responder files: fnv1a64 of the prompt.
uint64_t prompt_fingerprint(std::string_view prompt);

/// Runs fn over prompts with at most client.max_parallel() in flight;
/// results keep input order.
std::vector<std::string> complete_batch(LlmClient& client,
                                        const std::vector<std::string>& prompts);

}  // namespace retkit
