#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace retkit {

// ── Errors ──────────────────────────────────────────────────────────────

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

/// Parse failure in a line-oriented input file. Carries the 1-based line.
class ParseError : public Error {
public:
    ParseError(const std::string& file, size_t line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what),
          file_(file), line_(line) {}
    const std::string& file() const { return file_; }
    size_t line() const { return line_; }

private:
    std::string file_;
    size_t line_;
};

// ── String helpers ──────────────────────────────────────────────────────

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);
std::vector<std::string> split(std::string_view s, char sep);

/// Case-insensitive search for `needle` in `haystack` at or after `from`.
/// Returns std::string::npos when absent. ASCII case folding only.
size_t ifind(std::string_view haystack, std::string_view needle, size_t from = 0);

/// Lowercase, map every non-alphanumeric byte to a space, collapse runs,
/// trim. The shared normalization for answer-containment checks.
std::string normalize_answer_text(std::string_view s);

/// True when normalize_answer_text(needle) occurs as a substring of
/// normalize_answer_text(haystack). Empty needles never match.
bool contains_normalized(std::string_view haystack, std::string_view needle);

// ── Fingerprints ────────────────────────────────────────────────────────

/// FNV-1a over the raw bytes. Stable across platforms and runs.
uint64_t fnv1a64(std::string_view bytes);

/// 16-char lowercase hex rendering of fnv1a64, used as the prompt key in
/// mock responder files and embedding caches.
std::string fingerprint_hex(std::string_view text);

// ── Small formatting helpers (no std::format on this toolchain) ────────

std::string fmt_double(double v, int decimals);

// ── File helpers ────────────────────────────────────────────────────────

std::string read_text_file(const std::filesystem::path& p);
void write_text_file(const std::filesystem::path& p, std::string_view content);

/// Reads a file line by line, invoking fn(line_number, line) with 1-based
/// numbering. Universal-newline: strips one trailing '\r'.
void for_each_line(const std::filesystem::path& p,
                   const std::function<void(size_t, std::string_view)>& fn);

// ── Bounded parallel map ────────────────────────────────────────────────

/// Applies fn to indices [0, n) on at most max_parallel worker threads.
/// Results land at their input index; the first exception is rethrown
/// after all workers join.
void parallel_for(size_t n, int max_parallel,
                  const std::function<void(size_t)>& fn);

}  // namespace retkit
