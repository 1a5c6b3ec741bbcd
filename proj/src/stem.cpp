#include "retkit/stem.hpp"

#include <array>
#include <utility>

namespace retkit {

namespace {

bool is_vowel_letter(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// y counts as a vowel when preceded by a consonant; a leading y is a consonant.
bool is_consonant(const std::string& w, size_t i) {
    char c = w[i];
    if (is_vowel_letter(c)) return false;
    if (c == 'y') return i == 0 ? true : !is_consonant(w, i - 1);
    return true;
}

// m of the [C](VC)^m[V] decomposition.
int measure(const std::string& w) {
    int m = 0;
    size_t i = 0;
    size_t n = w.size();
    while (i < n && is_consonant(w, i)) ++i;
    for (;;) {
        while (i < n && !is_consonant(w, i)) ++i;
        if (i == n) return m;
        while (i < n && is_consonant(w, i)) ++i;
        ++m;
        if (i == n) return m;
    }
}

bool has_vowel(const std::string& w) {
    for (size_t i = 0; i < w.size(); ++i)
        if (!is_consonant(w, i)) return true;
    return false;
}

bool ends_double_consonant(const std::string& w) {
    size_t n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// *o: ends consonant-vowel-consonant where the final consonant is not w, x, y.
bool ends_cvc(const std::string& w) {
    size_t n = w.size();
    if (n < 3) return false;
    if (!is_consonant(w, n - 3) || is_consonant(w, n - 2) || !is_consonant(w, n - 1))
        return false;
    char c = w[n - 1];
    return c != 'w' && c != 'x' && c != 'y';
}

bool ends(const std::string& w, std::string_view suf) {
    return w.size() >= suf.size() &&
           w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

// Within one step the longest matching suffix is chosen first; if its
// measure condition fails, no rule of the step applies.
void apply_longest(std::string& w, const Rule* rules, size_t n, int min_m) {
    const Rule* best = nullptr;
    for (size_t i = 0; i < n; ++i)
        if (ends(w, rules[i].suffix) &&
            (!best || rules[i].suffix.size() > best->suffix.size()))
            best = &rules[i];
    if (!best) return;
    std::string base = w.substr(0, w.size() - best->suffix.size());
    if (measure(base) > min_m) w = base + std::string(best->replacement);
}

void step1a(std::string& w) {
    if (ends(w, "sses")) w.erase(w.size() - 2);
    else if (ends(w, "ies")) w.erase(w.size() - 2);
    else if (ends(w, "ss")) {}
    else if (ends(w, "s")) w.pop_back();
}

void step1b(std::string& w) {
    if (ends(w, "eed")) {
        if (measure(w.substr(0, w.size() - 3)) > 0) w.pop_back();
        return;
    }
    bool stripped = false;
    if (ends(w, "ed") && has_vowel(w.substr(0, w.size() - 2))) {
        w.erase(w.size() - 2);
        stripped = true;
    } else if (ends(w, "ing") && has_vowel(w.substr(0, w.size() - 3))) {
        w.erase(w.size() - 3);
        stripped = true;
    }
    if (!stripped) return;
    if (ends(w, "at") || ends(w, "bl") || ends(w, "iz")) {
        w.push_back('e');
    } else if (ends_double_consonant(w)) {
        char c = w.back();
        if (c != 'l' && c != 's' && c != 'z') w.pop_back();
    } else if (measure(w) == 1 && ends_cvc(w)) {
        w.push_back('e');
    }
}

void step1c(std::string& w) {
    if (ends(w, "y") && has_vowel(w.substr(0, w.size() - 1))) w.back() = 'i';
}

constexpr std::array<Rule, 20> kStep2{{
    {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
    {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},   {"entli", "ent"},
    {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
    {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
    {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
}};

constexpr std::array<Rule, 7> kStep3{{
    {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
    {"ical", "ic"},  {"ful", ""},   {"ness", ""},
}};

constexpr std::array<std::string_view, 19> kStep4{{
    "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement", "ment",
    "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize",
}};

void step4(std::string& w) {
    std::string_view best;
    for (std::string_view suf : kStep4)
        if (ends(w, suf) && suf.size() > best.size()) best = suf;
    if (best.empty()) return;
    std::string base = w.substr(0, w.size() - best.size());
    bool ok = measure(base) > 1;
    if (best == "ion") ok = ok && (ends(base, "s") || ends(base, "t"));
    if (ok) w = base;
}

void step5a(std::string& w) {
    if (!ends(w, "e")) return;
    std::string base = w.substr(0, w.size() - 1);
    int m = measure(base);
    if (m > 1 || (m == 1 && !ends_cvc(base))) w = base;
}

void step5b(std::string& w) {
    if (measure(w) > 1 && ends_double_consonant(w) && w.back() == 'l') w.pop_back();
}

}  // namespace

std::string porter_stem(std::string_view word) {
    std::string w(word);
    if (w.size() <= 2) return w;
    for (char c : w)
        if (c < 'a' || c > 'z') return w;
    step1a(w);
    step1b(w);
    step1c(w);
    apply_longest(w, kStep2.data(), kStep2.size(), 0);
    apply_longest(w, kStep3.data(), kStep3.size(), 0);
    step4(w);
    step5a(w);
    step5b(w);
    return w;
}

}  // namespace retkit
