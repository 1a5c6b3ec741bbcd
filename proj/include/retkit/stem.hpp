#pragma once

#include <string>
#include <string_view>

namespace retkit {

/// Porter suffix-stripping stemmer (original 1980 rule set).
/// Operates on lowercase ASCII letters; words shorter than three
/// characters or containing non-letters are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace retkit
