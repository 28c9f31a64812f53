#pragma once

// Exact rational scalars. Every coefficient in the library is a GMP rational;
// there is no floating point anywhere in the algebra.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace braidlift {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (whitespace around the token is ignored).
inline Rational parse_rational(std::string_view text) {
    auto first = text.find_first_not_of(" \t");
    auto last = text.find_last_not_of(" \t");
    if (first == std::string_view::npos) {
        throw std::invalid_argument("empty rational literal");
    }
    std::string token(text.substr(first, last - first + 1));
    Rational value;
    if (value.set_str(token, 10) != 0) {
        throw std::invalid_argument("malformed rational literal '" + token + "'");
    }
    if (value.get_den() == 0) {
        throw std::invalid_argument("zero denominator in '" + token + "'");
    }
    value.canonicalize();
    return value;
}

inline std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace braidlift
