#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jetcoh {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "3/2", "-1", "0"
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Accepts "n" or "n/d" with optional leading '-'. Throws InvalidArgument.
Rational parse_rational(std::string_view text);

}  // namespace jetcoh
