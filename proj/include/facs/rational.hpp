#pragma once

#include <gmpxx.h>

#include <string>

#include "facs/error.hpp"

namespace facs {

// All coefficient arithmetic is exact; there is no floating-point mode.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

// Accepts "p" or "p/q" with optional sign; canonicalizes.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Requires an integer value that fits in long long.
long long to_int64(const Rational& r);

} // namespace facs
