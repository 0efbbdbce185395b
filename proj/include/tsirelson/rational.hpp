#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tsirelson {

// Exact rational scalar with arbitrary-precision integer parts.  mpq_class
// keeps values canonical (denominator > 0, gcd(|num|, den) = 1) through all
// arithmetic; raw num/den construction must go through make_rational, which
// canonicalizes and rejects zero denominators.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "n" or "n/d" with optional sign on the numerator.
Rational parse_rational(const std::string& text);

// Always "num/den", including unit denominators ("2/1").
std::string rational_str(const Rational& q);

}  // namespace tsirelson
