#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace recur2d {

/// Arbitrary-precision rational, the exact-mode scalar. Every value is kept
/// canonical (gcd(num, den) = 1, den > 0), so equality is plain comparison
/// and text round-trips are exact.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Accepts "p" or "p/q" with optional sign, base 10.
inline Rational rational_from_text(const std::string& text) {
    Rational q;
    if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

/// Always emits the explicit "p/q" form ("5/1" rather than "5").
inline std::string rational_to_text(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace recur2d
