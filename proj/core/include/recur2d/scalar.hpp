#pragma once

#include "recur2d/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace recur2d {

enum class ScalarMode { exact, f64 };

inline const char* mode_name(ScalarMode m) {
    return m == ScalarMode::exact ? "exact" : "f64";
}

inline ScalarMode parse_mode(const std::string& s) {
    if (s == "exact") return ScalarMode::exact;
    if (s == "f64") return ScalarMode::f64;
    throw std::invalid_argument("unknown scalar mode '" + s + "' (expected exact|f64)");
}

// Approximate-mode comparisons: relative tolerance with an absolute floor.
inline constexpr double rel_tolerance = 1e-9;
inline constexpr double abs_tolerance = 1e-12;

/// Per-scalar-type glue: constants, (tolerance) equality, text round-trip.
/// Two instantiations ship: binary64 ("f64") and Rational ("exact").
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr bool is_exact = false;
    static constexpr ScalarMode mode = ScalarMode::f64;

    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_int(long v) { return static_cast<double>(v); }
    static double abs(double v) { return std::fabs(v); }
    static double to_double(double v) { return v; }

    // NaN compares unequal to everything, including itself; two infinities
    // are not considered equal either (|inf - inf| is NaN).
    static bool equal(double x, double y) {
        const double diff = std::fabs(x - y);
        const double scale = std::max(std::fabs(x), std::fabs(y));
        return diff <= std::max(abs_tolerance, rel_tolerance * scale);
    }

    // 17 significant digits round-trip binary64 exactly.
    static std::string to_text(double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }

    static double from_text(const std::string& s) {
        const char* begin = s.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin || *end != '\0')
            throw std::invalid_argument("not a number: '" + s + "'");
        return v;
    }
};

template <>
struct ScalarTraits<Rational> {
    static constexpr bool is_exact = true;
    static constexpr ScalarMode mode = ScalarMode::exact;

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long v) { return Rational(v); }
    static Rational abs(const Rational& v) { return ::abs(v); }
    static double to_double(const Rational& v) { return v.get_d(); }

    static bool equal(const Rational& x, const Rational& y) { return x == y; }

    static std::string to_text(const Rational& v) { return rational_to_text(v); }
    static Rational from_text(const std::string& s) { return rational_from_text(s); }
};

}  // namespace recur2d
