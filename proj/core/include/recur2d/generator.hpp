#pragma once

#include "recur2d/problem.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace recur2d {

/// PRNG recorded in CSV metadata. Instances are deterministic for a fixed
/// (n, seed, scalar type) within this implementation; cross-implementation
/// equality is not promised.
inline constexpr const char* generator_name = "mt19937_64";

/// Deterministic random instance. Draw order is fixed: a, b, c row-major,
/// then north (j = 1..n), then west (i = 1..n). f64 values are uniform in
/// [-1, 1) built from the top 53 bits of each draw; exact values are
/// rationals num/den with num in [-9, 9] and den in [1, 9].
template <class S>
RecurrenceProblem<S> generate_instance(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("instance size must be >= 1, got " + std::to_string(n));
    std::mt19937_64 rng(seed);
    const auto draw = [&rng]() -> S {
        if constexpr (ScalarTraits<S>::is_exact) {
            const long num = long(rng() % 19) - 9;
            const long den = long(rng() % 9) + 1;
            return make_rational(num, den);
        } else {
            const double unit = double(rng() >> 11) * 0x1.0p-53;
            return 2.0 * unit - 1.0;
        }
    };
    RecurrenceProblem<S> p{n, Grid<S>(n), Grid<S>(n), Grid<S>(n), {}, {}};
    for (Grid<S>* g : {&p.a, &p.b, &p.c})
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) g->at(i, j) = draw();
    p.north.reserve(std::size_t(n));
    for (int j = 1; j <= n; ++j) p.north.push_back(draw());
    p.west.reserve(std::size_t(n));
    for (int i = 1; i <= n; ++i) p.west.push_back(draw());
    return p;
}

/// Instance whose coefficients encode their own identity, for structural
/// golden tests and readable `reduce` dumps:
///   a(i,j) = 10000 + 100·i + j      b(i,j) = 20000 + 100·i + j
///   c(i,j) = 30000 + 100·i + j      north(j) = 40000 + j
///   west(i) = 50000 + 100·i
/// All values are distinct integers, so any transposed or misplaced
/// subscript changes the result. Requires n ≤ 99 to keep the encoding
/// collision-free.
template <class S>
RecurrenceProblem<S> labeled_instance(int n) {
    if (n < 1 || n > 99)
        throw std::invalid_argument("labeled instance supports 1 <= n <= 99, got " + std::to_string(n));
    const auto value = [](long tag, long i, long j) {
        return ScalarTraits<S>::from_int(tag * 10000 + 100 * i + j);
    };
    RecurrenceProblem<S> p{n, Grid<S>(n), Grid<S>(n), Grid<S>(n), {}, {}};
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            p.a.at(i, j) = value(1, i, j);
            p.b.at(i, j) = value(2, i, j);
            p.c.at(i, j) = value(3, i, j);
        }
    }
    for (int j = 1; j <= n; ++j) p.north.push_back(value(4, 0, j));
    for (int i = 1; i <= n; ++i) p.west.push_back(value(5, i, 0));
    return p;
}

}  // namespace recur2d
