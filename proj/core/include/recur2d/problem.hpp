#pragma once

#include "recur2d/scalar.hpp"

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace recur2d {

/// Dense n×n value grid addressed with one-based (i, j) subscripts; storage
/// is zero-based row-major underneath.
template <class S>
class Grid {
public:
    Grid() = default;
    explicit Grid(int n) : n_(checked(n)), cells_(std::size_t(n) * n, ScalarTraits<S>::zero()) {}

    int size() const { return n_; }

    S& at(int i, int j) { return cells_[index(i, j)]; }
    const S& at(int i, int j) const { return cells_[index(i, j)]; }

    const std::vector<S>& cells() const { return cells_; }

    bool operator==(const Grid&) const = default;

private:
    static int checked(int n) {
        if (n < 1) throw std::invalid_argument("grid side must be positive, got " + std::to_string(n));
        return n;
    }
    std::size_t index(int i, int j) const {
        assert(i >= 1 && i <= n_ && j >= 1 && j <= n_);
        return std::size_t(i - 1) * n_ + std::size_t(j - 1);
    }

    int n_ = 0;
    std::vector<S> cells_;
};

/// One instance of the 2-d linear recurrence
///   w(i,j) = a(i,j)·w(i-1,j) + b(i,j)·w(i,j-1) + c(i,j),  1 ≤ i,j ≤ n,
/// with boundary values w(0,j) = north[j-1] and w(i,0) = west[i-1].
/// The corner w(0,0) is referenced by no cell and is not stored.
template <class S>
struct RecurrenceProblem {
    int n = 0;
    Grid<S> a;
    Grid<S> b;
    Grid<S> c;
    std::vector<S> north;  // w(0,j), j = 1..n
    std::vector<S> west;   // w(i,0), i = 1..n

    const S& north_of(int j) const { return north[std::size_t(j) - 1]; }
    const S& west_of(int i) const { return west[std::size_t(i) - 1]; }

    bool operator==(const RecurrenceProblem&) const = default;
};

template <class S>
using GridSolution = Grid<S>;

/// Checks the shape invariants; throws naming the offending array.
template <class S>
void validate(const RecurrenceProblem<S>& p) {
    if (p.n < 1)
        throw std::invalid_argument("problem size n must be >= 1, got " + std::to_string(p.n));
    const auto check_grid = [&](const Grid<S>& g, const char* name) {
        if (g.size() != p.n)
            throw std::invalid_argument(std::string("coefficient grid ") + name + " has side " +
                                        std::to_string(g.size()) + ", expected " + std::to_string(p.n));
    };
    check_grid(p.a, "a");
    check_grid(p.b, "b");
    check_grid(p.c, "c");
    if (static_cast<int>(p.north.size()) != p.n)
        throw std::invalid_argument("boundary north (w(0,j)) has " + std::to_string(p.north.size()) +
                                    " entries, expected " + std::to_string(p.n));
    if (static_cast<int>(p.west.size()) != p.n)
        throw std::invalid_argument("boundary west (w(i,0)) has " + std::to_string(p.west.size()) +
                                    " entries, expected " + std::to_string(p.n));
}

/// Direct row-major sequential evaluation of the recurrence. This is the
/// ground-truth oracle every other solver is checked against.
template <class S>
GridSolution<S> naive_solve(const RecurrenceProblem<S>& p) {
    validate(p);
    Grid<S> w(p.n);
    for (int i = 1; i <= p.n; ++i) {
        for (int j = 1; j <= p.n; ++j) {
            const S& up = i == 1 ? p.north_of(j) : w.at(i - 1, j);
            const S& left = j == 1 ? p.west_of(i) : w.at(i, j - 1);
            w.at(i, j) = p.a.at(i, j) * up + p.b.at(i, j) * left + p.c.at(i, j);
        }
    }
    return w;
}

/// Max absolute defect of s against the recurrence, with boundary
/// substitution. Zero (in exact arithmetic) iff s solves the problem.
template <class S>
S residual(const RecurrenceProblem<S>& p, const GridSolution<S>& s) {
    validate(p);
    if (s.size() != p.n)
        throw std::invalid_argument("solution has side " + std::to_string(s.size()) +
                                    ", expected " + std::to_string(p.n));
    S worst = ScalarTraits<S>::zero();
    for (int i = 1; i <= p.n; ++i) {
        for (int j = 1; j <= p.n; ++j) {
            const S& up = i == 1 ? p.north_of(j) : s.at(i - 1, j);
            const S& left = j == 1 ? p.west_of(i) : s.at(i, j - 1);
            const S defect = ScalarTraits<S>::abs(
                s.at(i, j) - (p.a.at(i, j) * up + p.b.at(i, j) * left + p.c.at(i, j)));
            if (defect > worst) worst = defect;
        }
    }
    return worst;
}

}  // namespace recur2d
