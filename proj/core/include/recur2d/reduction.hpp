#pragma once

#include "recur2d/diagonal.hpp"
#include "recur2d/parallel.hpp"
#include "recur2d/problem.hpp"

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace recur2d {

/// One grid diagonal packed as a column vector, zero-padded to length n so
/// every diagonal has the same shape and the operator algebra stays total.
template <class S>
struct DiagonalVector {
    int n = 0;
    int d = 0;
    std::vector<S> entries;  // length n; zero for r >= diag_len(d, n)

    bool operator==(const DiagonalVector&) const = default;
};

/// Dense n×n matrix with zero-based (row, col) access. Fresh step matrices
/// are bidiagonal, but scan compositions fill the band in, so storage is
/// unconditionally dense.
template <class S>
class OperatorMatrix {
public:
    OperatorMatrix() = default;
    explicit OperatorMatrix(int n) : n_(n), values_(std::size_t(n) * n, ScalarTraits<S>::zero()) {
        if (n < 1) throw std::invalid_argument("matrix side must be positive, got " + std::to_string(n));
    }

    static OperatorMatrix identity(int n) {
        OperatorMatrix m(n);
        for (int r = 0; r < n; ++r) m.at(r, r) = ScalarTraits<S>::one();
        return m;
    }

    int size() const { return n_; }

    S& at(int r, int c) { return values_[index(r, c)]; }
    const S& at(int r, int c) const { return values_[index(r, c)]; }

    bool operator==(const OperatorMatrix&) const = default;

private:
    std::size_t index(int r, int c) const {
        assert(r >= 0 && r < n_ && c >= 0 && c < n_);
        return std::size_t(r) * n_ + std::size_t(c);
    }

    int n_ = 0;
    std::vector<S> values_;
};

/// The affine map x ↦ matrix·x + offset over length-n vectors. Closed under
/// composition, which is what makes the prefix scan applicable.
template <class S>
struct AffineOperator {
    OperatorMatrix<S> matrix;
    std::vector<S> offset;

    static AffineOperator identity(int n) {
        return {OperatorMatrix<S>::identity(n), std::vector<S>(std::size_t(n), ScalarTraits<S>::zero())};
    }

    bool operator==(const AffineOperator&) const = default;
};

/// matrix·x + offset. Each output row is an independent dot product, so rows
/// may be computed concurrently; the per-row accumulation order is fixed,
/// which keeps results identical for every thread count.
template <class S>
std::vector<S> apply(const AffineOperator<S>& t, const std::vector<S>& x, unsigned threads = 1) {
    const int n = t.matrix.size();
    if (static_cast<int>(x.size()) != n || static_cast<int>(t.offset.size()) != n)
        throw std::invalid_argument("affine apply: dimension mismatch");
    std::vector<S> y(std::size_t(n), ScalarTraits<S>::zero());
    parallel_for(std::size_t(n), threads, [&](std::size_t r) {
        S acc = t.offset[r];
        for (int k = 0; k < n; ++k) acc += t.matrix.at(int(r), k) * x[std::size_t(k)];
        y[r] = std::move(acc);
    });
    return y;
}

/// Composition in application order: apply(compose(t2, t1), x) equals
/// apply(t2, apply(t1, x)). Concretely (M2, K2)∘(M1, K1) = (M2·M1, M2·K1 + K2).
template <class S>
AffineOperator<S> compose(const AffineOperator<S>& later, const AffineOperator<S>& earlier) {
    const int n = later.matrix.size();
    if (earlier.matrix.size() != n)
        throw std::invalid_argument("affine compose: dimension mismatch");
    AffineOperator<S> out{OperatorMatrix<S>(n), std::vector<S>(std::size_t(n), ScalarTraits<S>::zero())};
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            S acc = ScalarTraits<S>::zero();
            for (int k = 0; k < n; ++k) acc += later.matrix.at(r, k) * earlier.matrix.at(k, c);
            out.matrix.at(r, c) = std::move(acc);
        }
        S acc = later.offset[std::size_t(r)];
        for (int k = 0; k < n; ++k) acc += later.matrix.at(r, k) * earlier.offset[std::size_t(k)];
        out.offset[std::size_t(r)] = std::move(acc);
    }
    return out;
}

/// Splits a solved grid into its 2n-1 packed diagonals.
template <class S>
std::vector<DiagonalVector<S>> pack_solution(const GridSolution<S>& s) {
    const int n = s.size();
    std::vector<DiagonalVector<S>> xs;
    xs.reserve(std::size_t(diag_count(n)));
    for (int d = 1; d <= diag_count(n); ++d) {
        DiagonalVector<S> dv{n, d, std::vector<S>(std::size_t(n), ScalarTraits<S>::zero())};
        for (int r = 0; r < diag_len(d, n); ++r) {
            const auto [i, j] = diag_to_grid({d, r}, n);
            dv.entries[std::size_t(r)] = s.at(i, j);
        }
        xs.push_back(std::move(dv));
    }
    return xs;
}

/// Exact inverse of pack_solution.
template <class S>
GridSolution<S> unpack_solution(const std::vector<DiagonalVector<S>>& xs, int n) {
    if (static_cast<int>(xs.size()) != diag_count(n))
        throw std::invalid_argument("expected " + std::to_string(diag_count(n)) +
                                    " diagonals, got " + std::to_string(xs.size()));
    Grid<S> w(n);
    for (int d = 1; d <= diag_count(n); ++d) {
        const DiagonalVector<S>& dv = xs[std::size_t(d - 1)];
        if (dv.n != n || dv.d != d || static_cast<int>(dv.entries.size()) != n)
            throw std::invalid_argument("diagonal " + std::to_string(d) + " has inconsistent shape");
        for (int r = 0; r < diag_len(d, n); ++r) {
            const auto [i, j] = diag_to_grid({d, r}, n);
            w.at(i, j) = dv.entries[std::size_t(r)];
        }
    }
    return w;
}

/// Constant term of the step from diagonal d-1 to d: the c values along
/// diagonal d, with the two boundary products folded into the end entries
/// that touch the grid border (both fold into entry 0 when d = 1).
template <class S>
DiagonalVector<S> step_offset(const RecurrenceProblem<S>& p, int d) {
    validate(p);
    const int n = p.n;
    const int len = diag_len(d, n);
    DiagonalVector<S> k{n, d, std::vector<S>(std::size_t(n), ScalarTraits<S>::zero())};
    for (int r = 0; r < len; ++r) {
        const auto [i, j] = diag_to_grid({d, r}, n);
        k.entries[std::size_t(r)] = p.c.at(i, j);
    }
    if (d <= n) {
        k.entries[0] += p.a.at(1, d) * p.north_of(d);
        k.entries[std::size_t(len - 1)] += p.b.at(d, 1) * p.west_of(d);
    }
    return k;
}

/// Linear term of the step from diagonal d-1 to d. For 2 ≤ d ≤ n the matrix
/// is lower-bidiagonal (the diagonal is still growing); for d ≥ n+1 it is
/// upper-bidiagonal (shrinking). d = 1 has no predecessor and yields the
/// zero matrix, which conveniently annihilates every scan prefix before it.
template <class S>
OperatorMatrix<S> step_matrix(const RecurrenceProblem<S>& p, int d) {
    validate(p);
    const int n = p.n;
    diag_len(d, n);  // range check
    OperatorMatrix<S> h(n);
    if (d == 1) return h;
    if (d <= n) {
        h.at(0, 0) = p.b.at(1, d);
        for (int r = 1; r <= d - 2; ++r) {
            h.at(r, r - 1) = p.a.at(r + 1, d - r);
            h.at(r, r) = p.b.at(r + 1, d - r);
        }
        h.at(d - 1, d - 2) = p.a.at(d, 1);
    } else {
        for (int r = 0; r <= 2 * n - d - 1; ++r) {
            h.at(r, r) = p.a.at(d + 1 - n + r, n - r);
            h.at(r, r + 1) = p.b.at(d + 1 - n + r, n - r);
        }
    }
    return h;
}

/// The full affine step operator for diagonal d.
template <class S>
AffineOperator<S> step_operator(const RecurrenceProblem<S>& p, int d) {
    return {step_matrix(p, d), step_offset(p, d).entries};
}

// Debug text forms used by the CLI reduce subcommand: row-major, one row per
// line, entries space-separated, rationals as "p/q".

template <class S>
std::string format_vector(const std::vector<S>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += ScalarTraits<S>::to_text(v[i]);
    }
    out += '\n';
    return out;
}

template <class S>
std::string format_matrix(const OperatorMatrix<S>& m) {
    std::string out;
    for (int r = 0; r < m.size(); ++r) {
        for (int c = 0; c < m.size(); ++c) {
            if (c) out += ' ';
            out += ScalarTraits<S>::to_text(m.at(r, c));
        }
        out += '\n';
    }
    return out;
}

}  // namespace recur2d
