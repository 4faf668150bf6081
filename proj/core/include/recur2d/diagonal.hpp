#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace recur2d {

/// Anti-diagonal coordinate on an n×n grid. Diagonal d = i + j - 1 runs over
/// 1..2n-1; r is the zero-based position inside the diagonal, ordered by
/// increasing row index i.
struct DiagonalIndex {
    int d = 0;
    int r = 0;
    bool operator==(const DiagonalIndex&) const = default;
};

inline int diag_count(int n) { return 2 * n - 1; }

/// Number of grid cells on diagonal d: d up to the main anti-diagonal,
/// then shrinking as 2n - d.
inline int diag_len(int d, int n) {
    if (d < 1 || d > diag_count(n))
        throw std::out_of_range("diagonal d=" + std::to_string(d) + " out of range 1.." +
                                std::to_string(diag_count(n)) + " for n=" + std::to_string(n));
    return d <= n ? d : 2 * n - d;
}

inline DiagonalIndex grid_to_diag(int i, int j, int n) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("cell (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside the " + std::to_string(n) + "x" + std::to_string(n) +
                                " grid");
    const int d = i + j - 1;
    const int r = d <= n ? i - 1 : i - (d + 1 - n);
    return {d, r};
}

/// Exact inverse of grid_to_diag. Returns the one-based (i, j) cell.
inline std::pair<int, int> diag_to_grid(DiagonalIndex idx, int n) {
    const int len = diag_len(idx.d, n);
    if (idx.r < 0 || idx.r >= len)
        throw std::out_of_range("position r=" + std::to_string(idx.r) +
                                " exceeds length " + std::to_string(len) + " of diagonal d=" +
                                std::to_string(idx.d));
    if (idx.d <= n) return {idx.r + 1, idx.d - idx.r};
    return {idx.d + 1 - n + idx.r, n - idx.r};
}

}  // namespace recur2d
