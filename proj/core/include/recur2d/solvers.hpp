#pragma once

#include "recur2d/reduction.hpp"
#include "recur2d/schedule.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace recur2d {

/// Execution counters. rounds is the number of dependent sequential phases
/// (anti-diagonal sweeps or scan rounds). muladds follows a fixed cost
/// model counted against operations actually executed:
///   recurrence cell                    2        (a·up and b·left)
///   dense matrix·vector apply          n²
///   affine composition                 n³ + n²  (matrix product + offset fold)
struct SolveCounters {
    int rounds = 0;
    std::uint64_t compositions = 0;
    std::uint64_t muladds = 0;
};

struct SolveReport {
    std::string solver;
    int n = 0;
    int rounds = 0;
    std::uint64_t compositions = 0;
    std::uint64_t muladds = 0;
    std::uint64_t elapsed_ns = 0;
    double max_residual = 0.0;
    double max_deviation = 0.0;  // vs the naive oracle; relative in f64 mode
    bool matches_oracle = true;
};

namespace detail {

inline std::uint64_t elapsed_ns_since(std::chrono::steady_clock::time_point start) {
    return std::uint64_t(std::chrono::duration_cast<std::chrono::nanoseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count());
}

}  // namespace detail

/// Sweeps the grid one anti-diagonal at a time, exactly 2n-1 phases; cells
/// within a phase have no mutual dependency and run concurrently.
template <class S>
GridSolution<S> wavefront_solve(const RecurrenceProblem<S>& p, unsigned threads = 1,
                                SolveCounters* counters = nullptr) {
    validate(p);
    const int n = p.n;
    Grid<S> w(n);
    int phases = 0;
    for (int d = 1; d <= diag_count(n); ++d) {
        parallel_for(std::size_t(diag_len(d, n)), threads, [&](std::size_t pos) {
            const auto [i, j] = diag_to_grid({d, int(pos)}, n);
            const S& up = i == 1 ? p.north_of(j) : w.at(i - 1, j);
            const S& left = j == 1 ? p.west_of(i) : w.at(i, j - 1);
            w.at(i, j) = p.a.at(i, j) * up + p.b.at(i, j) * left + p.c.at(i, j);
        });
        ++phases;
    }
    if (counters) *counters = {phases, 0, 2ull * std::uint64_t(n) * std::uint64_t(n)};
    return w;
}

/// Iterates the one-dimensional reduction: x_1 is the first step offset,
/// then each diagonal is the affine image of the previous one. Equal to
/// naive_solve exactly in exact mode.
template <class S>
GridSolution<S> reduced_sequential_solve(const RecurrenceProblem<S>& p, unsigned threads = 1,
                                         SolveCounters* counters = nullptr) {
    validate(p);
    const int n = p.n;
    const int m = diag_count(n);
    std::vector<DiagonalVector<S>> xs;
    xs.reserve(std::size_t(m));
    xs.push_back(step_offset(p, 1));
    std::uint64_t muladds = 0;
    for (int d = 2; d <= m; ++d) {
        const AffineOperator<S> t = step_operator(p, d);
        xs.push_back({n, d, apply(t, xs.back().entries, threads)});
        muladds += std::uint64_t(n) * std::uint64_t(n);
    }
    if (counters) *counters = {m, 0, muladds};
    return unpack_solution(xs, n);
}

namespace detail {

/// Inclusive-prefix Kogge–Stone scan over the 2n-1 step operators. The
/// d = 1 operator has a zero matrix, so every prefix keeps a zero linear
/// part and its offset is exactly the packed diagonal — no initial-state
/// plumbing needed. Double-buffered rounds: within a round every target is
/// written once and only previous-round values are read, so association
/// order is fixed by the schedule and results are thread-count-invariant.
template <class S>
GridSolution<S> scan_grid(const RecurrenceProblem<S>& p, unsigned threads,
                          SolveCounters& counters) {
    validate(p);
    const int n = p.n;
    const int m = diag_count(n);
    std::vector<AffineOperator<S>> ops;
    ops.reserve(std::size_t(m));
    for (int d = 1; d <= m; ++d) ops.push_back(step_operator(p, d));

    const ScanSchedule schedule = build_schedule(m);
    std::vector<AffineOperator<S>> next = ops;
    std::uint64_t compositions = 0;
    const std::uint64_t compose_cost =
        std::uint64_t(n) * n * n + std::uint64_t(n) * n;
    std::uint64_t muladds = 0;
    for (const auto& round : schedule.rounds) {
        const int first_target = round.front().target;
        for (int pos = 0; pos < first_target; ++pos) next[std::size_t(pos)] = ops[std::size_t(pos)];
        parallel_for(round.size(), threads, [&](std::size_t idx) {
            const ScanPair pair = round[idx];
            next[std::size_t(pair.target)] =
                compose(ops[std::size_t(pair.target)], ops[std::size_t(pair.source)]);
        });
        ops.swap(next);
        compositions += round.size();
        muladds += round.size() * compose_cost;
    }

    std::vector<DiagonalVector<S>> xs;
    xs.reserve(std::size_t(m));
    for (int d = 1; d <= m; ++d)
        xs.push_back({n, d, std::move(ops[std::size_t(d - 1)].offset)});
    counters = {int(schedule.rounds.size()), compositions, muladds};
    return unpack_solution(xs, n);
}

/// Fills residual/deviation fields of a report from a solved grid and the
/// oracle grid. Deviation is exact-absolute in exact mode and relative
/// (with the absolute floor) in f64 mode.
template <class S>
void fill_verification(const RecurrenceProblem<S>& p, const GridSolution<S>& got,
                       const GridSolution<S>& oracle, SolveReport& report) {
    using T = ScalarTraits<S>;
    report.max_residual = T::to_double(residual(p, got));
    double max_dev = 0.0;
    bool matches = true;
    for (int i = 1; i <= p.n; ++i) {
        for (int j = 1; j <= p.n; ++j) {
            const S& x = got.at(i, j);
            const S& y = oracle.at(i, j);
            matches = matches && T::equal(x, y);
            double dev;
            if constexpr (T::is_exact) {
                dev = T::to_double(T::abs(x - y));
            } else {
                dev = T::abs(x - y) / std::max(T::abs(y), abs_tolerance);
            }
            if (!(dev <= max_dev)) max_dev = dev;  // NaN-propagating max
        }
    }
    report.max_deviation = max_dev;
    report.matches_oracle = matches;
}

}  // namespace detail

/// Kogge–Stone scan solver. Returns the grid together with a report of
/// depth (rounds), work (compositions, muladds), wall time of the scan
/// itself, and verification against the naive oracle (computed untimed).
template <class S>
std::pair<GridSolution<S>, SolveReport> scan_solve(const RecurrenceProblem<S>& p,
                                                   unsigned threads = 1) {
    SolveReport report;
    report.solver = "scan";
    report.n = p.n;
    SolveCounters counters;
    const auto start = std::chrono::steady_clock::now();
    GridSolution<S> grid = detail::scan_grid(p, threads, counters);
    report.elapsed_ns = detail::elapsed_ns_since(start);
    report.rounds = counters.rounds;
    report.compositions = counters.compositions;
    report.muladds = counters.muladds;
    detail::fill_verification(p, grid, naive_solve(p), report);
    return {std::move(grid), std::move(report)};
}

/// Runs all four solvers against the oracle. In exact mode every deviation
/// is zero; in f64 mode deviations stay within the mode tolerance for sane
/// inputs. Wall times are single-shot (the CLI bench does median-of-repeats).
template <class S>
std::vector<SolveReport> compare_solvers(const RecurrenceProblem<S>& p, unsigned threads = 1) {
    validate(p);
    const int n = p.n;
    const std::uint64_t cell_muladds = 2ull * std::uint64_t(n) * std::uint64_t(n);
    std::vector<SolveReport> reports;

    const auto oracle_start = std::chrono::steady_clock::now();
    const GridSolution<S> oracle = naive_solve(p);
    const std::uint64_t oracle_ns = detail::elapsed_ns_since(oracle_start);
    {
        SolveReport r{"naive", n, 0, 0, cell_muladds, oracle_ns};
        detail::fill_verification(p, oracle, oracle, r);
        reports.push_back(std::move(r));
    }
    {
        SolveCounters counters;
        const auto start = std::chrono::steady_clock::now();
        const GridSolution<S> grid = wavefront_solve(p, threads, &counters);
        SolveReport r{"wavefront", n, counters.rounds, counters.compositions,
                      counters.muladds, detail::elapsed_ns_since(start)};
        detail::fill_verification(p, grid, oracle, r);
        reports.push_back(std::move(r));
    }
    {
        SolveCounters counters;
        const auto start = std::chrono::steady_clock::now();
        const GridSolution<S> grid = reduced_sequential_solve(p, threads, &counters);
        SolveReport r{"reduced", n, counters.rounds, counters.compositions,
                      counters.muladds, detail::elapsed_ns_since(start)};
        detail::fill_verification(p, grid, oracle, r);
        reports.push_back(std::move(r));
    }
    {
        SolveCounters counters;
        const auto start = std::chrono::steady_clock::now();
        const GridSolution<S> grid = detail::scan_grid(p, threads, counters);
        SolveReport r{"scan", n, counters.rounds, counters.compositions,
                      counters.muladds, detail::elapsed_ns_since(start)};
        detail::fill_verification(p, grid, oracle, r);
        reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace recur2d
