#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace recur2d {

struct ScanPair {
    int target = 0;
    int source = 0;
    bool operator==(const ScanPair&) const = default;
};

/// Round-by-round pairing plan for an inclusive prefix scan over m
/// positions (Kogge–Stone: every position is updated every round).
/// Round t (1-based) pairs each target p ≥ 2^(t-1) with source p - 2^(t-1);
/// after ⌈log₂ m⌉ rounds position p holds the composition of 0..p.
struct ScanSchedule {
    int positions = 0;
    std::vector<std::vector<ScanPair>> rounds;
};

inline ScanSchedule build_schedule(int m) {
    if (m < 1)
        throw std::invalid_argument("schedule needs at least one position, got " + std::to_string(m));
    ScanSchedule s{m, {}};
    for (int offset = 1; offset < m; offset *= 2) {
        auto& round = s.rounds.emplace_back();
        round.reserve(std::size_t(m - offset));
        for (int p = offset; p < m; ++p) round.push_back({p, p - offset});
    }
    return s;
}

inline std::uint64_t total_pairs(const ScanSchedule& s) {
    std::uint64_t total = 0;
    for (const auto& round : s.rounds) total += round.size();
    return total;
}

}  // namespace recur2d
