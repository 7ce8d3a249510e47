#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ruled/interval_set.hpp"

namespace ruled {

/**
 * Level-i open cover of [0,1]: open intervals of length (1 - delta) / 2^i
 * centred on the grid k * length / 2, k = 0 .. ceil(2 / length).
 * Consecutive centres are length/2 apart, so the cover has no holes.
 */
struct CoverSpec {
    Rational delta;
    unsigned level = 1;
    Rational length;
    std::vector<Rational> centers;

    /// Number of intervals removed to form one member of the level family.
    [[nodiscard]] std::size_t picks_per_set() const { return std::size_t{1} << level; }
    [[nodiscard]] Rational half() const { return length / Rational(2); }
    /// Open interval (c - length/2, c + length/2) of centre k.
    [[nodiscard]] Interval open_interval(std::size_t k) const;
    /// True when the open interval of centre k contains x.
    [[nodiscard]] bool covers(std::size_t k, const Rational& x) const;
};

/// Throws std::invalid_argument unless 0 < delta < 1 and i >= 1.
[[nodiscard]] CoverSpec make_cover(const Rational& delta, unsigned level);

/// [0,1] with the picked open intervals removed.  Exactly 2^level picks are
/// required; repeats are allowed.
[[nodiscard]] IntervalSet remove_intervals(const CoverSpec& cover, std::span<const std::size_t> picks);

}  // namespace ruled
