#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ruled/rational.hpp"

namespace ruled {

/// Closed interval [lo, hi]; lo == hi is a single point.
struct Interval {
    Rational lo;
    Rational hi;

    [[nodiscard]] Rational length() const { return hi - lo; }
    [[nodiscard]] bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/**
 * Finite union of closed intervals with rational endpoints, stored sorted
 * and pairwise disjoint with strict gaps (b_j < a_{j+1}).  Touching or
 * overlapping inputs are merged on construction.
 */
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<Interval> intervals);

    static IntervalSet unit() { return IntervalSet({{Rational(0), Rational(1)}}); }

    [[nodiscard]] const std::vector<Interval>& intervals() const { return parts_; }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] std::size_t size() const { return parts_.size(); }

    [[nodiscard]] bool contains(const Rational& x) const;
    /// Lebesgue measure: the sum of interval lengths.
    [[nodiscard]] Rational measure() const;
    [[nodiscard]] const Rational& min() const;
    [[nodiscard]] const Rational& max() const;

    /// Removes the open interval (lo, hi); the result stays closed.
    [[nodiscard]] IntervalSet minus_open(const Rational& lo, const Rational& hi) const;
    [[nodiscard]] IntervalSet intersect(const IntervalSet& other) const;
    [[nodiscard]] bool subset_of(const Interval& box) const;

    /// The open gaps between consecutive components, as (b_j, a_{j+1}).
    [[nodiscard]] std::vector<Interval> gaps() const;
    /// The gap whose open interior contains x, if any.
    [[nodiscard]] std::optional<Interval> gap_containing(const Rational& x) const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> parts_;
};

[[nodiscard]] IntervalSet intersect_many(std::span<const IntervalSet> sets);

}  // namespace ruled
