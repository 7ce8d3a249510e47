#include "ruled/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace ruled {

IntervalSet::IntervalSet(std::vector<Interval> intervals) {
    for (const auto& iv : intervals) {
        if (iv.hi < iv.lo) {
            throw std::invalid_argument("interval with hi < lo: [" + iv.lo.str() + ", " + iv.hi.str() + "]");
        }
    }
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (auto& iv : intervals) {
        if (!parts_.empty() && iv.lo <= parts_.back().hi) {
            if (parts_.back().hi < iv.hi) parts_.back().hi = std::move(iv.hi);
        } else {
            parts_.push_back(std::move(iv));
        }
    }
}

bool IntervalSet::contains(const Rational& x) const {
    // First component with hi >= x.
    auto it = std::lower_bound(parts_.begin(), parts_.end(), x,
                               [](const Interval& iv, const Rational& v) { return iv.hi < v; });
    return it != parts_.end() && it->lo <= x;
}

Rational IntervalSet::measure() const {
    Rational total;
    for (const auto& iv : parts_) total += iv.length();
    return total;
}

const Rational& IntervalSet::min() const {
    if (parts_.empty()) throw std::logic_error("min of empty interval set");
    return parts_.front().lo;
}

const Rational& IntervalSet::max() const {
    if (parts_.empty()) throw std::logic_error("max of empty interval set");
    return parts_.back().hi;
}

IntervalSet IntervalSet::minus_open(const Rational& lo, const Rational& hi) const {
    IntervalSet out;
    out.parts_.reserve(parts_.size() + 1);
    for (const auto& iv : parts_) {
        if (iv.hi <= lo || hi <= iv.lo || hi <= lo) {
            out.parts_.push_back(iv);
            continue;
        }
        if (iv.lo <= lo) out.parts_.push_back({iv.lo, lo});
        if (hi <= iv.hi) out.parts_.push_back({hi, iv.hi});
    }
    return out;
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
    IntervalSet out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < parts_.size() && j < other.parts_.size()) {
        const auto& a = parts_[i];
        const auto& b = other.parts_[j];
        const Rational& lo = a.lo < b.lo ? b.lo : a.lo;
        const Rational& hi = a.hi < b.hi ? a.hi : b.hi;
        if (lo <= hi) out.parts_.push_back({lo, hi});
        if (a.hi < b.hi) {
            ++i;
        } else {
            ++j;
        }
    }
    return out;
}

bool IntervalSet::subset_of(const Interval& box) const {
    return parts_.empty() || (box.lo <= parts_.front().lo && parts_.back().hi <= box.hi);
}

std::vector<Interval> IntervalSet::gaps() const {
    std::vector<Interval> out;
    for (std::size_t k = 1; k < parts_.size(); ++k) {
        out.push_back({parts_[k - 1].hi, parts_[k].lo});
    }
    return out;
}

std::optional<Interval> IntervalSet::gap_containing(const Rational& x) const {
    auto it = std::lower_bound(parts_.begin(), parts_.end(), x,
                               [](const Interval& iv, const Rational& v) { return iv.hi < v; });
    if (it == parts_.begin() || it == parts_.end() || it->lo <= x) return std::nullopt;
    return Interval{std::prev(it)->hi, it->lo};
}

IntervalSet intersect_many(std::span<const IntervalSet> sets) {
    if (sets.empty()) throw std::invalid_argument("intersect_many of an empty list");
    IntervalSet acc = sets.front();
    for (std::size_t k = 1; k < sets.size() && !acc.empty(); ++k) {
        acc = acc.intersect(sets[k]);
    }
    return acc;
}

}  // namespace ruled
