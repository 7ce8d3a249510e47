#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ruled/interval_set.hpp"

namespace ruled {

/// One cell of the partition of [0,1] induced by a family's endpoints,
/// labelled with the number of sets containing it.
struct DepthCell {
    Rational lo;
    Rational hi;
    bool lo_closed = true;
    bool hi_closed = true;
    std::size_t depth = 0;

    [[nodiscard]] bool is_point() const { return lo == hi; }
    [[nodiscard]] Rational length() const { return hi - lo; }
    /// A point strictly inside the cell (the point itself for a point cell).
    [[nodiscard]] Rational representative() const;
    friend bool operator==(const DepthCell&, const DepthCell&) = default;
};

/// Elementary cells {e0}, (e0,e1), {e1}, ..., {ek} over the sorted endpoints
/// of the family together with 0 and 1, unmerged.  OpenMP-parallel over cells.
[[nodiscard]] std::vector<DepthCell> elementary_cells(std::span<const IntervalSet> sets);
/// Serial reference for elementary_cells.
[[nodiscard]] std::vector<DepthCell> elementary_cells_serial(std::span<const IntervalSet> sets);

/// Depth profile with adjacent equal-depth cells merged.  An empty family
/// gives the single cell [0,1] of depth 0.
[[nodiscard]] std::vector<DepthCell> depth_profile(std::span<const IntervalSet> sets);
[[nodiscard]] std::vector<DepthCell> depth_profile_serial(std::span<const IntervalSet> sets);

struct DeepWitness {
    Rational point;
    std::vector<std::size_t> members;  // the first t indices whose set contains point
};

/// Leftmost point lying in at least t sets, with t member indices, or
/// nullopt.  t == 0 throws std::invalid_argument.
[[nodiscard]] std::optional<DeepWitness> deep_witness(std::span<const IntervalSet> sets, std::size_t t);

}  // namespace ruled
