#include "ruled/depth.hpp"

#include <algorithm>
#include <stdexcept>

namespace ruled {

Rational DepthCell::representative() const {
    return is_point() ? lo : (lo + hi) / Rational(2);
}

namespace {

std::vector<DepthCell> cell_skeleton(std::span<const IntervalSet> sets) {
    std::vector<Rational> ends{Rational(0), Rational(1)};
    for (const auto& s : sets) {
        for (const auto& iv : s.intervals()) {
            ends.push_back(iv.lo);
            ends.push_back(iv.hi);
        }
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());

    std::vector<DepthCell> cells;
    cells.reserve(2 * ends.size());
    for (std::size_t k = 0; k < ends.size(); ++k) {
        cells.push_back({ends[k], ends[k], true, true, 0});
        if (k + 1 < ends.size()) cells.push_back({ends[k], ends[k + 1], false, false, 0});
    }
    return cells;
}

std::size_t depth_at(std::span<const IntervalSet> sets, const Rational& x) {
    std::size_t d = 0;
    for (const auto& s : sets) d += s.contains(x) ? 1 : 0;
    return d;
}

std::vector<DepthCell> merge_equal(std::vector<DepthCell> cells) {
    std::vector<DepthCell> out;
    for (auto& c : cells) {
        if (!out.empty() && out.back().depth == c.depth) {
            out.back().hi = std::move(c.hi);
            out.back().hi_closed = c.hi_closed;
        } else {
            out.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace

std::vector<DepthCell> elementary_cells(std::span<const IntervalSet> sets) {
    auto cells = cell_skeleton(sets);
    const auto n = static_cast<long>(cells.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long k = 0; k < n; ++k) {
        auto& c = cells[static_cast<std::size_t>(k)];
        c.depth = depth_at(sets, c.representative());
    }
    return cells;
}

std::vector<DepthCell> elementary_cells_serial(std::span<const IntervalSet> sets) {
    auto cells = cell_skeleton(sets);
    for (auto& c : cells) c.depth = depth_at(sets, c.representative());
    return cells;
}

std::vector<DepthCell> depth_profile(std::span<const IntervalSet> sets) {
    return merge_equal(elementary_cells(sets));
}

std::vector<DepthCell> depth_profile_serial(std::span<const IntervalSet> sets) {
    return merge_equal(elementary_cells_serial(sets));
}

std::optional<DeepWitness> deep_witness(std::span<const IntervalSet> sets, std::size_t t) {
    if (t == 0) throw std::invalid_argument("deep_witness needs t >= 1");
    if (sets.size() < t) return std::nullopt;
    for (const auto& cell : elementary_cells(sets)) {
        if (cell.depth < t) continue;
        // For closed sets a point cell always precedes an open cell of
        // no larger depth, so the first hit is the leftmost deep point.
        DeepWitness w{cell.representative(), {}};
        for (std::size_t k = 0; k < sets.size() && w.members.size() < t; ++k) {
            if (sets[k].contains(w.point)) w.members.push_back(k);
        }
        return w;
    }
    return std::nullopt;
}

}  // namespace ruled
