#include "ruled/line_cover.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace ruled {

namespace {

using Mask = std::uint32_t;

/// Rows whose column sets are pairwise disjoint each need their own column.
std::size_t packing_bound(const std::vector<Mask>& rows, Mask chosen, Mask avail) {
    std::vector<Mask> open;
    for (const Mask r : rows) {
        if ((r & chosen) == 0) open.push_back(r & avail);
    }
    std::sort(open.begin(), open.end(), [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
    Mask used = 0;
    std::size_t n = 0;
    for (const Mask r : open) {
        if ((r & used) == 0) {
            used |= r;
            ++n;
        }
    }
    return n;
}

/// Is there a cover using `chosen` plus at most `budget` columns from `avail`?
bool cover_exists(const std::vector<Mask>& rows, Mask chosen, Mask avail, std::size_t budget) {
    const Mask* pick = nullptr;
    int fewest = 33;
    for (const Mask& r : rows) {
        if ((r & chosen) != 0) continue;
        const int options = std::popcount(static_cast<Mask>(r & avail));
        if (options == 0) return false;
        if (options < fewest) {
            fewest = options;
            pick = &r;
        }
    }
    if (pick == nullptr) return true;
    if (budget == 0 || packing_bound(rows, chosen, avail) > budget) return false;
    Mask opts = *pick & avail;
    Mask tried = 0;
    while (opts != 0) {
        const Mask bit = opts & (~opts + 1);
        opts ^= bit;
        // Columns already tried at this level are dropped for later siblings.
        if (cover_exists(rows, chosen | bit, avail & ~tried & ~bit, budget - 1)) return true;
        tried |= bit;
    }
    return false;
}

LineCover exact_cover(const std::vector<Mask>& rows, std::size_t cols) {
    LineCover out;
    const Mask all = cols == 32 ? ~Mask{0} : ((Mask{1} << cols) - 1);
    std::size_t k = packing_bound(rows, 0, all);
    while (!cover_exists(rows, 0, all, k)) ++k;
    out.lower_bound = k;

    // Fix columns left to right, keeping a column whenever an optimal cover
    // extending the current choice still exists.
    Mask chosen = 0;
    std::size_t used = 0;
    for (std::size_t j = 0; j < cols && used < k; ++j) {
        const Mask bit = Mask{1} << j;
        const Mask later = all & ~((bit << 1) - 1);
        if (cover_exists(rows, chosen | bit, later, k - used - 1)) {
            chosen |= bit;
            ++used;
            out.columns.push_back(j);
        }
    }
    return out;
}

LineCover greedy_cover(const PiercingMatrix& m) {
    LineCover out;
    out.exact = false;
    std::vector<bool> covered(m.rows(), false);
    std::size_t left = m.rows();
    while (left > 0) {
        std::size_t best = 0;
        std::size_t best_gain = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            std::size_t gain = 0;
            for (std::size_t r = 0; r < m.rows(); ++r) gain += (!covered[r] && m.at(r, c)) ? 1 : 0;
            if (gain > best_gain) {
                best_gain = gain;
                best = c;
            }
        }
        out.columns.push_back(best);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (!covered[r] && m.at(r, best)) {
                covered[r] = true;
                --left;
            }
        }
    }
    std::sort(out.columns.begin(), out.columns.end());

    // Disjoint-row packing bound over the full column set.
    std::vector<std::size_t> order(m.rows());
    std::vector<std::size_t> degree(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        order[r] = r;
        for (std::size_t c = 0; c < m.cols(); ++c) degree[r] += m.at(r, c) ? 1 : 0;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degree[a] < degree[b]; });
    std::vector<bool> used(m.cols(), false);
    for (const std::size_t r : order) {
        bool disjoint = true;
        for (std::size_t c = 0; c < m.cols() && disjoint; ++c) disjoint = !(m.at(r, c) && used[c]);
        if (!disjoint) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.at(r, c)) used[c] = true;
        }
        ++out.lower_bound;
    }
    return out;
}

}  // namespace

LineCover min_line_cover(const PiercingMatrix& matrix) {
    LineCover out;
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        bool any = false;
        for (std::size_t c = 0; c < matrix.cols() && !any; ++c) any = matrix.at(r, c);
        if (!any) out.uncovered_rows.push_back(r);
    }
    if (!out.uncovered_rows.empty()) {
        out.coverable = false;
        return out;
    }
    if (matrix.rows() == 0) return out;
    if (matrix.cols() > kExactCoverColumns) return greedy_cover(matrix);

    std::vector<Mask> rows(matrix.rows(), 0);
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        for (std::size_t c = 0; c < matrix.cols(); ++c) {
            if (matrix.at(r, c)) rows[r] |= Mask{1} << c;
        }
    }
    return exact_cover(rows, matrix.cols());
}

}  // namespace ruled
