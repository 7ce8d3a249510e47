#pragma once

#include <vector>

#include "ruled/piercing.hpp"

namespace ruled {

struct LineCover {
    bool coverable = true;
    std::vector<std::size_t> uncovered_rows;  // rows no column pierces
    std::vector<std::size_t> columns;         // chosen columns, ascending
    bool exact = true;                        // false when the greedy fallback ran
    std::size_t lower_bound = 0;              // proven lower bound on the optimum
};

/// Columns solved exactly up to this count; greedy beyond.
inline constexpr std::size_t kExactCoverColumns = 25;

/**
 * Minimum set of columns meeting every row.  Up to kExactCoverColumns the
 * answer is optimal and, among optimal covers, the lexicographically
 * smallest column list.  Rows without any true entry make the matrix
 * uncoverable; they are reported instead.
 */
[[nodiscard]] LineCover min_line_cover(const PiercingMatrix& matrix);

}  // namespace ruled
