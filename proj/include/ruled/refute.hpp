#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ruled/family.hpp"
#include "ruled/piercing.hpp"

namespace ruled {

/// L1: rulings x = c, z = c*y.  L2: rulings y = b, z = b*x.  L3: the rest.
enum class LineGroup { L1, L2, L3 };

[[nodiscard]] std::string group_name(LineGroup g);
[[nodiscard]] LineGroup group_of(const Line3& l);

struct LineFinding {
    std::size_t index = 0;
    LineGroup group = LineGroup::L3;
    std::optional<Rational> param;        // r for L1, b for L2
    bool out_of_range = false;            // L1/L2 parameter outside [0,1]
    std::vector<QPoint3> surface_points;  // L3 only: the <= 2 hits with z = xy
    Certificate certificate;
};

struct RefutationReport {
    bool found = false;
    std::size_t searched = 0;  // stream elements examined
    std::optional<ConvexBody> witness;
    std::vector<LineFinding> lines;
};

inline constexpr std::size_t kDefaultRefuteBudget = 100000;

/**
 * Advances the stream until it produces a body that none of the lines
 * meets.  Candidates are screened cheapest first: an L1
 * parameter inside the support rejects, then an L2 parameter inside the
 * body's y-range rejects, then every L3 line is checked with the exact
 * pierce predicate (in parallel).  The first survivor is returned with one
 * certificate per line; `found == false` only means the budget ran out.
 */
[[nodiscard]] RefutationReport refute(std::span<const Line3> lines, FamilyStream& stream,
                                      std::size_t n_max = kDefaultRefuteBudget);

/// Rechecks a report against the lines without trusting the search: the
/// witness body must be missed by every line and every certificate must
/// hold exactly.
[[nodiscard]] bool verify_report(const RefutationReport& report, std::span<const Line3> lines);

}  // namespace ruled
