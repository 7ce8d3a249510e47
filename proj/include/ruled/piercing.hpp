#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ruled/body.hpp"

namespace ruled {

/// Exact relation lhs REL rhs, REL in {<, <=, =, !=, >=, >}.
struct Inequality {
    std::string what;
    Rational lhs;
    std::string rel;
    Rational rhs;

    [[nodiscard]] bool holds() const;
};

/// Why a line misses a body: a case tag and inequalities that all hold.
struct Certificate {
    std::string kind;
    std::vector<Inequality> inequalities;

    [[nodiscard]] bool holds() const;
};

struct PierceVerdict {
    bool pierced = false;
    Certificate certificate;  // meaningful only when !pierced
};

/// Whether the line meets the body, decided exactly: a point hit is tested
/// against the chart inequalities; a line inside the plane is tested by
/// maximizing (line - lower envelope) over the u-range left by the top chord.
[[nodiscard]] PierceVerdict pierce_explained(const Line3& line, const ConvexBody& body);
[[nodiscard]] bool pierce(const Line3& line, const ConvexBody& body);

/// max (z - xy) over the body = eps * (r_max - r_min)^2 / 4, reached at the
/// midpoint of the top chord.
[[nodiscard]] Rational max_vertical_distance(const ConvexBody& body);

/// rows = bodies, cols = lines.
class PiercingMatrix {
public:
    PiercingMatrix() = default;
    PiercingMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c] != 0; }
    void set(std::size_t r, std::size_t c, bool v) { cells_[r * cols_ + c] = v ? 1 : 0; }

    friend bool operator==(const PiercingMatrix&, const PiercingMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> cells_;
};

/// OpenMP-parallel over (row, col).
[[nodiscard]] PiercingMatrix piercing_matrix(std::span<const ConvexBody> bodies, std::span<const Line3> lines);
[[nodiscard]] PiercingMatrix piercing_matrix_serial(std::span<const ConvexBody> bodies, std::span<const Line3> lines);

}  // namespace ruled
