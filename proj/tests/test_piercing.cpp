#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ruled/family.hpp"
#include "ruled/line_cover.hpp"
#include "ruled/piercing.hpp"
#include "ruled/refute.hpp"

using namespace ruled;

namespace {

Rational R(long p, long q = 1) { return {p, q}; }

// Sample points of the support: every endpoint plus a grid.
std::vector<Rational> support_samples(const ConvexBody& b, long grid) {
    std::vector<Rational> us;
    for (const auto& iv : b.support().intervals()) {
        us.push_back(iv.lo);
        us.push_back(iv.hi);
    }
    for (long k = 0; k <= grid; ++k) {
        const Rational u(k, grid);
        if (b.support().contains(u)) us.push_back(u);
    }
    std::sort(us.begin(), us.end());
    us.erase(std::unique(us.begin(), us.end()), us.end());
    return us;
}

// Inside the polygon spanned by sampled arc points (a subset of the body).
bool inner_oracle(const ConvexBody& b, const std::vector<Rational>& us, const ChartPoint& c) {
    if (c.u < us.front() || c.u > us.back()) return false;
    if (c.w > b.top(c.u)) return false;
    for (std::size_t i = 0; i + 1 < us.size(); ++i) {
        if (c.u < us[i] || c.u > us[i + 1]) continue;
        const Rational a = b.parabola(us[i]);
        const Rational z = b.parabola(us[i + 1]);
        if (us[i] == us[i + 1]) return c.w >= a;
        const Rational chord = a + (z - a) * (c.u - us[i]) / (us[i + 1] - us[i]);
        return c.w >= chord;
    }
    return us.size() == 1 && c.u == us[0] && c.w == b.parabola(us[0]);
}

// Outside the polygon cut out by the top chord and tangents at the samples
// (a superset of the body).
bool outside_outer(const ConvexBody& b, const std::vector<Rational>& us, const ChartPoint& c) {
    if (c.u < b.r_min() || c.u > b.r_max()) return true;
    if (c.w > b.top(c.u)) return true;
    for (const auto& t : us) {
        const Rational slope = b.q() + R(2) * b.eps() * t;
        if (c.w < b.parabola(t) + slope * (c.u - t)) return true;
    }
    return false;
}

Rational rand_unit(std::mt19937_64& rng) { return oracle::random_unit(rng, 97); }

// Direction with nonzero y-eps*x component, so the line crosses the plane once.
Point3 transversal_dir(std::mt19937_64& rng, const ConvexBody& b) {
    for (;;) {
        Point3 d{oracle::random_rational(rng, 5, 7), oracle::random_rational(rng, 5, 7),
                 oracle::random_rational(rng, 5, 7)};
        if (d.y != b.eps() * d.x) return d;
    }
}

// In-plane line through chart points (u0, w0) with chart slope s.
Line3 in_plane_line(const ConvexBody& b, const Rational& u0, const Rational& w0, const Rational& s) {
    const Point3 base = from_plane_coords(b.plane(), {u0, w0});
    return Line3(base, {R(1), b.eps(), s});
}

std::vector<std::vector<bool>> rows_of(const PiercingMatrix& m) {
    std::vector<std::vector<bool>> rows(m.rows(), std::vector<bool>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
    return rows;
}

PiercingMatrix from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols) {
    PiercingMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const int c : rows[r]) m.set(r, static_cast<std::size_t>(c), true);
    return m;
}

}  // namespace

TEST_CASE("rulings pierce exactly when the parameter is in the support") {
    const IntervalSet split({{R(0), R(1, 4)}, {R(3, 4), R(1)}});
    const ConvexBody b = build_body(R(1, 2), 1, 1, split);
    CHECK(pierce(Line3::ruling_x(R(0)), b));
    CHECK(pierce(Line3::ruling_x(R(1, 8)), b));
    CHECK(pierce(Line3::ruling_x(R(1)), b));
    const auto v = pierce_explained(Line3::ruling_x(R(1, 2)), b);
    CHECK_FALSE(v.pierced);
    CHECK(v.certificate.kind == "below-gap-chord");
    CHECK(v.certificate.holds());
    CHECK_FALSE(pierce(Line3::ruling_x(R(3, 2)), b));
    CHECK_FALSE(pierce(Line3::ruling_x(R(-1, 2)), b));

    // R2 parameter outside the y-range [1/2, 1/2 + 1/64].
    CHECK_FALSE(pierce(Line3::ruling_y(R(1, 3)), b));
    CHECK(pierce(Line3::ruling_y(R(1, 2)), b));
    CHECK(pierce(Line3::ruling_y(R(1, 2) + R(1, 256)), b));
    CHECK_FALSE(pierce(Line3::ruling_y(R(1, 2) + R(1, 128)), b));  // x = 1/2 is in the gap
    CHECK_FALSE(pierce(Line3::ruling_y(R(1, 2) + R(1, 32)), b));

    const auto bodies = truncate_family(R(1, 2), 120);
    for (const auto& body : bodies) {
        for (long k = -2; k <= 66; ++k) {
            const Rational r(k, 64);
            const auto verdict = pierce_explained(Line3::ruling_x(r), body);
            CHECK(verdict.pierced == body.support().contains(r));
            if (!verdict.pierced) CHECK(verdict.certificate.holds());
        }
        const Interval yr = body.y_range();
        for (const Rational& y : {yr.lo, yr.hi, (yr.lo + yr.hi) / R(2), yr.lo - body.eps() / R(8), yr.hi + R(1, 1 << 30)}) {
            const bool in_range = y >= yr.lo && y <= yr.hi;
            const bool hit = pierce(Line3::ruling_y(y), body);
            CHECK(hit == (in_range && body.support().contains((y - body.q()) / body.eps())));
            if (!in_range) CHECK_FALSE(hit);
        }
    }
}

TEST_CASE("transversal lines agree with polygon oracles") {
    std::mt19937_64 rng(7);
    const auto bodies = truncate_family(R(1, 2), 30);
    int inside = 0;
    int outside = 0;
    for (const auto& b : bodies) {
        const auto us = support_samples(b, 16);
        for (int k = 0; k < 60; ++k) {
            const Rational u = R(-1, 8) + rand_unit(rng) * R(5, 4);
            const Rational thick = max_vertical_distance(b) + b.eps() / R(64);
            const Rational w = b.parabola(u) - thick / R(4) + rand_unit(rng) * thick * R(3, 2);
            const ChartPoint c{u, w};
            const Line3 line(from_plane_coords(b.plane(), c), transversal_dir(rng, b));
            const auto v = pierce_explained(line, b);
            CHECK(v.pierced == b.contains_chart(c));
            if (inner_oracle(b, us, c)) {
                CHECK(v.pierced);
                ++inside;
            }
            if (outside_outer(b, us, c)) {
                CHECK_FALSE(v.pierced);
                CHECK(v.certificate.holds());
                ++outside;
            }
        }
        // Convex combinations of arc points always lie inside.
        for (int k = 0; k < 20; ++k) {
            const Rational a = us[rng() % us.size()];
            const Rational z = us[rng() % us.size()];
            const Rational t = rand_unit(rng);
            const ChartPoint c{a + t * (z - a), b.parabola(a) + t * (b.parabola(z) - b.parabola(a))};
            CHECK(pierce(Line3(from_plane_coords(b.plane(), c), transversal_dir(rng, b)), b));
        }
    }
    CHECK(inside > 100);
    CHECK(outside > 100);
}

TEST_CASE("lines parallel to the plane") {
    const ConvexBody b = build_body(R(1, 2), 1, 1, IntervalSet::unit());
    const Line3 above({R(0), b.q() + R(1), R(0)}, {R(1), b.eps(), R(0)});
    const auto v = pierce_explained(above, b);
    CHECK_FALSE(v.pierced);
    CHECK(v.certificate.kind == "parallel");
    CHECK(v.certificate.holds());
}

TEST_CASE("lines inside the plane") {
    const IntervalSet split({{R(0), R(1, 4)}, {R(3, 4), R(1)}});
    const ConvexBody b = build_body(R(1, 3), 2, 3, split);
    auto tangent_at = [&](const Rational& t) {
        return in_plane_line(b, t, b.parabola(t), b.q() + R(2) * b.eps() * t);
    };
    // Tangent at a support point touches the body there only.
    CHECK(pierce(tangent_at(R(1, 8)), b));
    CHECK(pierce(tangent_at(R(0)), b));
    CHECK(pierce(tangent_at(R(7, 8)), b));
    // Tangent at a gap point stays below the gap chord and the parabola.
    for (long k = 5; k <= 11; ++k) {
        const auto v = pierce_explained(tangent_at(R(k, 16)), b);
        CHECK_FALSE(v.pierced);
        CHECK(v.certificate.holds());
    }
    // The top chord itself, and a copy of it shifted up.
    const Rational slope = (b.parabola(R(1)) - b.parabola(R(0))) / R(1);
    CHECK(pierce(in_plane_line(b, R(0), b.parabola(R(0)), slope), b));
    const auto up = pierce_explained(in_plane_line(b, R(0), b.parabola(R(0)) + R(1, 1 << 20), slope), b);
    CHECK_FALSE(up.pierced);
    CHECK(up.certificate.holds());
    // Lines that only run beside the support.
    CHECK_FALSE(pierce(in_plane_line(b, R(2), b.parabola(R(2)), R(1000)), b));
    // Vertical lines inside the plane: only the x-range matters.
    const Point3 vdir{R(0), R(0), R(1)};
    CHECK(pierce(Line3(from_plane_coords(b.plane(), {R(1, 2), R(0)}), vdir), b));
    CHECK(pierce(Line3(from_plane_coords(b.plane(), {R(1), R(0)}), vdir), b));
    const auto vv = pierce_explained(Line3(from_plane_coords(b.plane(), {R(3, 2), R(0)}), vdir), b);
    CHECK_FALSE(vv.pierced);
    CHECK(vv.certificate.holds());
}

TEST_CASE("a shifted ruling misses every body of a truncation") {
    const Line3 lifted({R(1, 2), R(0), R(1, 10)}, {R(0), R(1), R(1, 2)});
    for (const auto& b : truncate_family(R(1, 2), 200)) {
        const auto v = pierce_explained(lifted, b);
        CHECK_FALSE(v.pierced);
        CHECK(v.certificate.holds());
    }
}

TEST_CASE("vertical distance bound") {
    const ConvexBody full = build_body(R(1, 2), 1, 1, IntervalSet::unit());
    CHECK(max_vertical_distance(full) == R(1, 256));
    const ConvexBody dot = build_body(R(1, 2), 1, 1, IntervalSet({{R(1, 3), R(1, 3)}}));
    CHECK(max_vertical_distance(dot).is_zero());

    std::mt19937_64 rng(11);
    for (const auto& b : truncate_family(R(1, 2), 40)) {
        const Rational bound = max_vertical_distance(b);
        CHECK(bound <= b.eps());
        CHECK(bound.sign() >= 0);
        const Rational mid = (b.r_min() + b.r_max()) / R(2);
        const Point3 peak = from_plane_coords(b.plane(), {mid, b.top(mid)});
        CHECK(vertical_distance(peak) == bound);
        for (int k = 0; k < 250; ++k) {
            const Rational u = b.r_min() + rand_unit(rng) * (b.r_max() - b.r_min());
            const Rational w = b.lower(u) + rand_unit(rng) * (b.top(u) - b.lower(u));
            const Point3 p = from_plane_coords(b.plane(), {u, w});
            REQUIRE(b.contains(p));
            const Rational d = vertical_distance(p);
            CHECK(d.sign() >= 0);
            CHECK(d <= bound);
        }
    }
}

TEST_CASE("piercing matrix parallel equals serial") {
    const auto bodies = truncate_family(R(1, 2), 60);
    std::vector<Line3> lines;
    for (long k = 0; k <= 16; ++k) lines.push_back(Line3::ruling_x(R(k, 16)));
    for (long k = 0; k <= 8; ++k) lines.push_back(Line3::ruling_y(R(k, 8)));
    lines.emplace_back(Point3{R(0), R(0), R(0)}, Point3{R(1), R(1), R(1)});
    const PiercingMatrix par = piercing_matrix(bodies, lines);
    const PiercingMatrix ser = piercing_matrix_serial(bodies, lines);
    CHECK(par == ser);
    for (std::size_t r = 0; r < bodies.size(); ++r)
        for (std::size_t c = 0; c < lines.size(); ++c) CHECK(par.at(r, c) == pierce(lines[c], bodies[r]));
}

TEST_CASE("minimum line cover examples") {
    const auto ident = min_line_cover(from_rows({{0}, {1}, {2}}, 3));
    CHECK(ident.coverable);
    CHECK(ident.exact);
    CHECK(ident.columns == std::vector<std::size_t>{0, 1, 2});

    const auto one = min_line_cover(from_rows({{0, 1}, {1, 2}, {1}}, 3));
    CHECK(one.columns == std::vector<std::size_t>{1});

    const auto pairs = min_line_cover(from_rows({{0, 1}, {0, 2}, {1, 3}, {2, 3}}, 4));
    CHECK(pairs.columns == std::vector<std::size_t>{0, 3});
    CHECK(pairs.lower_bound <= 2);

    const auto bad = min_line_cover(from_rows({{0}, {}, {1}, {}}, 2));
    CHECK_FALSE(bad.coverable);
    CHECK(bad.uncovered_rows == std::vector<std::size_t>{1, 3});

    const auto empty = min_line_cover(PiercingMatrix(0, 3));
    CHECK(empty.coverable);
    CHECK(empty.columns.empty());
}

TEST_CASE("branch and bound equals brute force") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t cols = 1 + rng() % 12;
        const std::size_t rows = 1 + rng() % 20;
        const unsigned density = 15 + rng() % 50;
        PiercingMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            bool any = false;
            for (std::size_t c = 0; c < cols; ++c) {
                const bool v = rng() % 100 < density;
                m.set(r, c, v);
                any = any || v;
            }
            if (!any) m.set(r, rng() % cols, true);
        }
        const auto got = min_line_cover(m);
        REQUIRE(got.coverable);
        CHECK(got.exact);
        CHECK(got.columns == oracle::brute_force_cover(rows_of(m), cols));
        CHECK(got.lower_bound <= got.columns.size());
    }
}

TEST_CASE("greedy fallback beyond the exact limit") {
    std::mt19937_64 rng(9);
    const std::size_t cols = kExactCoverColumns + 5;
    PiercingMatrix m(60, cols);
    for (std::size_t r = 0; r < 60; ++r) {
        m.set(r, r % cols, true);
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() % 10 == 0) m.set(r, c, true);
    }
    const auto got = min_line_cover(m);
    CHECK(got.coverable);
    CHECK_FALSE(got.exact);
    CHECK(got.lower_bound >= 1);
    CHECK(got.lower_bound <= got.columns.size());
    for (std::size_t r = 0; r < 60; ++r) {
        bool hit = false;
        for (const auto c : got.columns) hit = hit || m.at(r, c);
        CHECK(hit);
    }
}

TEST_CASE("refutation examples") {
    {
        FamilyStream s(R(1, 2));
        const auto rep = refute({}, s, 10);
        REQUIRE(rep.found);
        CHECK(rep.searched == 1);
        CHECK(rep.witness->f_index() == 1);
    }
    {
        const std::vector<Line3> lines{Line3::ruling_x(R(1, 2))};
        FamilyStream s(R(1, 2));
        const auto rep = refute(lines, s);
        REQUIRE(rep.found);
        CHECK_FALSE(rep.witness->support().contains(R(1, 2)));
        CHECK(rep.lines.size() == 1);
        CHECK(rep.lines[0].group == LineGroup::L1);
        CHECK(rep.lines[0].certificate.holds());
        CHECK(verify_report(rep, lines));
        // The first miss: every earlier body has 1/2 in its support.
        const auto earlier = truncate_family(R(1, 2), rep.witness->f_index() - 1);
        for (const auto& b : earlier) CHECK(b.support().contains(R(1, 2)));
    }
    {
        const std::vector<Line3> lines{Line3::ruling_y(R(1, 3))};
        FamilyStream s(R(1, 2));
        const auto rep = refute(lines, s);
        REQUIRE(rep.found);
        const Interval yr = rep.witness->y_range();
        CHECK((R(1, 3) < yr.lo || R(1, 3) > yr.hi));
        CHECK(rep.lines[0].group == LineGroup::L2);
        CHECK(verify_report(rep, lines));
    }
    {
        const std::vector<Line3> lines{Line3::ruling_x(R(0)), Line3::ruling_x(R(1)), Line3::ruling_y(R(1, 2)),
                                       Line3({R(0), R(0), R(0)}, {R(1), R(1), R(1)})};
        FamilyStream s(R(1, 2));
        const auto rep = refute(lines, s);
        REQUIRE(rep.found);
        CHECK(rep.lines.size() == 4);
        CHECK(rep.lines[3].group == LineGroup::L3);
        CHECK(verify_report(rep, lines));
        for (const auto& l : lines) CHECK_FALSE(pierce(l, *rep.witness));
        // Tampering with the witness breaks verification.
        auto forged = rep;
        forged.witness = build_body(R(1, 2), 1, 1, IntervalSet::unit());
        CHECK_FALSE(verify_report(forged, lines));
    }
    {
        FamilyStream s(R(1, 2));
        const std::vector<Line3> lines{Line3::ruling_x(R(1, 2))};
        const auto rep = refute(lines, s, 3);
        CHECK_FALSE(rep.found);
        CHECK(rep.searched == 3);
    }
}
