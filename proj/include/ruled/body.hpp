#pragma once

#include <optional>
#include <vector>

#include "ruled/geometry.hpp"
#include "ruled/interval_set.hpp"

namespace ruled {

/**
 * One member C_q of the family: the convex hull of the points
 * (r, q + eps*r, r*(q + eps*r)), r in the support, all lying on the plane
 * y = q + eps*x.  In the (u, w) = (x, z) chart those points trace the
 * parabola w = q*u + eps*u^2, so the hull is the region between the chord
 * joining the extreme support points and the lower envelope (parabola over
 * the support, chords across the gaps).
 */
class ConvexBody {
public:
    /// Throws std::invalid_argument for an empty support.
    ConvexBody(Rational q, std::size_t m, std::size_t f_index, Rational eps, IntervalSet support);

    [[nodiscard]] const Rational& q() const { return q_; }
    [[nodiscard]] std::size_t m() const { return m_; }
    [[nodiscard]] std::size_t f_index() const { return f_; }
    [[nodiscard]] const Rational& eps() const { return plane_.eps(); }
    [[nodiscard]] const IntervalSet& support() const { return support_; }
    [[nodiscard]] const TiltedPlane& plane() const { return plane_; }
    [[nodiscard]] const Rational& r_min() const { return support_.min(); }
    [[nodiscard]] const Rational& r_max() const { return support_.max(); }

    /// w = q*u + eps*u^2, the trace of z = xy on the plane.
    [[nodiscard]] Rational parabola(const Rational& u) const;
    /// Chord from (r_min, P(r_min)) to (r_max, P(r_max)).
    [[nodiscard]] Rational top(const Rational& u) const;
    /// Lower hull boundary at u in [r_min, r_max].
    [[nodiscard]] Rational lower(const Rational& u) const;
    /// y-range of the body: [q + eps*r_min, q + eps*r_max].
    [[nodiscard]] Interval y_range() const;

    [[nodiscard]] bool contains_chart(const ChartPoint& c) const;
    [[nodiscard]] bool contains(const Point3& p) const;

    /// 3D point of the body on the ruling x = r (r in the support).
    [[nodiscard]] Point3 arc_point(const Rational& r) const;
    /// Arc points at every support endpoint.  Coordinates along the arc are
    /// monotone in r, so these bound the body's bounding box.
    [[nodiscard]] std::vector<Point3> vertices() const;

    friend bool operator==(const ConvexBody& a, const ConvexBody& b) {
        return a.q_ == b.q_ && a.m_ == b.m_ && a.f_ == b.f_ && a.eps() == b.eps() && a.support_ == b.support_;
    }

private:
    Rational q_;
    std::size_t m_;
    std::size_t f_;
    TiltedPlane plane_;
    IntervalSet support_;
};

/// Chord value at u of the parabola of `body` between abscissae a < b.
[[nodiscard]] Rational chord_value(const ConvexBody& body, const Rational& a, const Rational& b, const Rational& u);

}  // namespace ruled
