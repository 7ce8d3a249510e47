#include "ruled/body.hpp"

#include <stdexcept>

namespace ruled {

ConvexBody::ConvexBody(Rational q, std::size_t m, std::size_t f_index, Rational eps, IntervalSet support)
    : q_(std::move(q)), m_(m), f_(f_index), plane_(q_, std::move(eps)), support_(std::move(support)) {
    if (support_.empty()) throw std::invalid_argument("body support must be nonempty");
}

Rational ConvexBody::parabola(const Rational& u) const { return u * (q_ + eps() * u); }

Rational chord_value(const ConvexBody& body, const Rational& a, const Rational& b, const Rational& u) {
    if (a == b) return body.parabola(a);
    // Chord of q*u + eps*u^2 between a and b: slope q + eps*(a+b).
    const Rational slope = body.q() + body.eps() * (a + b);
    return body.parabola(a) + slope * (u - a);
}

Rational ConvexBody::top(const Rational& u) const { return chord_value(*this, r_min(), r_max(), u); }

Rational ConvexBody::lower(const Rational& u) const {
    if (auto gap = support_.gap_containing(u)) return chord_value(*this, gap->lo, gap->hi, u);
    return parabola(u);
}

Interval ConvexBody::y_range() const { return {plane_.y_at(r_min()), plane_.y_at(r_max())}; }

bool ConvexBody::contains_chart(const ChartPoint& c) const {
    if (c.u < r_min() || r_max() < c.u) return false;
    return c.w <= top(c.u) && lower(c.u) <= c.w;
}

bool ConvexBody::contains(const Point3& p) const {
    return plane_.contains(p) && contains_chart({p.x, p.z});
}

Point3 ConvexBody::arc_point(const Rational& r) const {
    const Rational y = plane_.y_at(r);
    return {r, y, r * y};
}

std::vector<Point3> ConvexBody::vertices() const {
    std::vector<Point3> out;
    for (const auto& iv : support_.intervals()) {
        out.push_back(arc_point(iv.lo));
        if (iv.hi != iv.lo) out.push_back(arc_point(iv.hi));
    }
    return out;
}

}  // namespace ruled
