#include "ruled/geometry.hpp"

#include <stdexcept>

namespace ruled {

std::string LineClass::name() const {
    switch (kind) {
        case RulingKind::R1: return "R1";
        case RulingKind::R2: return "R2";
        case RulingKind::Other: break;
    }
    return "Other";
}

LineClass classify_line(const Point3& base, const Point3& dir) {
    // x = c, z = c*y: direction (0, dy, c*dy), base on the ruling.
    if (dir.x.is_zero() && !dir.y.is_zero()) {
        const Rational& c = base.x;
        if (dir.z == c * dir.y && base.z == c * base.y) return {RulingKind::R1, c};
    }
    // y = b, z = b*x: direction (dx, 0, b*dx).
    if (dir.y.is_zero() && !dir.x.is_zero()) {
        const Rational& b = base.y;
        if (dir.z == b * dir.x && base.z == b * base.x) return {RulingKind::R2, b};
    }
    return {};
}

Line3::Line3(Point3 base, Point3 dir) : base_(std::move(base)), dir_(std::move(dir)) {
    if (dir_.x.is_zero() && dir_.y.is_zero() && dir_.z.is_zero()) {
        throw std::invalid_argument("line direction must be nonzero");
    }
    class_ = classify_line(base_, dir_);
}

Line3 Line3::ruling_x(const Rational& r) { return {{r, 0, 0}, {0, 1, r}}; }

Line3 Line3::ruling_y(const Rational& b) { return {{0, b, 0}, {1, 0, b}}; }

Point3 Line3::at(const Rational& s) const {
    return {base_.x + s * dir_.x, base_.y + s * dir_.y, base_.z + s * dir_.z};
}

QPoint3 Line3::at(const QuadExt& s) const {
    return {QuadExt(base_.x) + s * QuadExt(dir_.x), QuadExt(base_.y) + s * QuadExt(dir_.y),
            QuadExt(base_.z) + s * QuadExt(dir_.z)};
}

SurfaceHit line_surface_intersection(const Line3& l) {
    const Point3& p = l.base();
    const Point3& d = l.dir();
    // (px + s dx)(py + s dy) = pz + s dz
    const Rational A = d.x * d.y;
    const Rational B = p.x * d.y + p.y * d.x - d.z;
    const Rational C = p.x * p.y - p.z;
    const RootSet roots = solve_quadratic(A, B, C, true);
    if (roots.kind == RootSet::Kind::AllReals) return OnSurface{};
    std::vector<QPoint3> pts;
    pts.reserve(roots.roots.size());
    for (const auto& s : roots.roots) pts.push_back(l.at(s));
    return pts;
}

Rational surface_residual(const Point3& p) { return p.z - p.x * p.y; }
QuadExt surface_residual(const QPoint3& p) { return p.z - p.x * p.y; }
Rational vertical_distance(const Point3& p) { return surface_residual(p).abs(); }
QuadExt vertical_distance(const QPoint3& p) { return surface_residual(p).abs(); }

TiltedPlane::TiltedPlane(Rational q, Rational eps) : q_(std::move(q)), eps_(std::move(eps)) {
    if (eps_.sign() <= 0) throw std::invalid_argument("plane tilt must be positive");
}

PlaneIntersection line_plane_intersection(const Line3& l, const TiltedPlane& p) {
    const Point3& b = l.base();
    const Point3& d = l.dir();
    // b.y + s d.y = q + eps (b.x + s d.x)
    const Rational denom = d.y - p.eps() * d.x;
    const Rational rhs = p.y_at(b.x) - b.y;
    if (denom.is_zero()) {
        if (rhs.is_zero()) return Contained{};
        return Parallel{};
    }
    Rational s = rhs / denom;
    Point3 pt = l.at(s);
    return PlaneHit{std::move(pt), std::move(s)};
}

ChartPoint plane_coords(const TiltedPlane& p, const Point3& pt) {
    if (!p.contains(pt)) {
        throw std::invalid_argument("point is not on the plane y = " + p.q().str() + " + " + p.eps().str() + "*x");
    }
    return {pt.x, pt.z};
}

Point3 from_plane_coords(const TiltedPlane& p, const ChartPoint& c) { return {c.u, p.y_at(c.u), c.w}; }

}  // namespace ruled
