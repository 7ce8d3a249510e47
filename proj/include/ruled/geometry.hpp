#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ruled/quad_ext.hpp"

namespace ruled {

struct Point3 {
    Rational x, y, z;
    friend bool operator==(const Point3&, const Point3&) = default;
};

/// Point with coordinates in a quadratic extension (line/surface hits).
struct QPoint3 {
    QuadExt x, y, z;
};

/// Which family of rulings of z = xy a line belongs to, if any.
///  R1(c): x = c, z = c*y     R2(b): y = b, z = b*x
enum class RulingKind { R1, R2, Other };

struct LineClass {
    RulingKind kind = RulingKind::Other;
    Rational param;  // c for R1, b for R2

    [[nodiscard]] std::string name() const;
    friend bool operator==(const LineClass&, const LineClass&) = default;
};

/**
 * Rational parametric line base + s*dir.  The ruling class is derived
 * from the data on construction and never taken from outside.
 */
class Line3 {
public:
    /// Throws std::invalid_argument for a zero direction.
    Line3(Point3 base, Point3 dir);

    /// The ruling x = r, z = r*y.
    static Line3 ruling_x(const Rational& r);
    /// The ruling y = b, z = b*x.
    static Line3 ruling_y(const Rational& b);

    [[nodiscard]] const Point3& base() const { return base_; }
    [[nodiscard]] const Point3& dir() const { return dir_; }
    [[nodiscard]] const LineClass& line_class() const { return class_; }
    [[nodiscard]] Point3 at(const Rational& s) const;
    [[nodiscard]] QPoint3 at(const QuadExt& s) const;

private:
    Point3 base_;
    Point3 dir_;
    LineClass class_;
};

[[nodiscard]] LineClass classify_line(const Point3& base, const Point3& dir);
[[nodiscard]] inline LineClass classify_line(const Line3& l) { return l.line_class(); }

struct OnSurface {};
using SurfaceHit = std::variant<OnSurface, std::vector<QPoint3>>;

/// Intersection of a line with z = xy: the whole line, or 0..2 points
/// (a tangency is reported once).
[[nodiscard]] SurfaceHit line_surface_intersection(const Line3& l);

/// z - xy at a point.
[[nodiscard]] Rational surface_residual(const Point3& p);
[[nodiscard]] QuadExt surface_residual(const QPoint3& p);
/// |z - xy|.
[[nodiscard]] Rational vertical_distance(const Point3& p);
[[nodiscard]] QuadExt vertical_distance(const QPoint3& p);

/// The plane y = q + eps*x, eps > 0.
class TiltedPlane {
public:
    TiltedPlane(Rational q, Rational eps);

    [[nodiscard]] const Rational& q() const { return q_; }
    [[nodiscard]] const Rational& eps() const { return eps_; }
    [[nodiscard]] Rational y_at(const Rational& x) const { return q_ + eps_ * x; }
    [[nodiscard]] bool contains(const Point3& p) const { return p.y == y_at(p.x); }

private:
    Rational q_;
    Rational eps_;
};

struct Contained {};
struct Parallel {};
struct PlaneHit {
    Point3 point;
    Rational s;  // line parameter of the point
};
using PlaneIntersection = std::variant<PlaneHit, Contained, Parallel>;

[[nodiscard]] PlaneIntersection line_plane_intersection(const Line3& l, const TiltedPlane& p);

/// Chart (u, w) = (x, z) on a tilted plane.
struct ChartPoint {
    Rational u;
    Rational w;
    friend bool operator==(const ChartPoint&, const ChartPoint&) = default;
};

/// Throws std::invalid_argument when pt is off the plane.
[[nodiscard]] ChartPoint plane_coords(const TiltedPlane& p, const Point3& pt);
[[nodiscard]] Point3 from_plane_coords(const TiltedPlane& p, const ChartPoint& c);

}  // namespace ruled
