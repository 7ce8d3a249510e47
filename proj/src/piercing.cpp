#include "ruled/piercing.hpp"

#include <stdexcept>

namespace ruled {

bool Inequality::holds() const {
    if (rel == "<") return lhs < rhs;
    if (rel == "<=") return lhs <= rhs;
    if (rel == "=") return lhs == rhs;
    if (rel == "!=") return lhs != rhs;
    if (rel == ">=") return lhs >= rhs;
    if (rel == ">") return lhs > rhs;
    throw std::invalid_argument("unknown relation '" + rel + "'");
}

bool Certificate::holds() const {
    if (inequalities.empty()) return false;
    for (const auto& q : inequalities) {
        if (!q.holds()) return false;
    }
    return true;
}

namespace {

PierceVerdict hit() { return {true, {}}; }

PierceVerdict miss(std::string kind, std::vector<Inequality> ineqs) {
    return {false, {std::move(kind), std::move(ineqs)}};
}

PierceVerdict chart_verdict(const ConvexBody& body, const ChartPoint& c) {
    if (c.u < body.r_min()) return miss("left-of-support", {{"u < r_min", c.u, "<", body.r_min()}});
    if (body.r_max() < c.u) return miss("right-of-support", {{"u > r_max", c.u, ">", body.r_max()}});
    const Rational top = body.top(c.u);
    if (top < c.w) return miss("above-top-chord", {{"w > top chord", c.w, ">", top}});
    if (auto gap = body.support().gap_containing(c.u)) {
        const Rational chord = chord_value(body, gap->lo, gap->hi, c.u);
        if (c.w < chord) {
            return miss("below-gap-chord", {{"gap lower end < u", gap->lo, "<", c.u},
                                             {"u < gap upper end", c.u, "<", gap->hi},
                                             {"w < gap chord", c.w, "<", chord}});
        }
        return hit();
    }
    const Rational low = body.parabola(c.u);
    if (c.w < low) return miss("below-parabola", {{"w < parabola", c.w, "<", low}});
    return hit();
}

// Line lying in the plane, written in the chart as w = alpha + beta*u.
PierceVerdict in_plane_verdict(const ConvexBody& body, const Rational& alpha, const Rational& beta) {
    const Rational& a = body.r_min();
    const Rational& b = body.r_max();
    auto line_w = [&](const Rational& u) { return alpha + beta * u; };

    // u-range where the line is on or under the top chord.
    Rational lo = a;
    Rational hi = b;
    const Rational top_slope = a == b ? Rational(0) : (body.top(b) - body.top(a)) / (b - a);
    const Rational top_at0 = body.top(a) - top_slope * a;
    const Rational k = top_slope - beta;   // h1(u) = (top_at0 - alpha) + k*u >= 0
    const Rational c0 = top_at0 - alpha;
    if (k.sign() > 0) {
        lo = max(lo, -c0 / k);
    } else if (k.sign() < 0) {
        hi = min(hi, -c0 / k);
    } else if (c0.sign() < 0) {
        hi = a - Rational(1);
    }
    if (hi < lo) {
        return miss("in-plane-above-top-chord", {{"line above chord at r_min", line_w(a), ">", body.top(a)},
                                                 {"line above chord at r_max", line_w(b), ">", body.top(b)}});
    }

    // line - lower envelope is concave; its maximum on [lo, hi] sits at an
    // interval end, a support endpoint, or the parabola's tangency point.
    std::vector<Rational> cands{lo, hi};
    for (const auto& iv : body.support().intervals()) {
        if (lo <= iv.lo && iv.lo <= hi) cands.push_back(iv.lo);
        if (lo <= iv.hi && iv.hi <= hi) cands.push_back(iv.hi);
    }
    const Rational tangency = (beta - body.q()) / (Rational(2) * body.eps());
    if (lo <= tangency && tangency <= hi && body.support().contains(tangency)) cands.push_back(tangency);

    const Rational* best = nullptr;
    Rational best_gap;
    for (const auto& u : cands) {
        const Rational g = line_w(u) - body.lower(u);
        if (best == nullptr || best_gap < g) {
            best = &u;
            best_gap = g;
        }
    }
    if (best_gap.sign() >= 0) return hit();
    return miss("in-plane-below-lower-envelope",
                {{"lo <= u*", lo, "<=", *best},
                 {"u* <= hi", *best, "<=", hi},
                 {"max(line - lower envelope) < 0", line_w(*best), "<", body.lower(*best)}});
}

}  // namespace

PierceVerdict pierce_explained(const Line3& line, const ConvexBody& body) {
    const auto meet = line_plane_intersection(line, body.plane());
    if (const auto* p = std::get_if<PlaneHit>(&meet)) {
        return chart_verdict(body, plane_coords(body.plane(), p->point));
    }
    const Point3& o = line.base();
    const Point3& d = line.dir();
    if (std::holds_alternative<Parallel>(meet)) {
        return miss("parallel", {{"dy - eps*dx", d.y - body.eps() * d.x, "=", Rational(0)},
                                 {"q + eps*x0 - y0", body.plane().y_at(o.x) - o.y, "!=", Rational(0)}});
    }
    if (d.x.is_zero()) {
        // Vertical line inside the plane at u = x0.
        if (o.x < body.r_min()) return miss("in-plane-left-of-support", {{"u < r_min", o.x, "<", body.r_min()}});
        if (body.r_max() < o.x) return miss("in-plane-right-of-support", {{"u > r_max", o.x, ">", body.r_max()}});
        return hit();
    }
    const Rational beta = d.z / d.x;
    return in_plane_verdict(body, o.z - beta * o.x, beta);
}

bool pierce(const Line3& line, const ConvexBody& body) { return pierce_explained(line, body).pierced; }

Rational max_vertical_distance(const ConvexBody& body) {
    const Rational span = body.r_max() - body.r_min();
    return body.eps() * span * span / Rational(4);
}

PiercingMatrix piercing_matrix(std::span<const ConvexBody> bodies, std::span<const Line3> lines) {
    PiercingMatrix out(bodies.size(), lines.size());
    const auto total = static_cast<long>(bodies.size() * lines.size());
    const std::size_t cols = lines.size();
#pragma omp parallel for schedule(dynamic, 8)
    for (long k = 0; k < total; ++k) {
        const auto r = static_cast<std::size_t>(k) / cols;
        const auto c = static_cast<std::size_t>(k) % cols;
        out.set(r, c, pierce(lines[c], bodies[r]));
    }
    return out;
}

PiercingMatrix piercing_matrix_serial(std::span<const ConvexBody> bodies, std::span<const Line3> lines) {
    PiercingMatrix out(bodies.size(), lines.size());
    for (std::size_t r = 0; r < bodies.size(); ++r) {
        for (std::size_t c = 0; c < lines.size(); ++c) out.set(r, c, pierce(lines[c], bodies[r]));
    }
    return out;
}

}  // namespace ruled
