#include <doctest.h>

#include <set>
#include <unordered_set>

#include "oracles.hpp"
#include "ruled/family.hpp"

using namespace ruled;

namespace {

Rational R(long p, long q = 1) { return {p, q}; }

// All non-decreasing pick sequences of a level in lexicographic order,
// filtered by the membership conditions of M_m.
std::vector<std::vector<std::size_t>> brute_members(const Rational& delta, unsigned level, const Rational& include,
                                                    const std::vector<Rational>& exclude) {
    const CoverSpec c = make_cover(delta, level);
    const std::size_t P = c.picks_per_set();
    const std::size_t r = c.centers.size();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> pick(P, 0);
    for (;;) {
        const IntervalSet k = remove_intervals(c, pick);
        bool ok = k.contains(include);
        for (const auto& x : exclude) ok = ok && !k.contains(x);
        if (ok) out.push_back(pick);
        std::size_t i = P;
        while (i > 0 && pick[i - 1] == r - 1) --i;
        if (i == 0) break;
        const std::size_t v = pick[i - 1] + 1;
        for (std::size_t j = i - 1; j < P; ++j) pick[j] = v;
    }
    return out;
}

bool in_box(const Point3& p) {
    auto ok = [](const Rational& v) { return v.sign() >= 0 && v <= R(2); };
    return ok(p.x) && ok(p.y) && ok(p.z);
}

}  // namespace

TEST_CASE("rational enumeration order") {
    CHECK(enumerate_q0(1) == R(0));
    CHECK(enumerate_q0(2) == R(1));
    CHECK(enumerate_q0(3) == R(1, 2));
    CHECK(enumerate_q0(4) == R(1, 3));
    CHECK(enumerate_q0(5) == R(2, 3));
    CHECK(enumerate_q0(6) == R(1, 4));
    CHECK(enumerate_q0(7) == R(3, 4));
    CHECK(enumerate_q0(8) == R(1, 5));
    CHECK_THROWS_AS((void)enumerate_q0(0), std::invalid_argument);
}

TEST_CASE("rational enumeration is injective and index_of inverts it") {
    RationalEnumeration e;
    std::unordered_set<Rational, RationalHash> seen;
    for (std::size_t n = 1; n <= 10000; ++n) {
        const Rational& q = e.at(n);
        CHECK(seen.insert(q).second);
        CHECK(q.sign() >= 0);
        CHECK(q <= R(1));
    }
    for (std::size_t n = 1; n <= 2000; n += 37) CHECK(RationalEnumeration::index_of(e.at(n)) == n);
}

TEST_CASE("eps sequence") {
    CHECK(eps_of(1) == R(1, 64));
    CHECK(eps_of(2) == R(1, 256));
    for (std::size_t n = 1; n < 1000; ++n) CHECK(eps_of(n + 1) < eps_of(n));
    CHECK(eps_of(49) < Rational::inv_pow4(50));
    CHECK_THROWS_AS((void)eps_of(0), std::invalid_argument);
}

TEST_CASE("Q_m terms") {
    FamilyStream s(R(1, 2));
    CHECK(s.next_qm_term(3) == R(3, 4));
    CHECK(s.next_qm_term(3) == R(1, 4));
    CHECK(s.next_qm_term(3) == R(5, 8));
    CHECK(s.next_qm_term(3) == R(3, 8));

    FamilyStream z(R(1, 2));
    CHECK(z.next_qm_term(1) == R(1, 4));
    CHECK(z.next_qm_term(1) == R(1, 8));
    CHECK(z.next_qm_term(1) == R(1, 16));

    FamilyStream c(R(1, 2));
    CHECK(c.next_qm_term(2) == R(3, 4));  // q_2 = 1 takes 3/4 first
    CHECK(c.registered(R(3, 4)));
    CHECK(c.next_qm_term(3) == R(1, 4));  // so q_3 = 1/2 skips it
}

TEST_CASE("Q_m terms converge to q_m and stay distinct") {
    FamilyStream s(R(1, 2));
    std::unordered_set<Rational, RationalHash> seen;
    for (std::size_t m = 1; m <= 12; ++m) {
        Rational last_gap = R(2);
        for (int n = 0; n < 40; ++n) {
            const Rational q = s.next_qm_term(m);
            CHECK(seen.insert(q).second);
            CHECK(q != s.q0(m));
            CHECK(q.sign() >= 0);
            CHECK(q <= R(1));
            const Rational gap = (q - s.q0(m)).abs();
            CHECK(gap <= last_gap);
            last_gap = gap;
        }
        CHECK(last_gap < Rational::pow2(-15));
    }
}

TEST_CASE("membership walk equals the filtered lexicographic enumeration") {
    RationalEnumeration e;
    for (const Rational& delta : {R(1, 2), R(3, 4)}) {
        for (std::size_t m = 1; m <= 7; ++m) {
            std::vector<Rational> exclude;
            for (std::size_t k = 1; k < m; ++k) exclude.push_back(e.at(k));
            std::vector<std::vector<std::size_t>> want = brute_members(delta, 1, e.at(m), exclude);
            const std::size_t level1 = want.size();
            auto l2 = brute_members(delta, 2, e.at(m), exclude);
            want.insert(want.end(), l2.begin(), l2.end());
            MembershipSearch walk(delta, e.at(m), exclude);
            if (want.empty()) {
                (void)walk.next();
                CHECK(walk.level() > 2u);
                continue;
            }
            const std::size_t n = std::min<std::size_t>(want.size(), 400);
            for (std::size_t k = 0; k < n; ++k) {
                const IntervalSet set = walk.next();
                CHECK(walk.level() == (k < level1 ? 1u : 2u));
                CHECK(walk.picks() == want[k]);
                CHECK(set.contains(e.at(m)));
            }
        }
    }
}

TEST_CASE("assign_g membership conditions") {
    FamilyStream s(R(1, 2));
    const Rational q1 = s.next_qm_term(1);
    const IntervalSet g1 = s.assign_g(q1, 1);
    CHECK(g1.contains(R(0)));
    CHECK(g1.min() == R(0));
    CHECK(s.assign_g(q1, 1) == g1);  // memoized

    const Rational q3 = s.next_qm_term(3);
    const IntervalSet g3 = s.assign_g(q3, 3);
    CHECK(g3.contains(R(1, 2)));
    CHECK_FALSE(g3.contains(R(0)));
    CHECK_FALSE(g3.contains(R(1)));

    const Rational q3b = s.next_qm_term(3);
    CHECK(s.assign_g(q3b, 3) != g3);
}

TEST_CASE("build_body hull description") {
    const ConvexBody full = build_body(R(1, 2), 1, 1, IntervalSet::unit());
    CHECK(full.eps() == R(1, 64));
    CHECK(full.arc_point(R(0)) == Point3{R(0), R(1, 2), R(0)});
    CHECK(full.arc_point(R(1)) == Point3{R(1), R(33, 64), R(33, 64)});
    CHECK(Line3::ruling_x(R(0)).line_class().kind == RulingKind::R1);
    CHECK(full.top(R(0)) == R(0));
    CHECK(full.top(R(1)) == R(33, 64));
    CHECK(full.lower(R(1, 2)) == R(1, 4) + R(1, 256));
    CHECK(full.contains_chart({R(1, 2), R(33, 128)}));
    CHECK_FALSE(full.contains_chart({R(1, 2), R(33, 128) + R(1, 1000000)}));
    // Extreme points lie on l_0 and l_1 and on the surface.
    for (const auto& v : full.vertices()) CHECK(surface_residual(v).is_zero());

    const IntervalSet pt({{R(1, 2), R(1, 2)}});
    const ConvexBody dot = build_body(R(1, 2), 1, 1, pt);
    CHECK(dot.contains(dot.arc_point(R(1, 2))));
    CHECK_FALSE(dot.contains_chart({R(1, 2), dot.parabola(R(1, 2)) + R(1, 1 << 20)}));
    CHECK_FALSE(dot.contains_chart({R(1, 2) + R(1, 1 << 20), dot.parabola(R(1, 2))}));

    const IntervalSet split({{R(0), R(1, 4)}, {R(3, 4), R(1)}});
    const ConvexBody gap = build_body(R(1, 2), 1, 1, split);
    for (long k = 1; k < 8; ++k) {
        const Rational u = R(1, 4) + R(k, 16);
        CHECK(gap.lower(u) > gap.parabola(u));
        CHECK(gap.lower(u) == chord_value(gap, R(1, 4), R(3, 4), u));
    }
    CHECK(gap.lower(R(1, 8)) == gap.parabola(R(1, 8)));

    CHECK_THROWS_AS((void)build_body(R(1, 2), 1, 1, IntervalSet()), std::invalid_argument);
}

TEST_CASE("truncations") {
    const auto one = truncate_family(R(1, 2), 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].m() == 1);
    CHECK(one[0].q() == R(1, 4));
    CHECK(one[0].f_index() == 1);

    const auto a = truncate_family(R(1, 2), 10);
    const auto b = truncate_family(R(1, 2), 10);
    CHECK(a == b);
}

TEST_CASE("stream invariants over a truncation") {
    const Rational delta(1, 2);
    FamilyStream s(delta);
    RationalEnumeration e;
    const auto bodies = truncate_family(s, 300);
    std::unordered_set<Rational, RationalHash> qs;
    std::set<std::string> supports;
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        const ConvexBody& b = bodies[i];
        CHECK(b.f_index() == i + 1);
        CHECK(qs.insert(b.q()).second);
        CHECK(supports.insert(set_key(b.support())).second);
        CHECK(b.support().contains(e.at(b.m())));
        for (std::size_t k = 1; k < b.m(); ++k) CHECK_FALSE(b.support().contains(e.at(k)));
        CHECK(b.support().measure() >= delta);
        CHECK(b.support().subset_of({R(0), R(1)}));
        for (const auto& v : b.vertices()) CHECK(in_box(v));
        if (i > 0) CHECK(b.eps() < bodies[i - 1].eps());
    }
    CHECK(bodies.back().eps() < Rational::inv_pow4(50));
}

TEST_CASE("each arc point is extreme in its body") {
    const auto bodies = truncate_family(R(1, 2), 40);
    for (const auto& b : bodies) {
        std::vector<Rational> probes;
        for (const auto& iv : b.support().intervals()) {
            probes.push_back(iv.lo);
            probes.push_back(iv.hi);
            probes.push_back((iv.lo + iv.hi) / R(2));
        }
        for (const auto& r : probes) {
            const IntervalSet rest = b.support().minus_open(r - R(1, 1024), r + R(1, 1024))
                                         .intersect(IntervalSet({{r - R(2), r - R(1, 1024)}, {r + R(1, 1024), r + R(2)}}));
            if (rest.empty()) continue;
            const ConvexBody without(b.q(), b.m(), b.f_index(), b.eps(), rest);
            CHECK(b.contains(b.arc_point(r)));
            CHECK_FALSE(without.contains(b.arc_point(r)));
        }
    }
}
