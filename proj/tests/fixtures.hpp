#pragma once
// Deterministic line sets for refutation tests and the acceptance run.

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ruled/io.hpp"
#include "ruled/refute.hpp"

namespace ruled::fixture {

inline Rational small_fraction(std::mt19937_64& rng) {
    const long d = 1 + static_cast<long>(rng() % 8);
    return {static_cast<long>(rng() % (d + 1)), d};
}

inline Line3 random_l1(std::mt19937_64& rng) {
    if (rng() % 6 == 0) return Line3::ruling_x(Rational(5, 4) + small_fraction(rng));
    return Line3::ruling_x(small_fraction(rng));
}

inline Line3 random_l2(std::mt19937_64& rng) { return Line3::ruling_y(oracle::random_unit(rng, 24)); }

inline Line3 random_l3(std::mt19937_64& rng) {
    for (;;) {
        const Point3 base{oracle::random_rational(rng, 3, 5), oracle::random_rational(rng, 3, 5),
                          oracle::random_rational(rng, 3, 5)};
        const Point3 dir{oracle::random_rational(rng, 3, 5), oracle::random_rational(rng, 3, 5),
                         oracle::random_rational(rng, 3, 5)};
        if (dir.x.is_zero() && dir.y.is_zero() && dir.z.is_zero()) continue;
        const Line3 l(base, dir);
        if (group_of(l) == LineGroup::L3) return l;
    }
}

/// Fixture k (1-based) of 20: size 1 + (k-1) % 5, groups cycling L1, L2, L3
/// from a per-fixture offset so every set past size 2 mixes groups.
inline std::vector<Line3> refute_set(int k) {
    std::mt19937_64 rng(1000 + static_cast<unsigned>(k));
    const int size = 1 + (k - 1) % 5;
    std::vector<Line3> out;
    for (int i = 0; i < size; ++i) {
        switch ((i + k) % 3) {
            case 0: out.push_back(random_l1(rng)); break;
            case 1: out.push_back(random_l2(rng)); break;
            default: out.push_back(random_l3(rng)); break;
        }
    }
    return out;
}

inline constexpr int kRefuteSets = 20;

/// Nested pools of L1 lines, sizes 2, 4, 6.
inline std::vector<std::vector<Line3>> nested_pools() {
    const std::vector<Rational> rs{{1, 3}, {3, 4}, {0, 1}, {1, 2}, {5, 8}, {1, 1}};
    std::vector<std::vector<Line3>> pools;
    for (const std::size_t n : {2u, 4u, 6u}) {
        std::vector<Line3> pool;
        for (std::size_t i = 0; i < n; ++i) pool.push_back(Line3::ruling_x(rs[i]));
        pools.push_back(pool);
    }
    return pools;
}

inline std::string lines_json(const std::vector<Line3>& lines) {
    Json arr = Json::array();
    for (const auto& l : lines) arr.push_back(to_json(l));
    return arr.dump(2) + "\n";
}

}  // namespace ruled::fixture
