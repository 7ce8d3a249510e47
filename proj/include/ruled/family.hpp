#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ruled/body.hpp"
#include "ruled/cover.hpp"

namespace ruled {

/**
 * Enumeration of the rationals in [0,1]: 0, 1, then reduced fractions by
 * increasing denominator and, within a denominator, increasing numerator.
 * Indices start at 1.
 */
class RationalEnumeration {
public:
    [[nodiscard]] const Rational& at(std::size_t n);
    /// 1-based position of x in the enumeration; x must lie in [0,1].
    [[nodiscard]] static std::size_t index_of(const Rational& x);

private:
    void extend_to(std::size_t n);

    std::vector<Rational> table_;
    long next_den_ = 2;
};

[[nodiscard]] Rational enumerate_q0(std::size_t n);

/// eps_n = 4^{-(n+2)}.
[[nodiscard]] Rational eps_of(std::size_t n);

/// Builds C_q with eps = eps_of(f_index).
[[nodiscard]] ConvexBody build_body(const Rational& q, std::size_t m, std::size_t f_index, IntervalSet support);

/**
 * Walks the support sets K of the level covers (level 1, 2, ... and, inside a
 * level, pick multisets in lexicographic order) that contain `include` and
 * avoid every point of `exclude`.
 *
 * Centres sit on the grid k*h with h = length/2, so a point x is covered
 * only by centres k with |k - x/h| < 1.  That makes the minimum number of
 * picks needed to cover the remaining excluded points computable by the
 * greedy interval cover, which is used as an exact prune: every prefix the
 * walk keeps has a valid completion.
 */
class MembershipSearch {
public:
    MembershipSearch(Rational delta, Rational include, std::vector<Rational> exclude);

    /// Next valid set in canonical order.  Distinct multisets may give the
    /// same set; callers that need injectivity filter repeats.
    [[nodiscard]] IntervalSet next();

    [[nodiscard]] unsigned level() const { return level_; }
    [[nodiscard]] const std::vector<std::size_t>& picks() const { return picks_; }

private:
    void enter_level(unsigned level);
    [[nodiscard]] bool allowed(std::size_t k) const;
    /// Frontier (first excluded point not covered) after placing centre v at
    /// position pos, or nullopt when no completion exists.
    [[nodiscard]] std::optional<std::size_t> feasible(std::size_t pos, std::size_t v) const;
    [[nodiscard]] std::size_t greedy_need(std::size_t from, std::size_t min_center) const;
    [[nodiscard]] std::size_t first_at_or_after(std::size_t from, const Rational& bound) const;
    [[nodiscard]] bool complete_from(std::size_t pos);
    [[nodiscard]] bool advance();

    Rational delta_;
    Rational include_;
    std::vector<Rational> exclude_;  // sorted
    unsigned level_ = 0;
    CoverSpec cover_;
    std::vector<std::size_t> picks_;
    std::vector<std::size_t> front_;
    bool positioned_ = false;
};

/// One emitted element of T with its assignment.
struct Emission {
    Rational q;
    std::size_t m = 0;
    std::size_t f = 0;  // 1-based emission position
    IntervalSet support;
};

/**
 * Deterministic lazy enumeration of the family.  Emissions dovetail over
 * (m, n) ordered by m + n, then m; the n-th visit to m draws the next term
 * of Q_m, which converges to q_m through offsets q_m +- 2^{-j}, j >= 2.  A
 * global registry keeps all emitted values distinct.
 */
class FamilyStream {
public:
    explicit FamilyStream(Rational delta);

    [[nodiscard]] const Rational& delta() const { return delta_; }

    /// Draws and registers the next term of Q_m.
    Rational next_qm_term(std::size_t m);
    /// g(q) for q drawn from Q_m; memoized, injective.
    IntervalSet assign_g(const Rational& q, std::size_t m);

    /// Next emission in dovetail order, with g assigned.
    Emission next();
    /// next() packaged as a body.
    ConvexBody next_body();

    [[nodiscard]] std::size_t emitted() const { return emitted_; }
    [[nodiscard]] bool registered(const Rational& x) const { return registry_.contains(x); }
    [[nodiscard]] const Rational& q0(std::size_t m) { return q0_.at(m); }

private:
    struct TermGenerator {
        unsigned j = 2;
        bool plus = true;
    };

    Rational delta_;
    RationalEnumeration q0_;
    std::unordered_set<Rational, RationalHash> registry_;
    std::map<std::size_t, TermGenerator> generators_;
    std::map<std::size_t, MembershipSearch> searches_;
    std::unordered_map<Rational, IntervalSet, RationalHash> g_;
    std::unordered_set<std::string> assigned_sets_;
    std::size_t diagonal_ = 2;
    std::size_t next_m_ = 1;
    std::size_t emitted_ = 0;
};

/// First N bodies of a fresh stream.
[[nodiscard]] std::vector<ConvexBody> truncate_family(FamilyStream& stream, std::size_t n);
[[nodiscard]] std::vector<ConvexBody> truncate_family(const Rational& delta, std::size_t n);

/// Canonical text key of an interval set (used for value-level dedup).
[[nodiscard]] std::string set_key(const IntervalSet& s);

}  // namespace ruled
