#include "ruled/cover.hpp"

#include <stdexcept>
#include <string>

namespace ruled {

Interval CoverSpec::open_interval(std::size_t k) const {
    const Rational h = half();
    return {centers.at(k) - h, centers.at(k) + h};
}

bool CoverSpec::covers(std::size_t k, const Rational& x) const {
    const Rational diff = (x - centers[k]).abs();
    return diff < half();
}

CoverSpec make_cover(const Rational& delta, unsigned level) {
    if (delta.sign() <= 0 || delta >= Rational(1)) {
        throw std::invalid_argument("delta must lie in (0,1), got " + delta.str());
    }
    if (level == 0 || level > 40) {
        throw std::invalid_argument("cover level must be in 1..40");
    }
    CoverSpec c;
    c.delta = delta;
    c.level = level;
    c.length = (Rational(1) - delta) * Rational::pow2(-static_cast<long>(level));
    const Rational step = c.half();
    // ceil(2 / length)
    const Rational ratio = Rational(2) / c.length;
    mpz_class count;
    mpz_cdiv_q(count.get_mpz_t(), ratio.num().get_mpz_t(), ratio.den().get_mpz_t());
    const unsigned long n = count.get_ui();
    c.centers.reserve(n + 1);
    for (unsigned long k = 0; k <= n; ++k) {
        c.centers.push_back(step * Rational(static_cast<long>(k)));
    }
    return c;
}

IntervalSet remove_intervals(const CoverSpec& cover, std::span<const std::size_t> picks) {
    if (picks.size() != cover.picks_per_set()) {
        throw std::invalid_argument("expected " + std::to_string(cover.picks_per_set()) + " picks, got " +
                                    std::to_string(picks.size()));
    }
    IntervalSet out = IntervalSet::unit();
    for (const std::size_t k : picks) {
        if (k >= cover.centers.size()) {
            throw std::out_of_range("pick index " + std::to_string(k) + " outside the cover");
        }
        const Interval iv = cover.open_interval(k);
        out = out.minus_open(iv.lo, iv.hi);
    }
    return out;
}

}  // namespace ruled
