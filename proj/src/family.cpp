#include "ruled/family.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ruled {

namespace {

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

long gcd_long(long a, long b) { return std::gcd(a, b); }

mpz_class floor_of(const Rational& x) {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Enumeration of Q ∩ [0,1]

void RationalEnumeration::extend_to(std::size_t n) {
    if (table_.empty()) {
        table_.emplace_back(0);
        table_.emplace_back(1);
    }
    while (table_.size() < n) {
        const long d = next_den_++;
        for (long k = 1; k < d; ++k) {
            if (gcd_long(k, d) == 1) table_.emplace_back(k, d);
        }
    }
}

const Rational& RationalEnumeration::at(std::size_t n) {
    if (n == 0) throw std::invalid_argument("rational enumeration is 1-based");
    extend_to(n);
    return table_[n - 1];
}

std::size_t RationalEnumeration::index_of(const Rational& x) {
    if (x.sign() < 0 || Rational(1) < x) throw std::invalid_argument("index_of: " + x.str() + " outside [0,1]");
    if (x.is_zero()) return 1;
    if (x == Rational(1)) return 2;
    const long d = x.den().get_si();
    const long p = x.num().get_si();
    std::size_t idx = 2;
    for (long dd = 2; dd < d; ++dd) {
        for (long k = 1; k < dd; ++k) idx += gcd_long(k, dd) == 1 ? 1 : 0;
    }
    for (long k = 1; k <= p; ++k) idx += gcd_long(k, d) == 1 ? 1 : 0;
    return idx;
}

Rational enumerate_q0(std::size_t n) {
    RationalEnumeration e;
    return e.at(n);
}

Rational eps_of(std::size_t n) {
    if (n == 0) throw std::invalid_argument("eps index is 1-based");
    return Rational::inv_pow4(n + 2);
}

ConvexBody build_body(const Rational& q, std::size_t m, std::size_t f_index, IntervalSet support) {
    return {q, m, f_index, eps_of(f_index), std::move(support)};
}

// ---------------------------------------------------------------------------
// Walk over members of M_m

MembershipSearch::MembershipSearch(Rational delta, Rational include, std::vector<Rational> exclude)
    : delta_(std::move(delta)), include_(std::move(include)), exclude_(std::move(exclude)) {
    std::sort(exclude_.begin(), exclude_.end());
    exclude_.erase(std::unique(exclude_.begin(), exclude_.end()), exclude_.end());
    if (std::binary_search(exclude_.begin(), exclude_.end(), include_)) {
        throw std::invalid_argument("membership search: included point is also excluded");
    }
}

void MembershipSearch::enter_level(unsigned level) {
    level_ = level;
    cover_ = make_cover(delta_, level);
    picks_.assign(cover_.picks_per_set(), 0);
    front_.assign(cover_.picks_per_set(), 0);
    positioned_ = false;
}

bool MembershipSearch::allowed(std::size_t k) const { return !cover_.covers(k, include_); }

std::size_t MembershipSearch::first_at_or_after(std::size_t from, const Rational& bound) const {
    auto it = std::lower_bound(exclude_.begin() + static_cast<std::ptrdiff_t>(from), exclude_.end(), bound);
    return static_cast<std::size_t>(it - exclude_.begin());
}

std::size_t MembershipSearch::greedy_need(std::size_t from, std::size_t min_center) const {
    const Rational h = cover_.half();
    const std::size_t r = cover_.centers.size();
    const std::size_t budget = cover_.picks_per_set();
    std::size_t count = 0;
    std::size_t j = from;
    while (j < exclude_.size()) {
        const Rational t = exclude_[j] / h;
        // Centres covering x: integers k with |k - t| < 1, largest first.
        const mpz_class fl = floor_of(t);
        std::vector<mpz_class> cands;
        if (t.is_integer()) {
            cands = {fl};
        } else {
            cands = {fl + 1, fl};
        }
        std::size_t chosen = kUnreachable;
        for (const auto& c : cands) {
            if (c < 0) continue;
            const auto k = static_cast<std::size_t>(c.get_ui());
            if (k >= min_center && k < r && allowed(k)) {
                chosen = k;
                break;
            }
        }
        if (chosen == kUnreachable) return kUnreachable;
        if (++count > budget) return kUnreachable;
        j = first_at_or_after(j, cover_.centers[chosen] + h);
    }
    return count;
}

std::optional<std::size_t> MembershipSearch::feasible(std::size_t pos, std::size_t v) const {
    if (!allowed(v)) return std::nullopt;
    const Rational h = cover_.half();
    const Rational& c = cover_.centers[v];
    const std::size_t prev = pos == 0 ? 0 : front_[pos - 1];
    // Later centres are >= c, so a point at or left of c - h is lost for good.
    if (prev < exclude_.size() && exclude_[prev] <= c - h) return std::nullopt;
    const std::size_t nf = first_at_or_after(prev, c + h);
    const std::size_t need = greedy_need(nf, v);
    if (need == kUnreachable || need > picks_.size() - pos - 1) return std::nullopt;
    return nf;
}

bool MembershipSearch::complete_from(std::size_t pos) {
    const std::size_t r = cover_.centers.size();
    for (std::size_t p = pos; p < picks_.size(); ++p) {
        std::size_t v = p == 0 ? 0 : picks_[p - 1];
        std::optional<std::size_t> nf;
        for (; v < r; ++v) {
            if ((nf = feasible(p, v))) break;
        }
        if (!nf) return false;
        picks_[p] = v;
        front_[p] = *nf;
    }
    return true;
}

bool MembershipSearch::advance() {
    const std::size_t r = cover_.centers.size();
    for (std::size_t pos = picks_.size(); pos-- > 0;) {
        for (std::size_t v = picks_[pos] + 1; v < r; ++v) {
            if (auto nf = feasible(pos, v)) {
                picks_[pos] = v;
                front_[pos] = *nf;
                if (complete_from(pos + 1)) return true;
            }
        }
    }
    return false;
}

IntervalSet MembershipSearch::next() {
    for (;;) {
        bool ok = false;
        if (!positioned_) {
            if (level_ == 0) enter_level(1);
            ok = greedy_need(0, 0) <= picks_.size() && complete_from(0);
        } else {
            ok = advance();
        }
        if (ok) {
            positioned_ = true;
            return remove_intervals(cover_, picks_);
        }
        enter_level(level_ + 1);
    }
}

// ---------------------------------------------------------------------------
// Family stream

std::string set_key(const IntervalSet& s) {
    std::string key;
    for (const auto& iv : s.intervals()) {
        key += iv.lo.str();
        key += ',';
        key += iv.hi.str();
        key += ';';
    }
    return key;
}

FamilyStream::FamilyStream(Rational delta) : delta_(std::move(delta)) {
    if (delta_.sign() <= 0 || delta_ >= Rational(1)) {
        throw std::invalid_argument("delta must lie in (0,1), got " + delta_.str());
    }
}

Rational FamilyStream::next_qm_term(std::size_t m) {
    const Rational center = q0_.at(m);
    auto& gen = generators_[m];
    for (;;) {
        const Rational offset = Rational::pow2(-static_cast<long>(gen.j));
        Rational cand = gen.plus ? center + offset : center - offset;
        if (gen.plus) {
            gen.plus = false;
        } else {
            gen.plus = true;
            ++gen.j;
        }
        if (cand.sign() < 0 || Rational(1) < cand || cand == center || registry_.contains(cand)) continue;
        registry_.insert(cand);
        return cand;
    }
}

IntervalSet FamilyStream::assign_g(const Rational& q, std::size_t m) {
    if (auto it = g_.find(q); it != g_.end()) return it->second;
    auto it = searches_.find(m);
    if (it == searches_.end()) {
        std::vector<Rational> exclude;
        exclude.reserve(m - 1);
        for (std::size_t k = 1; k < m; ++k) exclude.push_back(q0_.at(k));
        it = searches_.emplace(m, MembershipSearch(delta_, q0_.at(m), std::move(exclude))).first;
    }
    for (;;) {
        IntervalSet k = it->second.next();
        if (!assigned_sets_.insert(set_key(k)).second) continue;
        if (!k.contains(q0_.at(m))) throw std::logic_error("assigned set misses q_m");
        for (std::size_t j = 1; j < m; ++j) {
            if (k.contains(q0_.at(j))) throw std::logic_error("assigned set contains an earlier q_k");
        }
        g_.emplace(q, k);
        return k;
    }
}

Emission FamilyStream::next() {
    const std::size_t m = next_m_;
    if (++next_m_ > diagonal_ - 1) {
        ++diagonal_;
        next_m_ = 1;
    }
    Emission e;
    e.q = next_qm_term(m);
    e.m = m;
    e.support = assign_g(e.q, m);
    e.f = ++emitted_;
    return e;
}

ConvexBody FamilyStream::next_body() {
    Emission e = next();
    return build_body(e.q, e.m, e.f, std::move(e.support));
}

std::vector<ConvexBody> truncate_family(FamilyStream& stream, std::size_t n) {
    std::vector<ConvexBody> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(stream.next_body());
    return out;
}

std::vector<ConvexBody> truncate_family(const Rational& delta, std::size_t n) {
    FamilyStream stream(delta);
    return truncate_family(stream, n);
}

}  // namespace ruled
