#include "ruled/quad_ext.hpp"

#include <cmath>

namespace ruled {

QuadExt::QuadExt(Rational a, Rational b, Rational d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_.sign() < 0) {
        throw ArithmeticError("negative radicand " + d_.str());
    }
    normalize();
}

void QuadExt::normalize() {
    if (b_.is_zero() || d_.is_zero()) {
        b_ = 0;
        d_ = 0;
        return;
    }
    Rational root;
    if (d_.perfect_square(&root)) {
        a_ += b_ * root;
        b_ = 0;
        d_ = 0;
    }
}

int QuadExt::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: the larger of a^2 and b^2 d wins.
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * d_;
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    return 0;
}

QuadExt QuadExt::aligned(const QuadExt& o) const {
    if (o.is_rational() || is_rational() || o.d_ == d_) return o;
    // Same field when d_o / d is a rational square: b_o sqrt(d_o) = b_o k sqrt(d).
    Rational k;
    if ((o.d_ / d_).perfect_square(&k)) {
        QuadExt r;
        r.a_ = o.a_;
        r.b_ = o.b_ * k;
        r.d_ = d_;
        return r;
    }
    throw MixedRadicalError("radicands " + d_.str() + " and " + o.d_.str() + " span different fields");
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    if (is_rational() && !o.is_rational()) {
        a_ += o.a_;
        b_ = o.b_;
        d_ = o.d_;
        return *this;
    }
    const QuadExt y = aligned(o);
    a_ += y.a_;
    b_ += y.b_;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) { return *this += -o; }

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    if (o.is_rational()) {
        a_ *= o.a_;
        b_ *= o.a_;
        normalize();
        return *this;
    }
    if (is_rational()) {
        const Rational s = a_;
        a_ = s * o.a_;
        b_ = s * o.b_;
        d_ = o.d_;
        normalize();
        return *this;
    }
    const QuadExt y = aligned(o);
    const Rational na = a_ * y.a_ + b_ * y.b_ * d_;
    const Rational nb = a_ * y.b_ + b_ * y.a_;
    a_ = na;
    b_ = nb;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    if (o.is_rational()) {
        if (o.a_.is_zero()) throw ArithmeticError("division by zero");
        a_ /= o.a_;
        b_ /= o.a_;
        normalize();
        return *this;
    }
    // o = a + b sqrt(d) with d not a square, so its norm a^2 - b^2 d is nonzero.
    const Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * o.d_;
    *this *= o.conjugate();
    a_ /= norm;
    b_ /= norm;
    normalize();
    return *this;
}

std::string QuadExt::str() const {
    return a_.str() + " + " + b_.str() + "*sqrt(" + d_.str() + ")";
}

QuadExt QuadExt::parse(std::string_view text) {
    const auto plus = text.find(" + ");
    if (plus == std::string_view::npos) {
        return QuadExt(Rational::parse(text));
    }
    const std::string_view rest = text.substr(plus + 3);
    const auto star = rest.find("*sqrt(");
    if (star == std::string_view::npos || rest.back() != ')') {
        throw ParseError("malformed quadratic-extension value: '" + std::string(text) + "'");
    }
    const std::string_view rad = rest.substr(star + 6, rest.size() - star - 7);
    return {Rational::parse(text.substr(0, plus)), Rational::parse(rest.substr(0, star)),
            Rational::parse(rad)};
}

double QuadExt::to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(d_.to_double());
}

std::string to_decimal(const QuadExt& x, int significant) {
    if (x.is_rational()) return to_decimal(x.a(), significant);
    const auto bits = static_cast<mp_bitcnt_t>(significant * 4 + 64);
    mpf_class d(x.d().raw(), bits);
    mpf_class v(x.a().raw(), bits);
    mpf_class b(x.b().raw(), bits);
    mpf_class r(0, bits);
    mpf_sqrt(r.get_mpf_t(), d.get_mpf_t());
    v += b * r;
    std::vector<char> buf(static_cast<std::size_t>(significant) + 64);
    gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant, v.get_mpf_t());
    return std::string(buf.data());
}

RootSet solve_quadratic(const Rational& A, const Rational& B, const Rational& C, bool allow_identity) {
    RootSet out;
    if (A.is_zero()) {
        if (B.is_zero()) {
            if (!C.is_zero()) return out;
            if (!allow_identity) throw DegenerateEquation("degenerate equation");
            out.kind = RootSet::Kind::AllReals;
            return out;
        }
        out.kind = RootSet::Kind::One;
        out.roots.emplace_back(-C / B);
        return out;
    }
    const Rational disc = B * B - Rational(4) * A * C;
    const Rational center = -B / (Rational(2) * A);
    if (disc.sign() < 0) return out;
    if (disc.is_zero()) {
        out.kind = RootSet::Kind::One;
        out.roots.emplace_back(center);
        return out;
    }
    const Rational half = (Rational(2) * A).inverse();
    QuadExt lo(center, -half.abs(), disc);
    QuadExt hi(center, half.abs(), disc);
    out.kind = RootSet::Kind::Two;
    out.roots = {std::move(lo), std::move(hi)};
    return out;
}

}  // namespace ruled
