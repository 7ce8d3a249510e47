#include "ruled/rational.hpp"

#include <cctype>
#include <cstdio>
#include <vector>

namespace ruled {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw ArithmeticError("rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) {
        throw ArithmeticError("rational with zero denominator");
    }
    v_.canonicalize();
}

namespace {

bool is_integer_text(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!is_integer_text(s)) {
        throw ParseError("not an integer: '" + std::string(s) + "'");
    }
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_integer(text.substr(0, slash)), den);
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

bool Rational::perfect_square(Rational* root) const {
    if (sign() < 0) return false;
    const mpz_class n = v_.get_num();
    const mpz_class d = v_.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) {
        return false;
    }
    if (root != nullptr) {
        *root = Rational(sqrt(n), sqrt(d));
    }
    return true;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow2(long e) {
    mpz_class p(1);
    const unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), k);
    return e < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

Rational Rational::inv_pow4(unsigned long k) {
    mpz_class p(1);
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), 2 * k);
    return Rational(mpz_class(1), p);
}

std::string to_decimal(const Rational& x, int significant) {
    if (significant < 1) significant = 1;
    // Enough bits for the requested digits plus the magnitude of the value.
    const auto bits = static_cast<mp_bitcnt_t>(significant * 4 + 64);
    mpf_class f(x.raw(), bits);
    std::vector<char> buf(static_cast<std::size_t>(significant) + 64);
    for (;;) {
        const int n = gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant, f.get_mpf_t());
        if (n >= 0 && static_cast<std::size_t>(n) < buf.size()) break;
        buf.resize(buf.size() * 2);
    }
    return std::string(buf.data());
}

std::size_t RationalHash::operator()(const Rational& x) const {
    const auto& q = x.raw();
    std::size_t h = mpz_get_ui(q.get_num_mpz_t()) * 0x9e3779b97f4a7c15ULL;
    h ^= mpz_get_ui(q.get_den_mpz_t()) + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
    if (sgn(q) < 0) h = ~h;
    return h;
}

}  // namespace ruled
