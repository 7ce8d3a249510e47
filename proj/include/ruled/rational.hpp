#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ruled {

/// Raised on division by zero and on other undefined rational operations.
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a textual rational cannot be parsed.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Exact rational number, always kept in lowest terms with a positive
 * denominator, so equal values share one representation.
 */
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpz_class& integer) : v_(integer) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class v);

    /// Parses "num/den" or a bare integer; non-reduced input is canonicalized.
    static Rational parse(std::string_view text);

    /// Canonical "num/den" form; the denominator is always printed.
    [[nodiscard]] std::string str() const;

    [[nodiscard]] mpz_class num() const { return v_.get_num(); }
    [[nodiscard]] mpz_class den() const { return v_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return v_; }

    [[nodiscard]] int sign() const { return sgn(v_); }
    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    [[nodiscard]] Rational inverse() const;

    /// True when the value is the square of a rational; `root` receives the
    /// non-negative root.
    [[nodiscard]] bool perfect_square(Rational* root = nullptr) const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// 2^e for any integer e.
    static Rational pow2(long e);
    /// 4^{-k} for k >= 0.
    static Rational inv_pow4(unsigned long k);

    [[nodiscard]] double to_double() const { return v_.get_d(); }

private:
    mpq_class v_{0};
};

[[nodiscard]] inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
[[nodiscard]] inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Renders a rational as a decimal with `significant` significant digits.
/// Only used at the export boundary.
[[nodiscard]] std::string to_decimal(const Rational& x, int significant = 12);

struct RationalHash {
    std::size_t operator()(const Rational& x) const;
};

}  // namespace ruled
