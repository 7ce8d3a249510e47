#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ruled/rational.hpp"

namespace ruled {

/// Raised when an operation would need two independent square roots.
class MixedRadicalError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/**
 * Element a + b*sqrt(d) of a real quadratic extension of Q.
 *
 * The radicand is non-negative.  A value whose radical part vanishes
 * (b = 0, d = 0, or d a rational square) is stored as (a, 0, 0), so a
 * rational value has exactly one representation.
 */
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QuadExt(int a) : a_(a) {}                  // NOLINT(google-explicit-constructor)
    QuadExt(Rational a, Rational b, Rational d);

    [[nodiscard]] const Rational& a() const { return a_; }
    [[nodiscard]] const Rational& b() const { return b_; }
    [[nodiscard]] const Rational& d() const { return d_; }

    [[nodiscard]] bool is_rational() const { return b_.is_zero(); }
    /// Sign of a + b*sqrt(d), decided without approximation.
    [[nodiscard]] int sign() const;
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] QuadExt conjugate() const { return {a_, -b_, d_}; }

    /// "a + b*sqrt(d)" with every part in num/den form.
    [[nodiscard]] std::string str() const;
    static QuadExt parse(std::string_view text);

    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    friend QuadExt operator-(const QuadExt& x) { return {-x.a_, -x.b_, x.d_}; }

    /// Exact comparison via the sign of the difference.
    [[nodiscard]] friend int compare(const QuadExt& x, const QuadExt& y) { return (x - y).sign(); }
    friend bool operator==(const QuadExt& x, const QuadExt& y) { return compare(x, y) == 0; }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return compare(x, y) < 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return compare(x, y) <= 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return compare(x, y) > 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return compare(x, y) >= 0; }

    [[nodiscard]] QuadExt abs() const { return sign() < 0 ? -*this : *this; }
    [[nodiscard]] double to_double() const;

private:
    void normalize();
    /// Rewrites `o`'s radical over this value's radicand, or throws.
    [[nodiscard]] QuadExt aligned(const QuadExt& o) const;

    Rational a_;
    Rational b_;
    Rational d_;
};

[[nodiscard]] std::string to_decimal(const QuadExt& x, int significant = 12);

/// Real roots of A s^2 + B s + C = 0.
struct RootSet {
    enum class Kind { None, One, Two, AllReals };
    Kind kind = Kind::None;
    std::vector<QuadExt> roots;  // sorted ascending
};

class DegenerateEquation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Solves A s^2 + B s + C = 0 over R.  The identically-zero equation returns
/// AllReals only when `allow_identity` is set and throws otherwise.  A double
/// root is reported once.
[[nodiscard]] RootSet solve_quadratic(const Rational& A, const Rational& B, const Rational& C,
                                      bool allow_identity = false);

}  // namespace ruled
