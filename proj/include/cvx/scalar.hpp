#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "cvx/errors.hpp"

namespace cvx {

enum class Ordering { Less, Equal, Greater };

/// Exact rational scalar. Every quantity the library reasons about
/// (coordinates, slopes, sequence values) is one of these; no floating
/// point is involved in any decision.
///
/// Canonical form is maintained after every operation: the denominator is
/// positive and coprime to the numerator.
class Scalar {
public:
    using Int = boost::multiprecision::cpp_int;

    Scalar() : value_(0) {}
    Scalar(long long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Scalar(const Int& num, const Int& den);

    const Int numerator() const { return boost::multiprecision::numerator(value_); }
    const Int denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    int sign() const { return value_.sign(); }

    /// Nearest double; for rendering only, never for decisions.
    double approx() const { return value_.convert_to<double>(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.value_ != b.value_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return a.value_ >= b.value_; }

    /// Canonical rendering: "p/q", or just "p" when the value is an integer.
    std::string str() const;

private:
    using Rational = boost::multiprecision::cpp_rational;
    explicit Scalar(Rational v) : value_(std::move(v)) {}

    Rational value_;
};

/// Exact three-way comparison (cross-multiplied under the hood).
Ordering cmp(const Scalar& a, const Scalar& b);

/// Parses a decimal literal ("3", "-2.5") or a fraction "p/q" into an exact
/// Scalar. Decimals expand exactly ("0.1" becomes 1/10). Throws ParseError
/// on malformed text and ZeroDenominator on "p/0".
Scalar parse_scalar(std::string_view text);

}  // namespace cvx
