#include "cvx/scalar.hpp"

#include <cctype>
#include <utility>

namespace cvx {

namespace mp = boost::multiprecision;

Scalar::Scalar(const Int& num, const Int& den) {
    if (den.is_zero()) {
        throw ZeroDenominator("denominator must be nonzero");
    }
    value_ = Rational(num, den);  // cpp_rational canonicalizes: gcd 1, den > 0
}

Scalar Scalar::operator-() const {
    return Scalar(Rational(-value_));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    value_ += rhs.value_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (rhs.is_zero()) {
        throw ZeroDenominator("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::string Scalar::str() const {
    std::string out = numerator().str();
    if (denominator() != 1) {
        out += '/';
        out += denominator().str();
    }
    return out;
}

Ordering cmp(const Scalar& a, const Scalar& b) {
    if (a < b) return Ordering::Less;
    if (b < a) return Ordering::Greater;
    return Ordering::Equal;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// "[+-]?digits" -> cpp_int; returns false on malformed text.
bool parse_integer(std::string_view s, Scalar::Int& out) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) return false;
    out = Scalar::Int(std::string(s));
    if (negative) out = -out;
    return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    // Trim surrounding whitespace.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) {
        throw ParseError("empty scalar literal");
    }

    const auto fail = [&] {
        throw ParseError("malformed scalar literal: '" + std::string(text) + "'");
    };

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Scalar::Int p, q;
        if (!parse_integer(text.substr(0, slash), p)) fail();
        if (!parse_integer(text.substr(slash + 1), q)) fail();
        if (q.is_zero()) {
            throw ZeroDenominator("zero denominator in '" + std::string(text) + "'");
        }
        return Scalar(p, q);
    }

    // Decimal: optional sign, digits, optional fractional part.
    std::string_view body = text;
    bool negative = false;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view int_part = body;
    std::string_view frac_part;
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
        int_part = body.substr(0, dot);
        frac_part = body.substr(dot + 1);
    }
    if (!all_digits(int_part)) fail();
    if (!frac_part.empty() && !all_digits(frac_part)) fail();

    Scalar::Int num{std::string(int_part)};
    Scalar::Int den{1};
    for (char c : frac_part) {
        num *= 10;
        num += c - '0';
        den *= 10;
    }
    if (negative) num = -num;
    return Scalar(num, den);
}

}  // namespace cvx
