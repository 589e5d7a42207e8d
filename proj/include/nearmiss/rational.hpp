#pragma once

#include "nearmiss/integer.hpp"

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace nearmiss {

/// Exact fraction kept in lowest terms with a positive denominator.
/// Zero is 0/1, so structural equality is value equality.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Integer value) : num_(std::move(value)), den_(1) {}
    Rational(int value) : num_(value), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(long value) : num_(value), den_(1) {}
    /// Throws std::domain_error if den is zero.
    Rational(Integer num, Integer den);

    /// Accepts "n" or "n/d" with decimal n, d (d may not be zero).
    static Rational parse(std::string_view text);
    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;

    const Integer& num() const noexcept { return num_; }
    const Integer& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == Integer(1); }
    int sign() const noexcept { return num_.sign(); }

    Rational reciprocal() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    friend std::ostream& operator<<(std::ostream& os, const Rational& value) {
        return os << value.to_string();
    }

private:
    Integer num_;
    Integer den_;

    void normalize();
};

} // namespace nearmiss
