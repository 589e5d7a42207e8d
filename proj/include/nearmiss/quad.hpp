#pragma once

// Elements p + q*sqrt(D) of the real quadratic field Q(sqrt(D)).
//
// D is carried by every element and must be a square-free integer >= 2, so
// sqrt(D) is irrational and (p, q, D) is a unique representation. Binary
// operations on elements with different D throw std::invalid_argument.

#include "nearmiss/rational.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace nearmiss {

class QuadElem {
public:
    /// Throws std::invalid_argument unless d is square-free and >= 2.
    QuadElem(Rational p, Rational q, Integer d);
    /// The rational p embedded in Q(sqrt(d)).
    QuadElem(Rational p, Integer d) : QuadElem(std::move(p), Rational(0), std::move(d)) {}

    static QuadElem zero(Integer d) { return QuadElem(Rational(0), std::move(d)); }
    static QuadElem one(Integer d) { return QuadElem(Rational(1), std::move(d)); }

    /// Parses the to_string() form, e.g. "11 + 265/577*sqrt(577)" or "-1/2 - 3*sqrt(5)".
    static QuadElem parse(std::string_view text);
    std::string to_string() const;

    const Rational& rational_part() const noexcept { return p_; }
    const Rational& surd_part() const noexcept { return q_; }
    const Integer& discriminant() const noexcept { return d_; }

    bool is_zero() const noexcept { return p_.is_zero() && q_.is_zero(); }
    bool is_rational() const noexcept { return q_.is_zero(); }

    QuadElem operator-() const;
    QuadElem& operator+=(const QuadElem& rhs);
    QuadElem& operator-=(const QuadElem& rhs);
    QuadElem& operator*=(const QuadElem& rhs);
    /// Throws std::domain_error on a zero divisor.
    QuadElem& operator/=(const QuadElem& rhs);

    friend QuadElem operator+(QuadElem lhs, const QuadElem& rhs) { return lhs += rhs; }
    friend QuadElem operator-(QuadElem lhs, const QuadElem& rhs) { return lhs -= rhs; }
    friend QuadElem operator*(QuadElem lhs, const QuadElem& rhs) { return lhs *= rhs; }
    friend QuadElem operator/(QuadElem lhs, const QuadElem& rhs) { return lhs /= rhs; }

    friend QuadElem operator*(const Rational& lhs, const QuadElem& rhs);
    friend QuadElem operator*(const QuadElem& lhs, const Rational& rhs) { return rhs * lhs; }
    friend QuadElem operator+(const QuadElem& lhs, const Rational& rhs);

    friend bool operator==(const QuadElem&, const QuadElem&) = default;

    friend std::ostream& operator<<(std::ostream& os, const QuadElem& value) {
        return os << value.to_string();
    }

private:
    struct Unchecked {};
    QuadElem(Unchecked, Rational p, Rational q, Integer d)
        : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {}

    Rational p_;
    Rational q_;
    Integer d_;

    void require_same_field(const QuadElem& other) const;

    friend QuadElem conj(const QuadElem& u);
};

/// p - q*sqrt(D).
QuadElem conj(const QuadElem& u);

/// p^2 - D*q^2, the rational part of u * conj(u).
Rational norm(const QuadElem& u);

/// conj(u) / norm(u). Throws std::domain_error for zero.
QuadElem inverse(const QuadElem& u);

/// Exact power by repeated squaring; negative exponents go through inverse().
/// Throws std::domain_error for a zero base with a negative exponent.
QuadElem pow(const QuadElem& u, std::int64_t exponent);

bool is_square_free(const Integer& d);

} // namespace nearmiss
