#include "nearmiss/quad.hpp"

#include <stdexcept>

namespace nearmiss {

namespace {

std::string_view trim_spaces(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

[[noreturn]] void bad_literal(std::string_view text) {
    throw std::invalid_argument("invalid quadratic-field literal: '" + std::string(text) + "'");
}

} // namespace

bool is_square_free(const Integer& d) {
    if (d < Integer(2)) return false;
    Integer rest = d;
    for (Integer k = 2; k * k <= rest; k += 1) {
        if ((rest % k).is_zero()) {
            rest /= k;
            if ((rest % k).is_zero()) return false;
        }
    }
    return true;
}

QuadElem::QuadElem(Rational p, Rational q, Integer d)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
    if (!is_square_free(d_)) {
        throw std::invalid_argument("discriminant must be a square-free integer >= 2, got " +
                                    d_.to_string());
    }
}

QuadElem QuadElem::parse(std::string_view text) {
    // <rational> (+|-) <rational>*sqrt(<integer>)
    const std::string_view marker = "*sqrt(";
    const auto at = text.find(marker);
    if (at == std::string_view::npos || text.empty() || text.back() != ')') bad_literal(text);
    const std::string_view d_text = text.substr(at + marker.size(),
                                                text.size() - at - marker.size() - 1);
    const std::string_view head = text.substr(0, at);

    const auto op = head.find_last_of("+-");
    if (op == std::string_view::npos || op == 0 || head[op - 1] != ' ') bad_literal(text);
    const std::string_view p_text = trim_spaces(head.substr(0, op));
    const std::string_view q_text = trim_spaces(head.substr(op + 1));
    if (p_text.empty() || q_text.empty() || q_text[0] == '-' || q_text[0] == '+') bad_literal(text);

    Rational q = Rational::parse(q_text);
    if (head[op] == '-') q = -q;
    return QuadElem(Rational::parse(p_text), std::move(q), Integer::parse(d_text));
}

std::string QuadElem::to_string() const {
    const bool minus = q_.sign() < 0;
    return p_.to_string() + (minus ? " - " : " + ") + (minus ? (-q_).to_string() : q_.to_string()) +
           "*sqrt(" + d_.to_string() + ")";
}

void QuadElem::require_same_field(const QuadElem& other) const {
    if (d_ != other.d_) {
        throw std::invalid_argument("discriminant mismatch: sqrt(" + d_.to_string() + ") vs sqrt(" +
                                    other.d_.to_string() + ")");
    }
}

QuadElem QuadElem::operator-() const {
    return QuadElem(Unchecked{}, -p_, -q_, d_);
}

QuadElem& QuadElem::operator+=(const QuadElem& rhs) {
    require_same_field(rhs);
    p_ += rhs.p_;
    q_ += rhs.q_;
    return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& rhs) {
    require_same_field(rhs);
    p_ -= rhs.p_;
    q_ -= rhs.q_;
    return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& rhs) {
    require_same_field(rhs);
    Rational p = p_ * rhs.p_ + Rational(d_) * q_ * rhs.q_;
    Rational q = p_ * rhs.q_ + rhs.p_ * q_;
    p_ = std::move(p);
    q_ = std::move(q);
    return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& rhs) {
    require_same_field(rhs);
    return *this *= inverse(rhs);
}

QuadElem operator*(const Rational& lhs, const QuadElem& rhs) {
    return QuadElem(QuadElem::Unchecked{}, lhs * rhs.p_, lhs * rhs.q_, rhs.d_);
}

QuadElem operator+(const QuadElem& lhs, const Rational& rhs) {
    return QuadElem(QuadElem::Unchecked{}, lhs.p_ + rhs, lhs.q_, lhs.d_);
}

QuadElem conj(const QuadElem& u) {
    return QuadElem(QuadElem::Unchecked{}, u.p_, -u.q_, u.d_);
}

Rational norm(const QuadElem& u) {
    const Rational& p = u.rational_part();
    const Rational& q = u.surd_part();
    return p * p - Rational(u.discriminant()) * q * q;
}

QuadElem inverse(const QuadElem& u) {
    if (u.is_zero()) throw std::domain_error("inverse of zero in Q(sqrt(D))");
    // norm(u) != 0 for u != 0 because sqrt(D) is irrational.
    return norm(u).reciprocal() * conj(u);
}

QuadElem pow(const QuadElem& u, std::int64_t exponent) {
    if (exponent < 0 && u.is_zero()) {
        throw std::domain_error("zero raised to a negative power");
    }
    QuadElem base = exponent < 0 ? inverse(u) : u;
    // Avoid negating INT64_MIN.
    std::uint64_t e = exponent < 0 ? 0ULL - static_cast<std::uint64_t>(exponent)
                                   : static_cast<std::uint64_t>(exponent);
    QuadElem result = QuadElem::one(u.discriminant());
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return result;
}

} // namespace nearmiss
