#include "nearmiss/rational.hpp"

#include <stdexcept>

namespace nearmiss {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    Integer g = gcd(num_, den_);
    if (g != Integer(1)) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Integer::parse(text));
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw std::invalid_argument("invalid rational literal (signed denominator): '" +
                                    std::string(text) + "'");
    }
    Integer den = Integer::parse(den_text);
    if (den.is_zero()) {
        throw std::invalid_argument("invalid rational literal (zero denominator): '" +
                                    std::string(text) + "'");
    }
    return Rational(Integer::parse(text.substr(0, slash)), std::move(den));
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::reciprocal() const {
    if (num_.is_zero()) throw std::domain_error("reciprocal of zero");
    return Rational(den_, num_);
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    Integer num = num_ * rhs.den_;
    den_ *= rhs.num_;
    num_ = std::move(num);
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ * rhs.den_ <=> rhs.num_ * lhs.den_;
}

} // namespace nearmiss
