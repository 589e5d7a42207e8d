#pragma once

// Arbitrary-precision signed integers in sign-magnitude form.
//
// The magnitude is a little-endian vector of 32-bit limbs with no leading
// zero limbs; zero is the empty vector with a non-negative sign, so every
// value has exactly one representation. Division truncates toward zero,
// matching the built-in integer types.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace nearmiss {

__extension__ typedef unsigned __int128 uint128_t;

class Integer {
public:
    using limb_type = std::uint32_t;

    Integer() = default;
    Integer(long long value);
    Integer(long value) : Integer(static_cast<long long>(value)) {}
    Integer(int value) : Integer(static_cast<long long>(value)) {}
    Integer(unsigned long long value);
    Integer(unsigned long value) : Integer(static_cast<unsigned long long>(value)) {}
    Integer(unsigned value) : Integer(static_cast<unsigned long long>(value)) {}

    static Integer from_uint128(uint128_t value);

    /// Parses an optionally signed run of decimal digits. Throws
    /// std::invalid_argument on anything else (including whitespace).
    static Integer parse(std::string_view text);

    std::string to_string() const;

    bool is_zero() const noexcept { return mag_.empty(); }
    bool is_negative() const noexcept { return negative_; }
    bool is_odd() const noexcept { return !mag_.empty() && (mag_[0] & 1U); }
    int sign() const noexcept { return negative_ ? -1 : (mag_.empty() ? 0 : 1); }

    /// Number of significant bits in |*this|; zero for zero.
    std::size_t bit_length() const noexcept;
    std::size_t limb_count() const noexcept { return mag_.size(); }

    std::optional<std::int64_t> to_int64() const noexcept;
    std::optional<std::uint64_t> to_uint64() const noexcept;
    std::optional<uint128_t> to_uint128() const noexcept;

    Integer abs() const;

    Integer operator-() const;
    Integer& operator+=(const Integer& rhs);
    Integer& operator-=(const Integer& rhs);
    Integer& operator*=(const Integer& rhs);
    Integer& operator/=(const Integer& rhs);
    Integer& operator%=(const Integer& rhs);

    /// Shifts act on the magnitude; the sign is kept.
    Integer& operator<<=(std::size_t bits);
    Integer& operator>>=(std::size_t bits);

    friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
    friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
    friend Integer operator*(const Integer& lhs, const Integer& rhs);
    friend Integer operator/(const Integer& lhs, const Integer& rhs);
    friend Integer operator%(const Integer& lhs, const Integer& rhs);
    friend Integer operator<<(Integer lhs, std::size_t bits) { return lhs <<= bits; }
    friend Integer operator>>(Integer lhs, std::size_t bits) { return lhs >>= bits; }

    friend bool operator==(const Integer&, const Integer&) = default;
    friend std::strong_ordering operator<=>(const Integer& lhs, const Integer& rhs);

    /// Quotient truncated toward zero; remainder carries the dividend's sign.
    /// Throws std::domain_error on a zero divisor.
    friend void divmod(const Integer& num, const Integer& den, Integer& quot, Integer& rem);

    friend std::ostream& operator<<(std::ostream& os, const Integer& value) {
        return os << value.to_string();
    }

private:
    std::vector<limb_type> mag_;
    bool negative_ = false;

    void trim() noexcept;
};

/// Non-negative greatest common divisor; gcd(0, 0) = 0.
Integer gcd(Integer a, Integer b);

Integer pow(Integer base, std::uint64_t exponent);

/// The unique r >= 0 with r*r <= s < (r+1)*(r+1). Throws std::domain_error
/// for negative s.
Integer isqrt(const Integer& s);

} // namespace nearmiss
