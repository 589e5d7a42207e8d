#include "nearmiss/integer.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace nearmiss {

namespace {

using Limb = Integer::limb_type;
using Mag = std::vector<Limb>;

constexpr std::uint64_t kBase = std::uint64_t{1} << 32;
constexpr Limb kDecimalChunk = 1'000'000'000U;
constexpr int kDecimalChunkDigits = 9;

void trim_mag(Mag& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

int cmp_mag(const Mag& a, const Mag& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

Mag add_mag(const Mag& a, const Mag& b) {
    const Mag& lo = a.size() < b.size() ? a : b;
    const Mag& hi = a.size() < b.size() ? b : a;
    Mag out(hi.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t t = std::uint64_t{hi[i]} + (i < lo.size() ? lo[i] : 0) + carry;
        out[i] = static_cast<Limb>(t);
        carry = t >> 32;
    }
    out[hi.size()] = static_cast<Limb>(carry);
    trim_mag(out);
    return out;
}

// Requires |a| >= |b|.
Mag sub_mag(const Mag& a, const Mag& b) {
    Mag out(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t t = std::int64_t{a[i]} - (i < b.size() ? b[i] : 0) - borrow;
        borrow = t < 0 ? 1 : 0;
        out[i] = static_cast<Limb>(t + (borrow ? static_cast<std::int64_t>(kBase) : 0));
    }
    trim_mag(out);
    return out;
}

Mag mul_mag(const Mag& a, const Mag& b) {
    if (a.empty() || b.empty()) return {};
    Mag out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        const std::uint64_t ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t t = ai * b[j] + out[i + j] + carry;
            out[i + j] = static_cast<Limb>(t);
            carry = t >> 32;
        }
        out[i + b.size()] = static_cast<Limb>(carry);
    }
    trim_mag(out);
    return out;
}

// In-place division by a single limb; returns the remainder.
Limb divmod_small(Mag& a, Limb d) {
    std::uint64_t rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | a[i];
        a[i] = static_cast<Limb>(cur / d);
        rem = cur % d;
    }
    trim_mag(a);
    return static_cast<Limb>(rem);
}

// Knuth, TAOCP vol. 2, 4.3.1 Algorithm D. Requires b non-empty.
void divmod_mag(const Mag& a, const Mag& b, Mag& quot, Mag& rem) {
    if (cmp_mag(a, b) < 0) {
        quot.clear();
        rem = a;
        return;
    }
    if (b.size() == 1) {
        quot = a;
        Limb r = divmod_small(quot, b[0]);
        rem.clear();
        if (r != 0) rem.push_back(r);
        return;
    }

    const std::size_t n = b.size();
    const std::size_t m = a.size();
    const int shift = std::countl_zero(b.back());

    Mag vn(n);
    Mag un(m + 1);
    for (std::size_t i = n - 1; i > 0; --i) {
        vn[i] = shift ? (b[i] << shift) | (b[i - 1] >> (32 - shift)) : b[i];
    }
    vn[0] = b[0] << shift;
    un[m] = shift ? a[m - 1] >> (32 - shift) : 0;
    for (std::size_t i = m - 1; i > 0; --i) {
        un[i] = shift ? (a[i] << shift) | (a[i - 1] >> (32 - shift)) : a[i];
    }
    un[0] = a[0] << shift;

    quot.assign(m - n + 1, 0);
    for (std::size_t jj = m - n + 1; jj-- > 0;) {
        const std::size_t j = jj;
        const std::uint64_t num = (std::uint64_t{un[j + n]} << 32) | un[j + n - 1];
        std::uint64_t qhat = num / vn[n - 1];
        std::uint64_t rhat = num % vn[n - 1];
        while (qhat >= kBase || qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= kBase) break;
        }

        std::int64_t k = 0;
        std::int64_t t = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t p = qhat * vn[i];
            t = static_cast<std::int64_t>(std::uint64_t{un[i + j]} - static_cast<std::uint64_t>(k) -
                                          (p & 0xFFFFFFFFULL));
            un[i + j] = static_cast<Limb>(t);
            k = static_cast<std::int64_t>(p >> 32) - (t >> 32);
        }
        t = static_cast<std::int64_t>(un[j + n]) - k;
        un[j + n] = static_cast<Limb>(t);

        if (t < 0) {
            --qhat;
            std::uint64_t c = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint64_t s = std::uint64_t{un[i + j]} + vn[i] + c;
                un[i + j] = static_cast<Limb>(s);
                c = s >> 32;
            }
            un[j + n] = static_cast<Limb>(un[j + n] + c);
        }
        quot[j] = static_cast<Limb>(qhat);
    }
    trim_mag(quot);

    rem.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        rem[i] = shift ? (un[i] >> shift) | (un[i + 1] << (32 - shift)) : un[i];
    }
    trim_mag(rem);
}

} // namespace

Integer::Integer(long long value) {
    negative_ = value < 0;
    // Negate in unsigned space so LLONG_MIN is handled.
    unsigned long long m = negative_ ? 0ULL - static_cast<unsigned long long>(value)
                                     : static_cast<unsigned long long>(value);
    while (m != 0) {
        mag_.push_back(static_cast<Limb>(m));
        m >>= 32;
    }
}

Integer::Integer(unsigned long long value) {
    while (value != 0) {
        mag_.push_back(static_cast<Limb>(value));
        value >>= 32;
    }
}

Integer Integer::from_uint128(uint128_t value) {
    Integer out;
    while (value != 0) {
        out.mag_.push_back(static_cast<Limb>(value));
        value >>= 32;
    }
    return out;
}

Integer Integer::parse(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) {
        throw std::invalid_argument("invalid integer literal: '" + std::string(text) + "'");
    }
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw std::invalid_argument("invalid integer literal: '" + std::string(text) + "'");
        }
    }

    Integer out;
    const std::size_t digits = text.size() - pos;
    std::size_t first = digits % kDecimalChunkDigits;
    if (first == 0) first = kDecimalChunkDigits;
    for (std::size_t i = pos; i < text.size();) {
        const std::size_t len = (i == pos) ? first : kDecimalChunkDigits;
        Limb chunk = 0;
        Limb scale = 1;
        for (std::size_t k = 0; k < len; ++k, ++i) {
            chunk = chunk * 10 + static_cast<Limb>(text[i] - '0');
            scale *= 10;
        }
        // out = out * scale + chunk
        std::uint64_t carry = chunk;
        for (Limb& limb : out.mag_) {
            std::uint64_t t = std::uint64_t{limb} * scale + carry;
            limb = static_cast<Limb>(t);
            carry = t >> 32;
        }
        if (carry != 0) out.mag_.push_back(static_cast<Limb>(carry));
        out.trim();
    }
    out.negative_ = negative && !out.mag_.empty();
    return out;
}

std::string Integer::to_string() const {
    if (mag_.empty()) return "0";
    Mag work = mag_;
    std::vector<Limb> chunks;
    while (!work.empty()) chunks.push_back(divmod_small(work, kDecimalChunk));

    std::string out = negative_ ? "-" : "";
    out += std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out.append(kDecimalChunkDigits - part.size(), '0');
        out += part;
    }
    return out;
}

std::size_t Integer::bit_length() const noexcept {
    if (mag_.empty()) return 0;
    return 32 * mag_.size() - static_cast<std::size_t>(std::countl_zero(mag_.back()));
}

std::optional<std::uint64_t> Integer::to_uint64() const noexcept {
    if (negative_ || mag_.size() > 2) return std::nullopt;
    std::uint64_t v = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    return v;
}

std::optional<std::int64_t> Integer::to_int64() const noexcept {
    if (mag_.size() > 2) return std::nullopt;
    std::uint64_t m = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
    if (!negative_) {
        if (m > static_cast<std::uint64_t>(INT64_MAX)) return std::nullopt;
        return static_cast<std::int64_t>(m);
    }
    if (m > static_cast<std::uint64_t>(INT64_MAX) + 1) return std::nullopt;
    return static_cast<std::int64_t>(0ULL - m);
}

std::optional<uint128_t> Integer::to_uint128() const noexcept {
    if (negative_ || mag_.size() > 4) return std::nullopt;
    uint128_t v = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    return v;
}

Integer Integer::abs() const {
    Integer out = *this;
    out.negative_ = false;
    return out;
}

Integer Integer::operator-() const {
    Integer out = *this;
    if (!out.mag_.empty()) out.negative_ = !out.negative_;
    return out;
}

Integer& Integer::operator+=(const Integer& rhs) {
    if (negative_ == rhs.negative_) {
        mag_ = add_mag(mag_, rhs.mag_);
    } else if (cmp_mag(mag_, rhs.mag_) >= 0) {
        mag_ = sub_mag(mag_, rhs.mag_);
    } else {
        mag_ = sub_mag(rhs.mag_, mag_);
        negative_ = rhs.negative_;
    }
    trim();
    return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
    return *this += -rhs;
}

Integer operator*(const Integer& lhs, const Integer& rhs) {
    Integer out;
    out.mag_ = mul_mag(lhs.mag_, rhs.mag_);
    out.negative_ = lhs.negative_ != rhs.negative_;
    out.trim();
    return out;
}

Integer& Integer::operator*=(const Integer& rhs) {
    return *this = *this * rhs;
}

void divmod(const Integer& num, const Integer& den, Integer& quot, Integer& rem) {
    if (den.is_zero()) throw std::domain_error("integer division by zero");
    Mag q;
    Mag r;
    divmod_mag(num.mag_, den.mag_, q, r);
    const bool qneg = num.negative_ != den.negative_;
    const bool rneg = num.negative_;
    quot.mag_ = std::move(q);
    quot.negative_ = qneg;
    quot.trim();
    rem.mag_ = std::move(r);
    rem.negative_ = rneg;
    rem.trim();
}

Integer operator/(const Integer& lhs, const Integer& rhs) {
    Integer q;
    Integer r;
    divmod(lhs, rhs, q, r);
    return q;
}

Integer operator%(const Integer& lhs, const Integer& rhs) {
    Integer q;
    Integer r;
    divmod(lhs, rhs, q, r);
    return r;
}

Integer& Integer::operator/=(const Integer& rhs) {
    return *this = *this / rhs;
}

Integer& Integer::operator%=(const Integer& rhs) {
    return *this = *this % rhs;
}

Integer& Integer::operator<<=(std::size_t bits) {
    if (mag_.empty() || bits == 0) return *this;
    const std::size_t limbs = bits / 32;
    const unsigned shift = static_cast<unsigned>(bits % 32);
    Mag out(mag_.size() + limbs + 1, 0);
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        out[i + limbs] |= mag_[i] << shift;
        if (shift) out[i + limbs + 1] = mag_[i] >> (32 - shift);
    }
    mag_ = std::move(out);
    trim();
    return *this;
}

Integer& Integer::operator>>=(std::size_t bits) {
    const std::size_t limbs = bits / 32;
    const unsigned shift = static_cast<unsigned>(bits % 32);
    if (limbs >= mag_.size()) {
        mag_.clear();
        negative_ = false;
        return *this;
    }
    Mag out(mag_.size() - limbs, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = mag_[i + limbs] >> shift;
        if (shift && i + limbs + 1 < mag_.size()) out[i] |= mag_[i + limbs + 1] << (32 - shift);
    }
    mag_ = std::move(out);
    trim();
    return *this;
}

std::strong_ordering operator<=>(const Integer& lhs, const Integer& rhs) {
    if (lhs.negative_ != rhs.negative_) {
        return lhs.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    int c = cmp_mag(lhs.mag_, rhs.mag_);
    if (lhs.negative_) c = -c;
    return c <=> 0;
}

void Integer::trim() noexcept {
    trim_mag(mag_);
    if (mag_.empty()) negative_ = false;
}

Integer gcd(Integer a, Integer b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        Integer r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Integer pow(Integer base, std::uint64_t exponent) {
    Integer result = 1;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1;
        if (exponent != 0) base *= base;
    }
    return result;
}

Integer isqrt(const Integer& s) {
    if (s.is_negative()) throw std::domain_error("isqrt of a negative integer");
    if (s.is_zero()) return 0;

    // 2^ceil(bits/2) >= sqrt(s), so Newton's iteration descends from above.
    Integer r = Integer(1) << ((s.bit_length() + 1) / 2);
    for (;;) {
        Integer next = (r + s / r) >> 1;
        if (next >= r) break;
        r = std::move(next);
    }
    while (r * r > s) r -= 1;
    while ((r + 1) * (r + 1) <= s) r += 1;
    return r;
}

} // namespace nearmiss
