#pragma once

// Seeded random generators for the property tests.

#include "nearmiss/integer.hpp"
#include "nearmiss/quad.hpp"
#include "nearmiss/rational.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace nearmiss::testing {

inline constexpr int kPropertyCases = 10'000;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t bits(int n) {
        return n >= 64 ? rng_() : rng_() & ((std::uint64_t{1} << n) - 1);
    }

    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    bool coin() { return rng_() & 1U; }

    /// Up to max_digits decimal digits, mixing tiny, word-boundary and long values.
    Integer integer(int max_digits = 60) {
        switch (range(0, 5)) {
        case 0:
            return Integer(range(-20, 20));
        case 1: {
            // Near powers of two, where limb carries and borrows happen.
            Integer v = Integer(1) << static_cast<std::size_t>(range(0, 200));
            v += Integer(range(-3, 3));
            return coin() ? -v : v;
        }
        default: {
            const auto digits = range(1, max_digits);
            std::string s = coin() ? "-" : "";
            s += static_cast<char>('1' + range(0, 8));
            for (std::int64_t i = 1; i < digits; ++i) s += static_cast<char>('0' + range(0, 9));
            return Integer::parse(s);
        }
        }
    }

    Integer nonzero_integer(int max_digits = 60) {
        for (;;) {
            Integer v = integer(max_digits);
            if (!v.is_zero()) return v;
        }
    }

    Rational rational(int max_digits = 12) {
        return Rational(integer(max_digits), nonzero_integer(max_digits));
    }

    QuadElem quad(const Integer& d, int max_digits = 8) {
        return QuadElem(rational(max_digits), rational(max_digits), d);
    }

    QuadElem nonzero_quad(const Integer& d, int max_digits = 8) {
        for (;;) {
            QuadElem v = quad(d, max_digits);
            if (!v.is_zero()) return v;
        }
    }

private:
    std::mt19937_64 rng_;
};

} // namespace nearmiss::testing
