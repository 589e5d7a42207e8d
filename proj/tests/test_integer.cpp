#include "nearmiss/integer.hpp"

#include "generators.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

#include <limits>
#include <stdexcept>

using namespace nearmiss;
using nearmiss::testing::Gen;
using nearmiss::testing::kPropertyCases;
using boost::multiprecision::cpp_int;

namespace {

cpp_int oracle(const Integer& v) {
    return cpp_int(v.to_string());
}

} // namespace

TEST(Integer, ParseAndPrint) {
    EXPECT_EQ(Integer::parse("0").to_string(), "0");
    EXPECT_EQ(Integer::parse("-0").to_string(), "0");
    EXPECT_EQ(Integer::parse("+42").to_string(), "42");
    EXPECT_EQ(Integer::parse("000123").to_string(), "123");
    EXPECT_EQ(Integer::parse("8791182100413").to_string(), "8791182100413");
    EXPECT_EQ(Integer::parse("-1000000000000000000000").to_string(), "-1000000000000000000000");
    EXPECT_EQ(Integer(std::numeric_limits<long long>::min()).to_string(), "-9223372036854775808");
    EXPECT_EQ(Integer(std::numeric_limits<unsigned long long>::max()).to_string(),
              "18446744073709551615");
}

TEST(Integer, ParseRejectsGarbage) {
    for (const char* bad : {"", "-", "+", " 1", "1 ", "1a", "0x10", "1.5", "--1"}) {
        EXPECT_THROW(Integer::parse(bad), std::invalid_argument) << bad;
    }
}

TEST(Integer, ZeroIsUnique) {
    Integer a = 5;
    Integer b = -5;
    EXPECT_EQ(a + b, Integer(0));
    EXPECT_FALSE((a + b).is_negative());
    EXPECT_EQ(-Integer(0), Integer(0));
    EXPECT_EQ(Integer(-7) * Integer(0), Integer(0));
    EXPECT_FALSE((Integer(-7) * Integer(0)).is_negative());
    EXPECT_EQ(Integer(-3) % Integer(3), Integer(0));
    EXPECT_FALSE((Integer(-3) % Integer(3)).is_negative());
}

TEST(Integer, TruncatingDivision) {
    EXPECT_EQ(Integer(7) / Integer(2), Integer(3));
    EXPECT_EQ(Integer(-7) / Integer(2), Integer(-3));
    EXPECT_EQ(Integer(-7) % Integer(2), Integer(-1));
    EXPECT_EQ(Integer(7) % Integer(-2), Integer(1));
    EXPECT_THROW(Integer(1) / Integer(0), std::domain_error);
}

TEST(Integer, Conversions) {
    EXPECT_EQ(Integer(-5).to_int64(), -5);
    EXPECT_EQ(Integer(std::numeric_limits<std::int64_t>::min()).to_int64(),
              std::numeric_limits<std::int64_t>::min());
    EXPECT_FALSE((Integer(1) << 63).to_int64().has_value());
    EXPECT_EQ((Integer(1) << 63).to_uint64(), std::uint64_t{1} << 63);
    EXPECT_FALSE(Integer(-1).to_uint64().has_value());
    EXPECT_FALSE((Integer(1) << 128).to_uint128().has_value());
    const uint128_t big = (uint128_t{0x1234} << 100) | 77;
    EXPECT_EQ(Integer::from_uint128(big).to_uint128(), big);
}

TEST(Integer, BitLengthAndShifts) {
    EXPECT_EQ(Integer(0).bit_length(), 0U);
    EXPECT_EQ(Integer(1).bit_length(), 1U);
    EXPECT_EQ(Integer(-256).bit_length(), 9U);
    EXPECT_EQ((Integer(3) << 100) >> 100, Integer(3));
    EXPECT_EQ(Integer(5) >> 10, Integer(0));
}

TEST(Integer, Pow) {
    EXPECT_EQ(pow(Integer(2), 100).to_string(), "1267650600228229401496703205376");
    EXPECT_EQ(pow(Integer(-3), 3), Integer(-27));
    EXPECT_EQ(pow(Integer(0), 0), Integer(1));
}

TEST(Isqrt, Examples) {
    // 22^4 + 23^4 - 8 = 514089 = 717^2
    EXPECT_EQ(isqrt(Integer(514089)), Integer(717));
    EXPECT_EQ(isqrt(Integer(0)), Integer(0));
    EXPECT_EQ(isqrt(Integer(2)), Integer(1));
    EXPECT_EQ(isqrt(Integer(514088)), Integer(716));
    EXPECT_THROW(isqrt(Integer(-1)), std::domain_error);
}

TEST(Isqrt, PostConditionExhaustiveSmall) {
    for (long long s = 0; s <= 1'000'000; ++s) {
        const Integer v = s;
        const Integer r = isqrt(v);
        ASSERT_TRUE(r * r <= v && v < (r + 1) * (r + 1)) << s;
    }
}

TEST(Isqrt, PostConditionRandomBig) {
    Gen gen(0x15c1);
    for (int i = 0; i < kPropertyCases; ++i) {
        const Integer s = gen.integer(400).abs();
        const Integer r = isqrt(s);
        ASSERT_TRUE(r * r <= s && s < (r + 1) * (r + 1)) << s;
        // Perfect squares and their neighbours.
        const Integer sq = r * r;
        ASSERT_EQ(isqrt(sq), r);
        if (!r.is_zero()) ASSERT_EQ(isqrt(sq - 1), r - 1);
    }
}

TEST(IntegerProperty, MatchesBoostOracle) {
    Gen gen(0xb16);
    for (int i = 0; i < kPropertyCases; ++i) {
        const Integer a = gen.integer(80);
        const Integer b = gen.integer(40);
        const cpp_int oa = oracle(a);
        const cpp_int ob = oracle(b);
        ASSERT_EQ(oracle(a + b), oa + ob);
        ASSERT_EQ(oracle(a - b), oa - ob);
        ASSERT_EQ(oracle(a * b), oa * ob);
        ASSERT_EQ((a < b), (oa < ob));
        ASSERT_EQ((a == b), (oa == ob));
        if (!b.is_zero()) {
            // cpp_int also truncates toward zero.
            ASSERT_EQ(oracle(a / b), oa / ob) << a << " / " << b;
            ASSERT_EQ(oracle(a % b), oa % ob) << a << " % " << b;
        }
        ASSERT_EQ(oracle(gcd(a, b)), boost::multiprecision::gcd(oa, ob));
        ASSERT_EQ(Integer::parse(a.to_string()), a);
    }
}

TEST(IntegerProperty, DivisionIdentity) {
    Gen gen(0xd1d);
    for (int i = 0; i < kPropertyCases; ++i) {
        const Integer a = gen.integer(120);
        const Integer b = gen.nonzero_integer(60);
        Integer q;
        Integer r;
        divmod(a, b, q, r);
        ASSERT_EQ(q * b + r, a);
        ASSERT_LT(r.abs(), b.abs());
        ASSERT_TRUE(r.is_zero() || r.sign() == a.sign());
    }
}

TEST(IntegerProperty, DivisionOnAdversarialLimbs) {
    // Limb patterns that drive the quotient-digit correction and add-back
    // branches of long division.
    const std::uint32_t patterns[] = {0, 1, 2, 0x7FFFFFFFU, 0x80000000U, 0x80000001U,
                                      0xFFFFFFFEU, 0xFFFFFFFFU};
    Gen gen(0xadd);
    auto build = [&](int limbs) {
        Integer v;
        for (int i = 0; i < limbs; ++i) {
            const std::uint32_t limb = gen.coin() ? patterns[gen.range(0, 7)]
                                                  : static_cast<std::uint32_t>(gen.bits(32));
            v = (v << 32) + Integer(static_cast<unsigned long long>(limb));
        }
        return v;
    };
    for (int i = 0; i < kPropertyCases; ++i) {
        const Integer a = build(static_cast<int>(gen.range(1, 12)));
        Integer b = build(static_cast<int>(gen.range(1, 6)));
        if (b.is_zero()) b = 1;
        ASSERT_EQ(oracle(a / b), oracle(a) / oracle(b)) << a << " / " << b;
        ASSERT_EQ(oracle(a % b), oracle(a) % oracle(b)) << a << " % " << b;
    }
}
