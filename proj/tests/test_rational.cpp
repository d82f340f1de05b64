#include <gtest/gtest.h>

#include <random>

#include "cyclograph/rational.hpp"

using cyclograph::Error;
using cyclograph::ErrorCode;
using cyclograph::Rational;

TEST(Rational, ReducesOnConstruction) {
    EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
    EXPECT_EQ(Rational(0, 7), Rational(0));
    EXPECT_TRUE(Rational(10, 5).is_integer());
}

TEST(Rational, ZeroDenominatorThrows) {
    try {
        Rational(1, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
    }
    EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(Rational, ParseRoundTrip) {
    for (const char* s : {"0", "-7", "22/7", "-1/3", "123456789012345678901234567890/11"})
        EXPECT_EQ(Rational::parse(s).to_string(), s);
    EXPECT_THROW(Rational::parse("1/0"), Error);
    EXPECT_THROW(Rational::parse("abc"), Error);
    EXPECT_THROW(Rational::parse(""), Error);
}

TEST(Rational, OverflowPromotesAndDemotes) {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    const Rational sq = big * big;
    EXPECT_EQ(sq.to_mpq(), mpq_class(mpz_class(big.numerator() * big.numerator())));
    const Rational back = sq / big;
    EXPECT_EQ(back, big);
    EXPECT_EQ(back.to_string(), big.to_string());
    const Rational min(std::numeric_limits<std::int64_t>::min());
    EXPECT_EQ((-min).to_mpq(), -min.to_mpq());
    EXPECT_EQ((min - Rational(1)).to_mpq(), min.to_mpq() - 1);
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_LT(Rational(-1, 2), Rational(-1, 3));
    EXPECT_FALSE(Rational(2, 4) < Rational(1, 2));
    EXPECT_EQ(Rational(-3, 4).sign(), -1);
}

// Random arithmetic against GMP rationals, mixing small and huge operands.
TEST(Rational, MatchesGmpOnRandomOperations) {
    std::mt19937_64 rng(20240611);
    auto draw = [&]() -> mpq_class {
        const int kind = static_cast<int>(rng() % 3);
        mpz_class num, den;
        if (kind == 0) {
            num = static_cast<long>(rng() % 2001) - 1000;
            den = static_cast<long>(rng() % 50 + 1);
        } else if (kind == 1) {
            num = static_cast<long>(rng() >> 1) * ((rng() & 1) ? 1 : -1);
            den = static_cast<long>((rng() >> 2) | 1);
        } else {
            num = mpz_class(static_cast<unsigned long>(rng())) * static_cast<unsigned long>(rng()) - static_cast<unsigned long>(rng());
            den = mpz_class(static_cast<unsigned long>(rng() | 1));
        }
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    };
    for (int i = 0; i < 20000; ++i) {
        const mpq_class a = draw(), b = draw();
        const Rational ra(a), rb(b);
        ASSERT_EQ((ra + rb).to_mpq(), a + b);
        ASSERT_EQ((ra - rb).to_mpq(), a - b);
        ASSERT_EQ((ra * rb).to_mpq(), a * b);
        if (b != 0) {
            ASSERT_EQ((ra / rb).to_mpq(), a / b);
        }
        ASSERT_EQ(ra < rb, a < b);
        ASSERT_EQ(ra == rb, a == b);
        ASSERT_EQ(Rational(a + b) == ra + rb, true);
    }
}
