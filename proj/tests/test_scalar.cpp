#include "cherloc/scalar.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cherloc;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

struct ScalarGen {
    std::mt19937 rng{20240611};
    Rational rational() {
        std::uniform_int_distribution<long> num(-12, 12), den(1, 9);
        return q(num(rng), den(rng));
    }
    ParamScalar in(const KappaMode& mode) { return mode.scalar(rational(), rational()); }
};

}  // namespace

TEST(Scalar, AdditiveIdentity) {
    auto mode = KappaMode::formal();
    EXPECT_EQ(mode.zero() + mode.zero(), mode.zero());
}

TEST(Scalar, SelfDifferenceIsZero) {
    auto mode = KappaMode::formal();
    auto x = mode.scalar(q(1, 2), q(1));
    EXPECT_TRUE((x - x).is_zero());
}

TEST(Scalar, RationalModeSubstitutesEagerly) {
    auto mode = KappaMode::rational(q(1, 2));
    auto x = mode.scalar(q(1), q(2));
    EXPECT_EQ(x.constant(), q(2));
    EXPECT_EQ(x.kappa_coeff(), q(0));
    EXPECT_EQ(mode.kappa().constant(), q(1, 2));
}

TEST(Scalar, MixingModesIsAUsageError) {
    auto r = KappaMode::rational(q(1)).constant(q(1));
    auto f = KappaMode::formal().constant(q(1));
    EXPECT_THROW((void)(r + f), std::logic_error);
    EXPECT_THROW((void)(r == f), std::logic_error);
}

TEST(Scalar, IntegersPlusExamples) {
    EXPECT_TRUE(is_in_integers_plus(KappaMode::rational(q(1)).constant(q(-1)), q(0)));
    EXPECT_FALSE(is_in_integers_plus(KappaMode::formal().kappa(), q(0)));
    // -1/2 = -1 + 1/2
    auto x = KappaMode::rational(q(1, 2)).constant(q(-1, 2));
    EXPECT_TRUE(is_in_integers_plus(x, q(1, 2)));
    EXPECT_TRUE(oracle::in_integers_plus_by_search(q(-1, 2), q(1, 2)));
}

TEST(Scalar, SignExamples) {
    auto r = KappaMode::rational(q(1));
    EXPECT_EQ(rational_sign(r.constant(q(-1))), Sign::Negative);
    EXPECT_EQ(rational_sign(KappaMode::formal().scalar(q(3), q(-2))), Sign::NotRational);
    EXPECT_EQ(rational_sign(r.zero()), Sign::Zero);
}

TEST(ScalarProperty, FieldAxiomsOnRandomSamples) {
    ScalarGen gen;
    for (const auto& mode : {KappaMode::formal(), KappaMode::rational(q(3, 7)), KappaMode::rational(q(-2))}) {
        for (int trial = 0; trial < 300; ++trial) {
            auto x = gen.in(mode), y = gen.in(mode), z = gen.in(mode);
            Rational c = gen.rational(), d = gen.rational();
            EXPECT_EQ((x + y) + z, x + (y + z));
            EXPECT_EQ(x + y, y + x);
            EXPECT_EQ((x + y) * c, x * c + y * c);
            EXPECT_EQ(x * (c + d), x * c + x * d);
            EXPECT_EQ((x * c) * d, x * (c * d));
            EXPECT_TRUE((x + (-x)).is_zero());
            if (c != 0) {
                EXPECT_EQ((x * c) * (Rational(1) / c), x);
            }
            if (!mode.is_formal()) {
                EXPECT_EQ((x * c + y).kappa_coeff(), 0);
            }
        }
    }
}

TEST(ScalarProperty, IntegersPlusShiftsToZeroAndMatchesSearch) {
    ScalarGen gen;
    for (const auto& mode : {KappaMode::formal(), KappaMode::rational(q(1, 2))}) {
        for (int trial = 0; trial < 500; ++trial) {
            auto x = trial % 3 == 0 ? mode.constant(Rational(trial % 7 - 3) + q(1, 3)) : gen.in(mode);
            Rational c = trial % 2 ? q(1, 3) : gen.rational();
            EXPECT_EQ(is_in_integers_plus(x, c), is_in_integers_plus(x - c, q(0)));
            if (x.is_rational() && abs(x.constant()) < 8 && abs(c) < 2) {
                EXPECT_EQ(is_in_integers_plus(x, c), oracle::in_integers_plus_by_search(x.constant(), c));
            }
        }
    }
}

TEST(ScalarProperty, SignIsAntisymmetric) {
    ScalarGen gen;
    for (const auto& mode : {KappaMode::formal(), KappaMode::rational(q(5, 3))}) {
        for (int trial = 0; trial < 300; ++trial) {
            auto x = trial % 4 == 0 ? mode.constant(gen.rational()) : gen.in(mode);
            EXPECT_EQ(rational_sign(x) == Sign::Negative, rational_sign(-x) == Sign::Positive);
        }
    }
}

TEST(Rational, CanonicalStringsAndParsing) {
    EXPECT_EQ(to_string(q(0)), "0/1");
    EXPECT_EQ(to_string(q(4, -6)), "-2/3");
    EXPECT_EQ(parse_rational("-4/6"), q(-2, 3));
    EXPECT_EQ(parse_rational("7"), q(7));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
    EXPECT_EQ(floor_of(q(-1, 2)), -1);
    EXPECT_EQ(ceil_of(q(-1, 2)), 0);
    EXPECT_EQ(floor_of(q(7, 2)), 3);
}
