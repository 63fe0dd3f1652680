#include <gtest/gtest.h>

#include "ftl/half_power.hpp"
#include "ftl/specialize.hpp"
#include "oracles.hpp"

using namespace ftl;

namespace {

std::vector<Integer> ints(std::initializer_list<int> xs) {
    std::vector<Integer> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST(Cyclotomic, PolynomialTable) {
    EXPECT_EQ(cyclotomic_polynomial(1), ints({-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(2), ints({1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), ints({1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), ints({1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), ints({1, 0, -1, 0, 1}));
    // Product over divisors of 12 is X^12 - 1.
    QPolynomial prod(Rational(1));
    for (int k : {1, 2, 3, 4, 6, 12}) {
        std::vector<Rational> c;
        for (const auto& a : cyclotomic_polynomial(k)) c.emplace_back(a);
        prod = prod * QPolynomial(c);
    }
    EXPECT_EQ(prod, QPolynomial::monomial(Rational(1), 12) - QPolynomial(Rational(1)));
}

TEST(Cyclotomic, CharacterValues) {
    EXPECT_EQ(character_value(2, 1, 1), Cyclotomic(-1));
    EXPECT_EQ(character_value(4, 1, 2), Cyclotomic(-1));
    const Cyclotomic z3 = character_value(3, 1, 1);
    EXPECT_EQ(z3 * z3 + z3 + Cyclotomic(1), Cyclotomic(0));
    EXPECT_FALSE(z3.is_rational());
    for (int d = 1; d <= 12; ++d)
        for (int k = 0; k < d; ++k)
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    EXPECT_EQ(character_value(d, k, a + b), character_value(d, k, a) * character_value(d, k, b));
}

TEST(Cyclotomic, ColumnSumsVanish) {
    for (int d = 2; d <= 12; ++d)
        for (int k = 1; k < d; ++k) {
            Cyclotomic s;
            for (int m = 0; m < d; ++m) s = s + character_value(d, k, m);
            EXPECT_TRUE(s.is_zero()) << d << " " << k;
        }
}

TEST(Cyclotomic, FieldAxioms) {
    oracle::Rng rng(11);
    for (int d : {1, 2, 3, 5, 8, 12}) {
        for (int trial = 0; trial < 30; ++trial) {
            const Cyclotomic a = oracle::random_cyclotomic(rng, d), b = oracle::random_cyclotomic(rng, d),
                             c = oracle::random_cyclotomic(rng, d);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a * b, b * a);
            if (!a.is_zero()) {
                EXPECT_EQ(a * a.inverse(), Cyclotomic(1));
            }
        }
    }
}

TEST(Cyclotomic, RationalsNormalize) {
    const Cyclotomic q(Rational(3, 4));
    EXPECT_EQ(q, Cyclotomic::root_of_unity(5, 0) * q);
    EXPECT_EQ(to_string(Cyclotomic(Rational(-1, 2))), "-1/2");
}

TEST(RationalFunction, FieldAxioms) {
    oracle::Rng rng(5);
    for (int d : {1, 2, 3}) {
        for (int trial = 0; trial < 20; ++trial) {
            const CyclotomicRF a = oracle::random_rf(rng, d), b = oracle::random_rf(rng, d), c = oracle::random_rf(rng, d);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            if (!a.is_zero()) {
                EXPECT_EQ(a * a.inverse(), CyclotomicRF(1));
            }
            EXPECT_EQ(a - a, CyclotomicRF());
        }
    }
}

TEST(RationalFunction, Basics) {
    const CyclotomicRF v = CyclotomicRF::v();
    EXPECT_EQ(v * v, CyclotomicRF::u());
    EXPECT_EQ(CyclotomicRF::v_power(-3) * CyclotomicRF::v_power(3), CyclotomicRF(1));
    EXPECT_EQ(to_string(-(CyclotomicRF::u() + CyclotomicRF(1)).inverse()), "-1/(v^2 + 1)");
    EXPECT_TRUE(CyclotomicRF(7).is_constant());
}

TEST(UScalar, CanonicalForm) {
    const UScalar u = UScalar::u();
    EXPECT_EQ((u + UScalar(1)) * UScalar::inv_u_plus_one(), UScalar(1));
    EXPECT_EQ(UScalar::u_power(-2) * u * u, UScalar(1));
    // (u^2 - 1)/(u + 1) = u - 1
    EXPECT_EQ((u * u - UScalar(1)) * UScalar::inv_u_plus_one(), u - UScalar(1));
    EXPECT_TRUE((u - u).is_zero());
    oracle::Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const UScalar a = oracle::random_uscalar(rng), b = oracle::random_uscalar(rng), c = oracle::random_uscalar(rng);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(to_rational_function(a * b), to_rational_function(a) * to_rational_function(b));
        EXPECT_EQ(to_rational_function(a + b), to_rational_function(a) + to_rational_function(b));
    }
}

TEST(TracePolynomial, Arithmetic) {
    const int d = 3;
    const auto z = TracePolynomial::z(d);
    EXPECT_EQ(TracePolynomial::x(d, 3), TracePolynomial(d, UScalar(1)));
    EXPECT_EQ(TracePolynomial::x(d, -1), TracePolynomial::x(d, 2));
    EXPECT_EQ((z * z).z_degree(), 2);
    EXPECT_EQ(to_string(z * TracePolynomial::x(d, 1) + z), "z + z*x_1");
    EXPECT_TRUE((z - z).is_zero());
}

TEST(Specialize, Examples) {
    const TracePolynomial x1 = TracePolynomial::x(2, 1);
    EXPECT_EQ(specialize(x1, CyclotomicRF(), std::vector<Cyclotomic>{Cyclotomic(-1)}), CyclotomicRF(-1));

    const CyclotomicRF zeta = -(CyclotomicRF::u() + CyclotomicRF(1)).inverse();
    EXPECT_EQ(to_string(specialize(TracePolynomial::z(1), zeta, std::vector<Cyclotomic>{})), "-1/(v^2 + 1)");

    const auto z = TracePolynomial::z(1);
    const UScalar u = UScalar::u();
    const TracePolynomial p = (u + UScalar(1)) * (z * z) + (u + UScalar(2)) * z + TracePolynomial(1, UScalar(1));
    EXPECT_TRUE(specialize(p, zeta, std::vector<Cyclotomic>{}).is_zero());
}

TEST(Specialize, IsARingMap) {
    oracle::Rng rng(17);
    for (int d : {1, 2, 3, 4}) {
        for (int trial = 0; trial < 15; ++trial) {
            const TracePolynomial p = oracle::random_trace_polynomial(rng, d), q = oracle::random_trace_polynomial(rng, d);
            CdFunction<CyclotomicRF> x(d);
            x[0] = CyclotomicRF(1);
            for (int k = 1; k < d; ++k) x[k] = oracle::random_rf(rng, d);
            const CyclotomicRF z = oracle::random_rf(rng, d);
            EXPECT_EQ(specialize(p + q, z, x), specialize(p, z, x) + specialize(q, z, x));
            EXPECT_EQ(specialize(p * q, z, x), specialize(p, z, x) * specialize(q, z, x));
        }
    }
}

TEST(Specialize, RejectsBadX0) {
    CdFunction<CyclotomicRF> x(2);
    x[0] = CyclotomicRF(2);
    EXPECT_THROW(specialize(TracePolynomial::z(2), CyclotomicRF(), x), std::invalid_argument);
}

TEST(HalfPower, ReduceAndArithmetic) {
    const CyclotomicRF u = CyclotomicRF::u();
    const HalfPowerValue w3 = HalfPowerValue::reduce(WLaurent::monomial(3), u);
    EXPECT_EQ(w3.even(), CyclotomicRF());
    EXPECT_EQ(w3.odd(), u);
    const HalfPowerValue winv = HalfPowerValue::reduce(WLaurent::monomial(-1), u);
    EXPECT_EQ(winv.odd(), u.inverse());
    EXPECT_EQ(winv * HalfPowerValue::reduce(WLaurent::monomial(1), u), HalfPowerValue(u, CyclotomicRF(1)));
    // Reduction is a ring map on random Laurent polynomials.
    oracle::Rng rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        WLaurent a, b;
        for (int k = -2; k <= 2; ++k) {
            a = a + WLaurent::monomial(k, oracle::random_rf(rng, 1));
            b = b + WLaurent::monomial(k, oracle::random_rf(rng, 1));
        }
        EXPECT_EQ(HalfPowerValue::reduce(a * b, u), HalfPowerValue::reduce(a, u) * HalfPowerValue::reduce(b, u));
        EXPECT_EQ(HalfPowerValue::reduce(a + b, u), HalfPowerValue::reduce(a, u) + HalfPowerValue::reduce(b, u));
        // At w = u, W = v.
        const HalfPowerValue r = HalfPowerValue::reduce(a, u);
        EXPECT_EQ(a.evaluate(CyclotomicRF::v()), r.even() + r.odd() * CyclotomicRF::v());
    }
    EXPECT_THROW(HalfPowerValue{CyclotomicRF()}, std::invalid_argument);
}
