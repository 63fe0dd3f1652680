#include <gtest/gtest.h>

#include "ftl/harmonic.hpp"
#include "oracles.hpp"

using namespace ftl;

namespace {

using Y = CdFunction<Cyclotomic>;

// Direct definitions, independent of the library's loops.
Y slow_convolve(const Y& a, const Y& b) {
    const int d = a.size();
    Y r(d);
    for (int k = 0; k < d; ++k) {
        Cyclotomic acc;
        for (int s = 0; s < d; ++s) acc = acc + a[s] * b[k - s];
        r[k] = acc;
    }
    return r;
}

}  // namespace

TEST(Harmonic, ConvolutionExamples) {
    oracle::Rng rng(1);
    for (int d = 1; d <= 6; ++d) {
        const Y y = oracle::random_cd(rng, d);
        EXPECT_EQ(convolve(Y::delta(d, 0), y), y);
        EXPECT_EQ(convolve(y, Y::delta(d, 0)), y);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                const Y ab = convolve(Y::character(d, a), Y::character(d, b));
                if (a == b) EXPECT_EQ(ab, Y::character(d, a).scaled(Cyclotomic(d)));
                else EXPECT_EQ(ab, Y(d));
            }
        const Y y2 = oracle::random_cd(rng, d);
        EXPECT_EQ(convolve(y, y2), slow_convolve(y, y2));
        EXPECT_EQ(convolve(y, y2), convolve(y2, y));
    }
}

TEST(Harmonic, FourierExamples) {
    oracle::Rng rng(2);
    for (int d = 1; d <= 8; ++d) {
        for (int a = 0; a < d; ++a) {
            EXPECT_EQ(fourier(Y::delta(d, a)), Y::character(d, -a));
            EXPECT_EQ(fourier(Y::character(d, a)), Y::delta(d, a).scaled(Cyclotomic(d)));
        }
        const Y y = oracle::random_cd(rng, d);
        Y reflected(d);
        for (int r = 0; r < d; ++r) reflected[r] = y[-r];
        EXPECT_EQ(fourier(fourier(y)), reflected.scaled(Cyclotomic(d)));
    }
}

TEST(Harmonic, FourierProperties) {
    oracle::Rng rng(3);
    for (int d = 1; d <= 12; ++d) {
        for (int trial = 0; trial < 10; ++trial) {
            const Y y = oracle::random_cd(rng, d), yp = oracle::random_cd(rng, d);
            EXPECT_EQ(fourier(convolve(y, yp)), pointwise(fourier(y), fourier(yp)));
            EXPECT_EQ(fourier(pointwise(y, yp)), convolve(fourier(y), fourier(yp)).scaled(Cyclotomic(Rational(1, d))));
        }
    }
}

TEST(Harmonic, IndicesWrap) {
    Y y(3);
    y[1] = Cyclotomic(5);
    EXPECT_EQ(y[4], Cyclotomic(5));
    EXPECT_EQ(y[-2], Cyclotomic(5));
    EXPECT_EQ(Y::character(4, 1)[3], Cyclotomic::root_of_unity(4, 3));
}

TEST(ESystem, Examples) {
    const auto two = solve_esystem(2);
    ASSERT_EQ(two.size(), 3u);
    EXPECT_EQ(two[0].x[1], Cyclotomic(1));
    EXPECT_EQ(two[1].x[1], Cyclotomic(-1));
    EXPECT_EQ(two[2].x[1], Cyclotomic(0));
    EXPECT_EQ(to_string(two[2]), "D={0,1}: x=[1, 0] E=1/2");

    const auto one = solve_esystem(1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].E, Rational(1));

    for (int d = 2; d <= 7; ++d) {
        std::vector<int> all(d);
        for (int k = 0; k < d; ++k) all[k] = k;
        const Y x = esystem_solution_vector(d, all);
        EXPECT_EQ(x[0], Cyclotomic(1));
        for (int k = 1; k < d; ++k) EXPECT_TRUE(x[k].is_zero());
    }
}

TEST(ESystem, Verify) {
    Y x(2);
    x[0] = Cyclotomic(1);
    x[1] = Cyclotomic(0);
    EXPECT_TRUE(esystem_verify(x));
    x[1] = Cyclotomic(Rational(1, 2));
    EXPECT_FALSE(esystem_verify(x));
}

TEST(ESystem, Completeness) {
    for (int d = 1; d <= 6; ++d) {
        const auto sols = solve_esystem(d);
        EXPECT_EQ(sols.size(), (1u << d) - 1);
        for (const auto& s : sols) {
            EXPECT_TRUE(esystem_verify(s.x)) << to_string(s);
            EXPECT_EQ(shifted_e(s.x, 0), Cyclotomic(s.E));
            EXPECT_EQ(s.E, Rational(1, static_cast<long>(s.D.size())));
            EXPECT_EQ(s.x[0], Cyclotomic(1));
        }
    }
}

TEST(ESystem, NonSolutionsFail) {
    oracle::Rng rng(9);
    int failures = 0;
    for (int trial = 0; trial < 20; ++trial) {
        Y x = oracle::random_cd(rng, 3);
        x[0] = Cyclotomic(1);
        failures += !esystem_verify(x);
    }
    EXPECT_EQ(failures, 20);
}

TEST(SupSplit, Examples) {
    const CyclotomicRF u = CyclotomicRF::u();
    for (int d = 1; d <= 4; ++d) {
        const auto a = sup_split_params(d, {}, {0});
        EXPECT_EQ(a.z, -(u + CyclotomicRF(1)).inverse());
        for (int k = 0; k < d; ++k) EXPECT_EQ(a.x[k], CyclotomicRF(1));
        const auto b = sup_split_params(d, {0}, {});
        EXPECT_EQ(b.z, CyclotomicRF(-1));
        for (int k = 0; k < d; ++k) EXPECT_EQ(b.x[k], CyclotomicRF(1));
    }
    const auto c = sup_split_params(2, {0}, {1});
    EXPECT_EQ(c.z, -(u + CyclotomicRF(2)).inverse());
    EXPECT_EQ(c.x[0], CyclotomicRF(1));
    EXPECT_EQ(c.x[1], u * c.z);
}

TEST(SupSplit, RejectsBadInput) {
    EXPECT_THROW(sup_split_params(2, {0}, {0}), std::invalid_argument);
    EXPECT_THROW(sup_split_params(2, {}, {}), std::invalid_argument);
    EXPECT_THROW(sup_split_params(2, {2}, {}), std::out_of_range);
    EXPECT_THROW(esystem_solution_vector(2, {}), std::invalid_argument);
    EXPECT_THROW(solve_esystem(0), std::invalid_argument);
}
