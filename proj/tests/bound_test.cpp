#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <map>

#include "gpdrift/bound.hpp"
#include "gpdrift/error.hpp"
#include "test_support.hpp"

using namespace gpdrift;
using namespace gpdrift::testing;

TEST(MeanU, ExactValues) {
    EXPECT_EQ(mean_U_exact(4, 2, 17), Rational(11, 119));
    EXPECT_EQ(mean_U_exact(4, 2, 16), Rational(0));
    EXPECT_LT(mean_U_exact(4, 2, 15), Rational(0));
    EXPECT_EQ(mean_U_exact(0, 1, 4), Rational(1, 2));
    EXPECT_THROW(mean_U_exact(4, 2, 10), Error);  // D = 2B + C
}

TEST(MeanU, SignMatchesSmallCliquesOverGrid) {
    for (std::int64_t B = 0; B <= 12; ++B)
        for (std::int64_t C = 1; C <= 6; ++C)
            for (std::int64_t D = 2 * B + C + 1; D <= 3 * B + 2 * C + 40; ++D) {
                auto m = mean_U_exact(B, C, D);
                ASSERT_EQ(m > Rational(0), small_cliques(B, C, D)) << B << " " << C << " " << D;
                ASSERT_EQ(m == Rational(0), D == 3 * B + 2 * C);
            }
}

TEST(MeanU, MatchesSeries) {
    for (auto [B, C, D] : std::vector<std::array<std::int64_t, 3>>{{4, 2, 17}, {4, 2, 50}, {1, 1, 6}, {10, 3, 400}})
        EXPECT_NEAR(mean_U(B, C, D), series_mean_U(B, C, D), 1e-12);
}

TEST(Mgf, ClosedFormMatchesSeries) {
    for (auto [B, C, D] :
         std::vector<std::array<std::int64_t, 3>>{{4, 2, 17}, {4, 2, 50}, {4, 2, 100}, {1, 1, 6}, {10, 3, 400}}) {
        const double top = t_max(B, C, D);
        for (int i = 1; i < 60; ++i) {
            double t = top * i / 60.0 * 0.9;  // stay clear of the pole at t_max
            double closed = mgf(t, B, C, D);
            double series = series_mgf(t, B, C, D);
            ASSERT_NEAR(closed, series, 1e-10 * std::max(1.0, series)) << B << " " << C << " " << D << " t=" << t;
        }
    }
}

TEST(Mgf, MatchesDisplayedFormulaAtPowerOfD) {
    // e^t = D^alpha:
    //   D^-a (D-B-C)/D + (B+C) D^(a-1) (D-2B-C) / (D-B-C-D^a B)
    const double D = 100, B = 4, C = 2, a = 0.3;
    const double Da = std::pow(D, a);
    const double displayed =
        (D - B - C) / (D * Da) + (B + C) * std::pow(D, a - 1) * (D - 2 * B - C) / (D - B - C - Da * B);
    EXPECT_NEAR(mgf(std::log(Da), 4, 2, 100), displayed, 1e-12);
}

TEST(Mgf, DomainErrors) {
    EXPECT_THROW(mgf(0.0, 4, 2, 50), Error);
    EXPECT_THROW(mgf(t_max(4, 2, 50), 4, 2, 50), Error);
    EXPECT_THROW(mgf(-1.0, 4, 2, 50), Error);
    EXPECT_TRUE(std::isinf(t_max(0, 1, 5)));
    EXPECT_NEAR(mgf(1.0, 0, 1, 5), std::exp(-1.0) * 0.8 + 0.2 * std::exp(1.0), 1e-15);
}

TEST(Kappa, FrozenCycleValues) {
    // Independent high-resolution scan of the series mgf.
    const std::map<std::int64_t, double> expected{{17, 0.00216}, {20, 0.0220}, {30, 0.1018}, {50, 0.2055},
                                                  {100, 0.3252}, {1000, 0.573}, {12000, 0.7043}};
    for (auto [D, k] : expected) EXPECT_NEAR(kappa(4, 2, D).kappa, k, 5e-4 + 2e-3 * k) << D;
    EXPECT_NEAR(kappa(4, 2, 50).t_star, 0.658, 2e-3);
}

TEST(Kappa, AgreesWithGridOracle) {
    for (std::int64_t D : {17, 25, 60, 100, 300}) {
        auto k = kappa(4, 2, D);
        double oracle = grid_kappa_oracle(4, 2, D);
        EXPECT_GE(k.kappa, oracle - 1e-12) << D;  // refinement can only help
        EXPECT_NEAR(k.kappa, oracle, 1e-4) << D;
    }
    auto k = kappa(2, 3, 40);
    EXPECT_NEAR(k.kappa, grid_kappa_oracle(2, 3, 40), 1e-4);
}

TEST(Kappa, SelfConsistent) {
    auto k = kappa(4, 2, 100);
    EXPECT_GT(k.t_star, 0.0);
    EXPECT_LT(k.t_star, k.t_max);
    EXPECT_LT(k.mgf_at_t_star, 1.0);
    EXPECT_NEAR(k.kappa, rate_function(k.t_star, 4, 2, 100), 1e-15);
    // Local optimality.
    EXPECT_GE(k.kappa, rate_function(k.t_star * 0.999, 4, 2, 100));
    EXPECT_GE(k.kappa, rate_function(k.t_star * 1.001, 4, 2, 100));
}

TEST(Kappa, BelowMeanAndNondecreasingInD) {
    double prev = 0.0;
    for (std::int64_t D = 17; D <= 3000; D += (D < 200 ? 1 : 37)) {
        auto k = kappa(4, 2, D);
        ASSERT_GT(k.kappa, 0.0) << D;
        ASSERT_LE(k.kappa, k.mean_U) << D;  // Jensen
        ASSERT_GE(k.kappa, prev - 1e-12) << D;
        prev = k.kappa;
    }
}

TEST(Kappa, RequiresSmallCliques) {
    try {
        kappa(4, 2, 16);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::small_cliques);
    }
    EXPECT_GT(kappa(4, 2, 17).kappa, 0.0);
}

TEST(Kappa, NoBallTermWhenBIsZero) {
    auto k = kappa(0, 1, 10);
    EXPECT_TRUE(std::isinf(k.t_max));
    EXPECT_GT(k.kappa, 0.0);
    EXPECT_LE(k.kappa, k.mean_U);
    double best = 0;
    for (int i = 1; i < 20000; ++i) {
        double t = std::log(10.0) * i / 20000.0;
        best = std::max(best, rate_function(t, 0, 1, 10));
    }
    EXPECT_NEAR(k.kappa, best, 1e-6);
}

TEST(UDistribution, PointMassesSumToOne) {
    auto u = UDistribution::make(4, 2, 50);
    double total = u.p_up;
    for (std::int64_t j = 1; j < 400; ++j) total += u.pmf_down(j);
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(u.tail(1), u.prob_down());
    EXPECT_THROW(UDistribution::make(4, 2, 10), Error);
}

TEST(UDistribution, SamplerMatchesLaw) {
    auto u = UDistribution::make(4, 2, 20);
    Rng rng(77);
    const int N = 400000;
    std::map<std::int64_t, int> hist;
    double sum = 0;
    for (int i = 0; i < N; ++i) {
        auto x = sample_U(u, rng);
        ++hist[x];
        sum += static_cast<double>(x);
    }
    auto near = [&](double freq, double p) {
        double sigma = std::sqrt(p * (1 - p) / N);
        return std::abs(freq - p) <= 5 * sigma + 1e-12;
    };
    EXPECT_TRUE(near(hist[1] / double(N), u.p_up));
    for (std::int64_t j = 1; j <= 4; ++j) EXPECT_TRUE(near(hist[-j] / double(N), u.pmf_down(j))) << j;
    EXPECT_EQ(hist.count(0), 0u);
    EXPECT_NEAR(sum / N, mean_U(4, 2, 20), 0.01);

    auto no_ball = UDistribution::make(0, 1, 5);
    for (int i = 0; i < 1000; ++i) {
        auto x = sample_U(no_ball, rng);
        ASSERT_TRUE(x == 1 || x == -1);
    }
}

TEST(LargeDeviation, BoundEqualsExpOfMinusKappaN) {
    auto k = kappa(4, 2, 50);
    for (std::int64_t n : {1, 10, 200}) {
        double bound = large_deviation_bound(k.kappa, k.t_star, k.mgf_at_t_star, n);
        EXPECT_NEAR(std::log(bound), -k.kappa * static_cast<double>(n), 1e-9 * static_cast<double>(n));
    }
    EXPECT_EQ(large_deviation_bound(k.kappa, k.t_star, k.mgf_at_t_star, 0), 1.0);
    EXPECT_EQ(large_deviation_bound(0.5, 1.0, 1.2, 10), 1.0);
}
