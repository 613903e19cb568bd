#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"
#include "standby/errors.hpp"
#include "standby/system.hpp"

using namespace standby;

namespace {

Distribution E(double rate) { return Distribution::exponential(rate); }
Distribution W(double scale, double shape) { return Distribution::weibull(scale, shape); }

SystemModel trivial() { return SystemModel(E(1), 1.0, E(1), E(3)); }
SystemModel weibull2() { return SystemModel(W(1, 2), 1.0, E(1), E(3)); }

double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(SystemModel, RejectsNonpositiveStandbyRate) {
    EXPECT_THROW(SystemModel(E(1), 0.0, E(1), E(3)), DomainError);
    EXPECT_THROW(SystemModel(E(1), -2.0, E(1), E(3)), DomainError);
    EXPECT_THROW(SystemModel(E(1), std::nan(""), E(1), E(3)), DomainError);
}

TEST(Mu, ExponentialDowntimes) {
    const auto m = trivial();
    EXPECT_DOUBLE_EQ(mu(m, Downtime::repair), 0.5);
    EXPECT_DOUBLE_EQ(mu(m, Downtime::maintenance), 0.25);
    EXPECT_DOUBLE_EQ(m.delta_mu(), 0.25);
}

TEST(Mu, WeibullDowntimeAgainstTrapezoid) {
    const double expected = oracle::trapezoid(
        [](double t) { return std::exp(-0.1 * t - t * t); }, 0.0, 10.0, 200'000);
    EXPECT_NEAR(expected, ref::mu_w12_standby_01, 1e-9);
    EXPECT_NEAR(standby_overlap_mean(0.1, W(1, 2)), expected, 1e-8);
}

TEST(CycleFailureProb, Examples) {
    const auto m = trivial();
    EXPECT_NEAR(cycle_failure_prob(m, std::log(2.0)), 0.375, 1e-15);
    EXPECT_NEAR(cycle_failure_prob(m, 60.0), 1.0 * 0.5, 1e-15);
    EXPECT_NEAR(cycle_failure_prob(m, 1e-9), 0.25, 1e-9);
    EXPECT_THROW((void)cycle_failure_prob(m, 0.0), DomainError);
}

TEST(Mttf, ClosedFormExample) {
    EXPECT_NEAR(mttf(trivial(), std::log(2.0)), 7.0 / 3.0, 1e-14);
    EXPECT_THROW((void)mttf(trivial(), 0.0), DomainError);
    EXPECT_THROW((void)mttf(trivial(), -1.0), DomainError);
}

TEST(Mttf, DisplayedFormulaForWeibullMinimum) {
    // (1/lam) (1 + (lam+g1)(lam+g2) int_0^T S / (lam + g2 - (g2-g1) S(T)))
    const double lam = 1.0, g1 = 0.001, g2 = 4.0;
    const SystemModel m(Distribution::min_of({W(1, 0.5), W(1, 3)}), lam, E(g1), E(g2));
    for (double T : {0.1, 0.5, 0.8, 2.0}) {
        const double integral = oracle::simpson(
            [](double u) { return 2.0 * u * std::exp(-u - std::pow(u, 6)); }, 0.0, std::sqrt(T),
            40000);
        const double s = std::exp(-std::sqrt(T) - T * T * T);
        const double expected =
            (1 + (lam + g1) * (lam + g2) * integral / (lam + g2 - (g2 - g1) * s)) / lam;
        EXPECT_LT(rel_diff(mttf(m, T), expected), 1e-10) << "T=" << T;
    }
    const double no_pm = (1 + (lam + g1) * ref::bfr_mean) / lam;
    EXPECT_LT(rel_diff(mttf_no_pm(m), no_pm), 1e-12);
}

TEST(Mttf, DisplayedFormulaForExponentialMaximum) {
    const double lam = 0.1, g1 = 0.01, g2 = 6.0, b1 = 1.0, b2 = 2.0;
    const SystemModel m(Distribution::max_of({E(b1), E(b2)}), lam, E(g1), E(g2));
    for (double T : {0.05, 0.3, 1.0, 4.0}) {
        const double integral = (1 - std::exp(-b1 * T)) / b1 + (1 - std::exp(-b2 * T)) / b2 -
                                (1 - std::exp(-(b1 + b2) * T)) / (b1 + b2);
        const double s = std::exp(-b1 * T) + std::exp(-b2 * T) - std::exp(-(b1 + b2) * T);
        const double expected =
            (1 + (lam + g1) * (lam + g2) * integral / (lam + g2 - (g2 - g1) * s)) / lam;
        EXPECT_LT(rel_diff(mttf(m, T), expected), 1e-12) << "T=" << T;
    }
    const double no_pm = (1 + (lam + g1) * (1 / b1 + 1 / b2 - 1 / (b1 + b2))) / lam;
    EXPECT_LT(rel_diff(mttf_no_pm(m), no_pm), 1e-13);
    EXPECT_NEAR(mttf_no_pm(m), ref::ubfr_mttf_no_pm, 1e-12);
}

TEST(Mttf, HugeTimeApproachesNoMaintenance) {
    for (const auto& m : {trivial(), weibull2(),
                          SystemModel(Distribution::max_of({E(1), E(2)}), 0.1, E(0.01), E(6))}) {
        const double T = survival_quantile(m.main(), 1e-13);
        EXPECT_LT(rel_diff(mttf(m, T), mttf_no_pm(m)), 1e-6);
    }
}

TEST(MttfNoPm, Examples) {
    EXPECT_DOUBLE_EQ(mttf_no_pm(trivial()), 3.0);
    EXPECT_NEAR(mttf_no_pm(SystemModel(W(1, 2), 1.0, E(1), E(3))),
                1 + std::sqrt(std::numbers::pi) / 2 / 0.5, 1e-14);
    EXPECT_NEAR(mttf_no_pm(weibull2()), 2.7724539, 1e-7);
}

TEST(ThresholdConstant, Examples) {
    EXPECT_DOUBLE_EQ(threshold_constant(trivial()), 0.5);
    EXPECT_EQ(threshold_constant(SystemModel(W(1, 2), 1.0, E(2), E(2))), 0.0);
    EXPECT_NEAR(threshold_constant(weibull2()), std::sqrt(std::numbers::pi) / 4, 1e-15);
    EXPECT_NEAR(threshold_constant(weibull2()), 0.4431135, 1e-7);
    // a (g2 - g1) / (lam + g2) for exponential downtimes.
    const SystemModel m(W(2, 3), 0.4, E(0.2), E(1.5));
    EXPECT_NEAR(threshold_constant(m), mean(W(2, 3)) * 1.3 / 1.9, 1e-14);
}

TEST(Benefit, ExponentialMainNeverBenefits) {
    for (double T : {0.01, 0.5, 3.0, 20.0}) {
        const auto b = benefit(trivial(), T);
        EXPECT_LT(b.difference, 0.0) << "T=" << T;
        EXPECT_FALSE(b.predicate);
    }
}

TEST(Benefit, NonpositiveDeltaMuNeverBenefits) {
    const SystemModel slow_pm(W(1, 2), 1.0, E(3), E(1));
    const SystemModel equal(W(1, 2), 1.0, E(2), E(2));
    for (double T : {0.1, 1.0, 2.0, 4.0}) {
        EXPECT_LT(benefit(slow_pm, T).difference, 0.0);
        EXPECT_LE(benefit(equal, T).difference, 1e-14);
    }
}

TEST(Benefit, WeibullPastThreshold) {
    const auto m = weibull2();
    const double expected = mttf(m, 2.0) - mttf_no_pm(m);
    // Direct oracle: closed-form pieces.
    const double mu1 = 0.5, mu2 = 0.25;
    const double s = std::exp(-4.0);
    const double direct = 1 + std::sqrt(std::numbers::pi) / 2 * std::erf(2.0) / (mu1 * (1 - s) + mu2 * s) -
                          (1 + std::sqrt(std::numbers::pi) / 2 / mu1);
    EXPECT_NEAR(expected, direct, 1e-13);
    EXPECT_GT(benefit(m, 2.0).difference, 0.0);
    EXPECT_TRUE(benefit(m, 2.0).predicate);
}

TEST(Phi, Examples) {
    EXPECT_NEAR(phi(SystemModel(W(1, 2), 1.0, E(1), E(3)), 1e-9), 1.0, 1e-12);
    EXPECT_NEAR(phi(weibull2(), 1.0), ref::w12_phi_at_1, 1e-13);
    const double oracle_phi =
        2.0 * oracle::trapezoid([](double x) { return std::exp(-x * x); }, 0.0, 1.0, 200'000) +
        std::exp(-1.0);
    EXPECT_NEAR(phi(weibull2(), 1.0), oracle_phi, 1e-10);
    for (double t : {0.1, 1.0, 7.0}) {
        EXPECT_NEAR(phi(SystemModel(E(2.5), 1.0, E(1), E(3)), t), 1.0, 1e-14);
    }
    EXPECT_THROW((void)phi(weibull2(), 0.0), DomainError);
}

// Properties.

TEST(SystemProperty, ConvexFormOfDenominator) {
    gen::for_all(21, 200, [](gen::Gen& g) {
        const auto m = g.model();
        const double mu1 = m.mu(Downtime::repair);
        const double dmu = m.delta_mu();
        for (int i = 0; i < 10; ++i) {
            const double T = g.log_uniform(1e-3, 10.0) * m.main_mean();
            const double s = survival(m.main(), T);
            const double subtractive = mu1 - dmu * s;
            const double convex = cycle_failure_prob(m, T) / m.standby_rate();
            ASSERT_LE(std::abs(subtractive - convex), 1e-12 * convex)
                << to_string(m.main()) << " T=" << T;
        }
    });
}

TEST(SystemProperty, PhiFormsAgree) {
    gen::for_all(22, 150, [](gen::Gen& g) {
        const auto m = g.model();
        const auto& x = m.main();
        const double a = m.main_mean();
        const double horizon = survival_quantile(x, 1e-6);
        for (int i = 0; i < 10; ++i) {
            const double t = g.uniform(1e-3, 1.0) * horizon;
            const double second = a * hazard(x, t) - mrl_slope(x, t) * survival(x, t);
            const double first = phi(m, t);
            ASSERT_NEAR(first, second, std::max(1e-8, 1e-6 * std::abs(first)))
                << to_string(x) << " t=" << t;
        }
    });
}

TEST(SystemProperty, HugeTimeMatchesNoMaintenance) {
    gen::for_all(23, 100, [](gen::Gen& g) {
        const auto m = g.model();
        const double T = survival_quantile(m.main(), 1e-13);
        EXPECT_LE(rel_diff(mttf(m, T), mttf_no_pm(m)), 1e-6) << to_string(m.main());
    });
}

TEST(SystemProperty, StandbyOverlapIsExpectedDowntimeSurvival) {
    // lambda mu_j = E[S_Yj(X2)] with X2 ~ Exp(lambda); 4 standard errors.
    gen::for_all(24, 12, [](gen::Gen& g) {
        const double lam = g.log_uniform(0.1, 3.0);
        const auto y = g.distribution(1);
        std::exponential_distribution<double> standby(lam);
        const int n = 200'000;
        double sum = 0.0, sum_sq = 0.0;
        for (int i = 0; i < n; ++i) {
            const double v = survival(y, standby(g.engine()));
            sum += v;
            sum_sq += v * v;
        }
        const double est = sum / n;
        const double se = std::sqrt((sum_sq / n - est * est) / (n - 1));
        EXPECT_LE(std::abs(lam * standby_overlap_mean(lam, y) - est), 4 * se + 1e-12)
            << to_string(y) << " lambda=" << lam;
    });
}
