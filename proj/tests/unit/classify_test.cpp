#include <gtest/gtest.h>

#include "reference_values.hpp"
#include "standby/distribution.hpp"

using namespace standby;

namespace {
Distribution E(double rate) { return Distribution::exponential(rate); }
Distribution W(double scale, double shape) { return Distribution::weibull(scale, shape); }
}  // namespace

TEST(Classify, IncreasingWeibull) {
    const auto s = classify_hazard_shape(W(1, 3));
    EXPECT_EQ(s.kind, HazardKind::ifr);
    EXPECT_FALSE(s.constant);
    EXPECT_EQ(s.sign_changes, 0);
    EXPECT_EQ(s.grid_points, 4096u);
}

TEST(Classify, DecreasingWeibull) {
    EXPECT_EQ(classify_hazard_shape(W(2, 0.6)).kind, HazardKind::dfr);
}

TEST(Classify, ExponentialIsConstantIfr) {
    const auto s = classify_hazard_shape(E(4));
    EXPECT_EQ(s.kind, HazardKind::ifr);
    EXPECT_TRUE(s.constant);
    EXPECT_FALSE(s.change_point.has_value());
}

TEST(Classify, MinOfWeibullsIsBathtub) {
    const auto s = classify_hazard_shape(Distribution::min_of({W(1, 0.5), W(1, 3)}));
    ASSERT_EQ(s.kind, HazardKind::bfr);
    ASSERT_TRUE(s.change_point.has_value());
    EXPECT_GT(*s.change_point, 0.0);
    // r'(t) = -t^(-3/2)/4 + 6t vanishes at t = 24^(-2/5).
    EXPECT_NEAR(*s.change_point, ref::bfr_hazard_trough, 1e-8);
    EXPECT_EQ(s.sign_changes, 1);
}

TEST(Classify, MaxOfExponentialsIsUpsideDownBathtub) {
    const auto s = classify_hazard_shape(Distribution::max_of({E(1), E(2)}));
    ASSERT_EQ(s.kind, HazardKind::ubfr);
    ASSERT_TRUE(s.change_point.has_value());
    EXPECT_NEAR(*s.change_point, ref::max12_hazard_peak, 1e-8);
}

TEST(Classify, TwoTurnsIsUnclassified) {
    // Rises, falls towards rate 1, then the wear-out term takes over.
    const auto d = Distribution::min_of({Distribution::max_of({E(1), E(2)}), W(6, 8)});
    const auto s = classify_hazard_shape(d);
    EXPECT_EQ(s.kind, HazardKind::unclassified);
    EXPECT_EQ(s.sign_changes, 2);
    EXPECT_FALSE(s.change_point.has_value());
}

TEST(Classify, HorizonAndGridAreConfigurable) {
    ClassifyOptions options;
    options.horizon = 5.0;
    options.grid_points = 512;
    const auto s = classify_hazard_shape(Distribution::max_of({E(1), E(2)}), options);
    EXPECT_EQ(s.kind, HazardKind::ubfr);
    EXPECT_DOUBLE_EQ(s.horizon, 5.0);
    EXPECT_DOUBLE_EQ(s.grid_start, 5e-9);
    EXPECT_EQ(s.grid_points, 512u);
    // Bisection refines to 1e-9 * horizon whatever the grid spacing.
    EXPECT_NEAR(*s.change_point, ref::max12_hazard_peak, 1e-7);
}

TEST(Classify, HorizonBeforeTurnSeesMonotoneHazard) {
    ClassifyOptions options;
    options.horizon = 1.0;
    EXPECT_EQ(classify_hazard_shape(Distribution::max_of({E(1), E(2)}), options).kind,
              HazardKind::ifr);
}
