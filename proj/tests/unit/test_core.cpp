#include <gtest/gtest.h>

#include <cmath>

#include "mostad/core.hpp"

using namespace mostad;

TEST(Bounds, RejectsInvertedOrEqualLimits)
{
    EXPECT_THROW(Bounds({0.0, 1.0}, {1.0, 1.0}), ContractViolation);
    EXPECT_THROW(Bounds({0.0}, {1.0, 2.0}), ContractViolation);
    EXPECT_NO_THROW(Bounds({0.0, -1.0}, {1.0, 2.0}));
}

TEST(ClampToBounds, Examples)
{
    const auto unit = Bounds::uniform(2, 0.0, 1.0);
    EXPECT_EQ(clamp_to_bounds({0.5, 0.5}, unit), (DecisionVector{0.5, 0.5}));
    EXPECT_EQ(clamp_to_bounds({-0.3, 1.7}, unit), (DecisionVector{0.0, 1.0}));
    EXPECT_EQ(clamp_to_bounds({2.0, 3.5, 0.9}, Bounds::uniform(3, 1.0, 4.0)), (DecisionVector{2.0, 3.5, 1.0}));
}

TEST(ClampToBounds, DimensionMismatchThrows)
{
    EXPECT_THROW(clamp_to_bounds({0.1, 0.2, 0.3}, Bounds::uniform(2, 0.0, 1.0)), ContractViolation);
}

TEST(ClampToBounds, Idempotent)
{
    RngStream rng(3);
    const auto b = Bounds({-1.0, 0.0, 2.0}, {1.0, 5.0, 3.0});
    for (int t = 0; t < 1000; ++t) {
        DecisionVector x{rng.uniform(-5, 5), rng.uniform(-5, 10), rng.uniform(0, 6)};
        const auto once = clamp_to_bounds(x, b);
        EXPECT_TRUE(b.contains(once));
        EXPECT_EQ(clamp_to_bounds(once, b), once);
    }
}

TEST(Rng, UniformRangeAndDeterminism)
{
    RngStream a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        const double v = uniform(a, 0.0, 1.0);
        EXPECT_GE(v, 0.0);
        EXPECT_LT(v, 1.0);
        EXPECT_EQ(v, uniform(b, 0.0, 1.0));
    }
    EXPECT_THROW(uniform(a, 1.0, 1.0), ContractViolation);
    EXPECT_THROW(uniform(a, 2.0, 1.0), ContractViolation);
}

TEST(Rng, UniformMean)
{
    RngStream rng(7);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) sum += uniform(rng, 0.0, 1.0);
    EXPECT_NEAR(sum / n, 0.5, 0.01);
}

TEST(Rng, GaussianMoments)
{
    RngStream rng(11);
    const int n = 100000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double v = gaussian(rng, 0.0, 1.0);
        sum += v;
        sq += v * v;
    }
    const double mean = sum / n;
    EXPECT_NEAR(mean, 0.0, 0.02);
    EXPECT_NEAR(std::sqrt(sq / n - mean * mean), 1.0, 0.02);
}

TEST(Rng, GaussianDegenerateSpreadAndErrors)
{
    RngStream a(5), b(5);
    const double v = gaussian(a, 5.0, 1e-9);
    EXPECT_NEAR(v, 5.0, 1e-6);
    EXPECT_EQ(v, gaussian(b, 5.0, 1e-9));
    EXPECT_THROW(gaussian(a, 0.0, 0.0), ContractViolation);
    EXPECT_THROW(gaussian(a, 0.0, -1.0), ContractViolation);
}

TEST(Rng, DerivedSeedsDiffer)
{
    EXPECT_NE(derive_seed(0, 0), derive_seed(0, 1));
    EXPECT_NE(derive_seed(0, 0), derive_seed(1, 0));
    EXPECT_EQ(derive_seed(9, 4), derive_seed(9, 4));
}

TEST(EvaluationCounter, Counts)
{
    EvaluationCounter c;
    c.add();
    c.add(4);
    EXPECT_EQ(c.count(), 5u);
}
