#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "mostad/weights.hpp"

using namespace mostad;

namespace {

void expect_valid(const WeightVector& w)
{
    double s = 0.0;
    for (double v : w) {
        EXPECT_GE(v, 0.0);
        s += v;
    }
    EXPECT_NEAR(s, 1.0, 1e-12);
}

double dist2(const WeightVector& a, const WeightVector& b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
}

} // namespace

TEST(SimplexLattice, TwoObjectivesFourDivisions)
{
    const auto w = simplex_lattice(2, 4);
    const std::vector<WeightVector> expected{{0, 1}, {0.25, 0.75}, {0.5, 0.5}, {0.75, 0.25}, {1, 0}};
    ASSERT_EQ(w.size(), expected.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        EXPECT_NEAR(w[i][0], expected[i][0], 1e-15);
        EXPECT_NEAR(w[i][1], expected[i][1], 1e-15);
    }
}

TEST(SimplexLattice, CornerCaseOneDivision)
{
    const auto w = simplex_lattice(2, 1);
    ASSERT_EQ(w.size(), 2u);
    EXPECT_EQ(w[0], (WeightVector{0, 1}));
    EXPECT_EQ(w[1], (WeightVector{1, 0}));
}

TEST(SimplexLattice, ThreeObjectivesMatchesBruteForce)
{
    const auto w = simplex_lattice(3, 2);
    ASSERT_EQ(w.size(), 6u);
    std::set<std::vector<int>> got;
    for (const auto& v : w) {
        expect_valid(v);
        got.insert({static_cast<int>(std::lround(v[0] * 2)), static_cast<int>(std::lround(v[1] * 2)),
                    static_cast<int>(std::lround(v[2] * 2))});
    }
    std::set<std::vector<int>> brute;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c)
                if (a + b + c == 2) brute.insert({a, b, c});
    EXPECT_EQ(got, brute);
}

TEST(SimplexLattice, CountAndValidity)
{
    for (std::size_t m = 2; m <= 4; ++m) {
        for (std::size_t h = 1; h <= 12; ++h) {
            const auto w = simplex_lattice(m, h);
            EXPECT_EQ(w.size(), lattice_size(m, h));
            for (const auto& v : w) expect_valid(v);
        }
    }
    EXPECT_THROW(simplex_lattice(1, 3), ContractViolation);
    EXPECT_THROW(simplex_lattice(2, 0), ContractViolation);
}

TEST(SimplexLattice, EvenSpacingForTwoObjectives)
{
    const auto w = simplex_lattice(2, 17);
    for (std::size_t i = 1; i < w.size(); ++i) EXPECT_NEAR(w[i][0] - w[i - 1][0], 1.0 / 17.0, 1e-12);
}

TEST(Divisions, SmallestSufficientLattice)
{
    EXPECT_EQ(divisions_for(3, 200), 19u); // C(21,2) = 210
    EXPECT_EQ(lattice_size(3, 19), 210u);
    EXPECT_EQ(lattice_size(3, 18), 190u);
    EXPECT_EQ(divisions_for(2, 200), 199u);
}

TEST(SubsampleWeights, IdentityAndSingle)
{
    RngStream rng(1);
    const auto all = simplex_lattice(3, 4);
    EXPECT_EQ(subsample_weights(all, all.size(), rng), all);
    const auto one = subsample_weights(all, 1, rng);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_NE(std::find(all.begin(), all.end(), one[0]), all.end());
    EXPECT_THROW(subsample_weights(all, all.size() + 1, rng), ContractViolation);
}

TEST(SubsampleWeights, DistinctMembers)
{
    RngStream rng(2);
    const auto all = simplex_lattice(3, 19);
    const auto picked = subsample_weights(all, 200, rng);
    ASSERT_EQ(picked.size(), 200u);
    std::set<WeightVector> unique(picked.begin(), picked.end());
    EXPECT_EQ(unique.size(), 200u);
    for (const auto& w : picked) EXPECT_NE(std::find(all.begin(), all.end(), w), all.end());
}

TEST(GenerateWeights, TwoObjectivesTwoHundredIsTheWholeLattice)
{
    RngStream rng(3);
    const auto w = generate_weights(2, 200, rng);
    EXPECT_EQ(w, simplex_lattice(2, 199));
}

TEST(Neighborhoods, Examples)
{
    const auto w = simplex_lattice(2, 4);
    const auto two = build_neighborhoods(w, 2);
    EXPECT_EQ(two.neighbors[0], (std::vector<std::size_t>{0, 1}));

    const auto self = build_neighborhoods(w, 1);
    for (std::size_t i = 0; i < w.size(); ++i) EXPECT_EQ(self.neighbors[i], (std::vector<std::size_t>{i}));

    const auto all = build_neighborhoods(w, w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto sorted = all.neighbors[i];
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::size_t> expected(w.size());
        std::iota(expected.begin(), expected.end(), std::size_t{0});
        EXPECT_EQ(sorted, expected);
    }
    EXPECT_THROW(build_neighborhoods(w, 6), ContractViolation);
    EXPECT_THROW(build_neighborhoods(w, 0), ContractViolation);
}

TEST(Neighborhoods, SortedByDistanceWithLowerIndexTies)
{
    RngStream rng(9);
    const auto w = generate_weights(3, 100, rng);
    const auto table = build_neighborhoods(w, 15);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto& nb = table.neighbors[i];
        ASSERT_EQ(nb.size(), 15u);
        EXPECT_EQ(nb.front(), i);
        std::set<std::size_t> distinct(nb.begin(), nb.end());
        EXPECT_EQ(distinct.size(), nb.size());
        for (std::size_t k = 2; k < nb.size(); ++k) {
            const double a = dist2(w[i], w[nb[k - 1]]);
            const double b = dist2(w[i], w[nb[k]]);
            EXPECT_TRUE(a < b || (a == b && nb[k - 1] < nb[k]));
        }
        // nothing outside the list is strictly closer than its farthest member
        const double worst = dist2(w[i], w[nb.back()]);
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (std::find(nb.begin(), nb.end(), j) == nb.end()) {
                EXPECT_GE(dist2(w[i], w[j]), worst);
            }
        }
    }
}
