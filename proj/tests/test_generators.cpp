#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "frechet_jl/frechet_jl.hpp"

using namespace frechet_jl;

TEST(BitStrings, ParseAndIntersect) {
    const auto a = BitString::parse("101");
    EXPECT_EQ(a.size(), 3u);
    EXPECT_EQ(a.str(), "101");
    EXPECT_FALSE(a.intersects(BitString::parse("010")));
    EXPECT_TRUE(a.intersects(BitString::parse("001")));
    EXPECT_THROW(BitString::parse("10a"), ValidationError);
}

TEST(Simplex, MembershipAndDeterminism) {
    const CurveSet a = simplex_curves(5, 8, 6, 3.0, 42);
    const CurveSet b = simplex_curves(5, 8, 6, 3.0, 42);
    EXPECT_EQ(a.curves, b.curves);
    EXPECT_EQ(a.label(0), "curve_00000.csv");
    for (const auto& c : a.curves) {
        EXPECT_EQ(c.size(), 8u);
        EXPECT_EQ(c.dimension(), 6u);
        for (std::size_t i = 0; i < c.size(); ++i) {
            double sum = 0.0;
            for (double x : c.vertex(i)) {
                EXPECT_GE(x, 0.0);
                EXPECT_LE(x, 3.0);
                sum += x;
            }
            EXPECT_LE(sum, 3.0 * (1 + 1e-12));
        }
    }
}

TEST(Simplex, CoordinateMeans) {
    const std::size_t d = 50;
    const CurveSet set = simplex_curves(100, 10, d, 1.0, 6);
    std::vector<double> mean(d, 0.0);
    for (const auto& c : set.curves)
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t k = 0; k < d; ++k) mean[k] += c.vertex(i)[k] / 1000.0;
    for (double m : mean) EXPECT_NEAR(m, 1.0 / 51.0, 0.2 / 51.0);
}

TEST(AdditivePair, StatedEqualities) {
    for (double a : {1.0, 2.0, 10.0, 1e3}) {
        const auto [p, q] = additive_error_pair(a, 4);
        EXPECT_EQ(p.dimension(), 4u);
        EXPECT_EQ(q.size(), 3u);
        EXPECT_NEAR(distance(q.vertex(0), q.vertex(1)), std::sqrt(a * a / 4 + 2), 1e-12 * a);
        EXPECT_NEAR(frechet_distance(p, q), std::sqrt(5.0), 1e-6);
    }
    const auto [p, q] = additive_error_pair(2.0, 3);
    EXPECT_DOUBLE_EQ(distance(p.vertex(0), p.vertex(1)), 2.0);
    EXPECT_DOUBLE_EQ(distance(q.vertex(0), q.vertex(2)), 2.0);
    EXPECT_THROW(additive_error_pair(1.0, 2), DimensionTooSmall);
}

TEST(EqualityGadget, Vertices) {
    const Curve c = equality_gadget(BitString::parse("10"));
    const std::vector<double> expected{2, 4, 2, 4, 4, 14.0 / 3, 16.0 / 3, 6};
    ASSERT_EQ(c.size(), expected.size());
    EXPECT_EQ(c.dimension(), 1u);
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_DOUBLE_EQ(c.vertex(i)[0], expected[i]);
}

TEST(EqualityGadget, DistanceClaims) {
    const auto g = [](const char* s) { return equality_gadget(BitString::parse(s)); };
    EXPECT_EQ(frechet_distance(g("1101"), g("1101")), 0.0);
    EXPECT_GE(frechet_distance(g("1"), g("0")), 1.0 - 1e-6);
    EXPECT_GE(frechet_distance(g("0110"), g("0100")), 1.0 - 1e-6);
}

TEST(DisjointnessGadget, Vertices) {
    const Curve a = disjointness_gadget(BitString::parse("10"), GadgetSide::alice);
    const Curve b = disjointness_gadget(BitString::parse("10"), GadgetSide::bob);
    ASSERT_EQ(a.size(), 8u);
    EXPECT_EQ(a.vertex(1)[1], 1.0);
    EXPECT_EQ(b.vertex(1)[1], -1.0);
    EXPECT_EQ(a.vertex(4)[0], 8.0);
    EXPECT_EQ(a.vertex(5)[0], 8.0);
    EXPECT_EQ(a.vertex(5)[1], 0.0);
}

TEST(DisjointnessGadget, DistanceClaims) {
    const auto d = [](const char* x, const char* y) {
        return frechet_distance(disjointness_gadget(BitString::parse(x), GadgetSide::alice),
                                disjointness_gadget(BitString::parse(y), GadgetSide::bob));
    };
    EXPECT_GE(d("1", "1"), 2.0 - 1e-6);
    EXPECT_LT(d("1", "0"), std::sqrt(2.0));
    EXPECT_LT(d("101", "010"), std::sqrt(2.0));
    EXPECT_GE(d("101", "001"), 2.0 - 1e-6);
}

TEST(MedianTestSet, OutlierCount) {
    const auto s = median_test_set(48, 5, 3, 0.375, 0.25, 1);
    EXPECT_EQ(s.outliers, 14u);
    EXPECT_EQ(s.curves.size(), 48u);
    EXPECT_EQ(s.outliers + s.medium + s.close, 48u);
}

TEST(MedianTestSet, PlantedRadiiAndOptimality) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto s = median_test_set(49, 4, 3, 0.375, 0.5, seed);
        const auto m = distance_matrix(s.curves);
        std::size_t far = 0;
        std::size_t close = 0;
        for (std::size_t i = 0; i < 49; ++i) {
            far += m(0, i) > s.far_radius;
            close += m(0, i) <= s.close_radius;
        }
        EXPECT_EQ(far, s.outliers);
        EXPECT_GE(close, s.close);
        const auto r = exhaustive_median(s.curves);
        EXPECT_EQ(r.center_index, s.center_index);
        EXPECT_NEAR(r.cost, s.optimal_cost, 1e-6 * s.optimal_cost);
    }
    EXPECT_THROW(median_test_set(2, 4, 3, 0.375, 0.5, 0), ValidationError);
    EXPECT_THROW(median_test_set(10, 4, 1, 0.375, 0.5, 0), DimensionTooSmall);
}
