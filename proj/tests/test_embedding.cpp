#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "frechet_jl/frechet_jl.hpp"
#include "test_support.hpp"

using namespace frechet_jl;

TEST(TargetDimension, PinnedValues) {
    EXPECT_EQ(target_dimension(2922, 15, 0.5), 86u);
    EXPECT_EQ(target_dimension(6, 2205, 0.2), 475u);
    EXPECT_EQ(target_dimension(2, 1, 0.999), 2u);
    EXPECT_EQ(target_dimension(20, 20, 0.2), 300u);
    EXPECT_EQ(target_dimension(20, 20, 0.35), 98u);
    EXPECT_EQ(target_dimension(20, 20, 0.5), 48u);
    EXPECT_EQ(target_dimension(6, 500, 0.5), 65u);
    EXPECT_EQ(target_dimension(6, 500, 0.5, 1.0), 33u);
}

TEST(TargetDimension, RejectsBadInput) {
    EXPECT_THROW(target_dimension(10, 10, 0.0), InvalidEpsilon);
    EXPECT_THROW(target_dimension(10, 10, 1.0), InvalidEpsilon);
    EXPECT_THROW(target_dimension(1, 1, 0.5), ValidationError);
}

TEST(Gaussian, DeterministicPerSeed) {
    const auto a = gaussian_projection(30, 7, 99);
    const auto b = gaussian_projection(30, 7, 99);
    const auto c = gaussian_projection(30, 7, 100);
    EXPECT_TRUE(std::equal(a.entries().begin(), a.entries().end(), b.entries().begin()));
    EXPECT_FALSE(std::equal(a.entries().begin(), a.entries().end(), c.entries().begin()));
    EXPECT_EQ(a.kind(), ProjectionKind::gaussian);
}

TEST(Gaussian, EntryStatistics) {
    const auto p = gaussian_projection(1000, 100, 7);
    double sum = 0.0;
    for (double x : p.entries()) sum += x;
    const double n = static_cast<double>(p.entries().size());
    const double mean = sum / n;
    double var = 0.0;
    for (double x : p.entries()) var += (x - mean) * (x - mean);
    var /= n - 1;
    EXPECT_LT(std::abs(mean), 0.004);
    EXPECT_NEAR(var, 0.01, 0.001);
}

TEST(Gaussian, SingleRow) {
    const auto p = gaussian_projection(12, 1, 4);
    EXPECT_EQ(p.target_dim(), 1u);
    EXPECT_EQ(p.source_dim(), 12u);
    const Curve c({std::vector<double>(12, 1.0), std::vector<double>(12, 2.0)});
    const Curve e = embed_curve(c, p);
    EXPECT_EQ(e.dimension(), 1u);
    EXPECT_EQ(e.size(), 2u);
}

TEST(Embed, IdentityAndZero) {
    Rng rng(1);
    const Curve c = fjl_test::random_curve(rng, 9, 4);
    EXPECT_EQ(embed_curve(c, ProjectionMatrix::identity(4)), c);

    const ProjectionMatrix zero(3, 4, std::vector<double>(12, 0.0));
    const Curve e = embed_curve(c, zero);
    EXPECT_EQ(e.size(), c.size());
    for (double x : e.coordinates()) EXPECT_EQ(x, 0.0);
    EXPECT_EQ(frechet_distance(e, embed_curve(fjl_test::random_curve(rng, 3, 4), zero)), 0.0);

    EXPECT_THROW(embed_curve(c, ProjectionMatrix::identity(3)), DimensionMismatch);
}

TEST(Embed, PreservesShapeAtScale) {
    const CurveSet set = simplex_curves(1, 2205, 600, 1.0, 2);
    const auto p = gaussian_projection(600, 40, 3);
    const Curve e = embed_curve(set[0], p);
    EXPECT_EQ(e.size(), 2205u);
    EXPECT_EQ(e.dimension(), 40u);
}

TEST(Bounds, Examples) {
    const auto zero = distortion_bounds(0.0, 0.5, 1.0);
    EXPECT_EQ(zero.lower, 0.0);
    EXPECT_DOUBLE_EQ(zero.upper, 1.0);

    const auto pair = distortion_bounds(std::sqrt(5.0), 0.25, std::sqrt(6.0));
    EXPECT_EQ(pair.lower, 0.0);
    EXPECT_NEAR(pair.upper, 3.2882366094914764, 1e-14);

    for (double df : {0.5, 2.0, 100.0}) {
        const auto b = distortion_bounds(df, 1e-12, 3.0);
        EXPECT_NEAR(b.lower, df, 1e-6 * df);
        EXPECT_NEAR(b.upper, df, 1e-6 * df);
    }
}

TEST(Distortion, IdenticalCurves) {
    const Curve c({{0, 0, 0}, {1, 2, 3}});
    const auto recs = measure_distortion(CurveSet({c, c}), gaussian_projection(3, 2, 0), 0.5);
    ASSERT_EQ(recs.size(), 1u);
    EXPECT_EQ(recs[0].original, 0.0);
    EXPECT_EQ(recs[0].embedded, 0.0);
    EXPECT_EQ(recs[0].relative_error, 0.0);
}

TEST(Distortion, TranslatedPairStaysInsideBounds) {
    Rng rng(12);
    const Curve c = fjl_test::random_curve(rng, 10, 200);
    std::vector<double> t(200);
    for (double& x : t) x = 0.2 * rng.normal();
    const CurveSet set({c, c.translated(t)});
    const double eps = 0.5;
    const std::size_t target = target_dimension(2, 10, eps);
    std::size_t inside = 0;
    const std::size_t reps = 40;
    for (std::uint64_t seed = 0; seed < reps; ++seed) {
        const auto recs = measure_distortion(set, gaussian_projection(200, target, seed), eps);
        inside += recs.at(0).within_bounds();
    }
    EXPECT_GE(inside, reps * 9 / 10);
}

TEST(Distortion, HugeSegmentsStayWithinBounds) {
    const auto [p, q] = additive_error_pair(1e16, 50);
    const auto proj = gaussian_projection(50, target_dimension(1, 5, 0.25), 7);
    const auto recs = measure_distortion(CurveSet({p, q}), proj, 0.25);
    EXPECT_TRUE(std::isfinite(recs.at(0).embedded));
    EXPECT_NEAR(recs.at(0).original, std::sqrt(5.0), 1e-6);
    EXPECT_TRUE(recs.at(0).within_bounds());
}

TEST(Pca, PlanarDataKeepsDistances) {
    Rng rng(31);
    // Vertices on the plane spanned by u and v inside R^5, shifted off the origin.
    const std::vector<double> u{1, 2, 0, -1, 0.5}, v{0, 1, 1, 1, -2}, o{3, -1, 2, 0, 1};
    std::vector<Curve> curves;
    for (int c = 0; c < 4; ++c) {
        std::vector<Point> pts;
        for (int i = 0; i < 6; ++i) {
            const double a = rng.normal(), b = rng.normal();
            Point p(5);
            for (int k = 0; k < 5; ++k) p[k] = o[k] + a * u[k] + b * v[k];
            pts.push_back(p);
        }
        curves.emplace_back(pts);
    }
    const CurveSet set(curves);
    for (std::size_t target : {2u, 5u}) {
        const auto proj = pca_projection(set, target);
        EXPECT_EQ(proj.kind(), ProjectionKind::pca);
        const CurveSet e = embed_curveset(set, proj);
        for (std::size_t a = 0; a < set.size(); ++a)
            for (std::size_t i = 0; i < 6; ++i)
                for (std::size_t j = 0; j < 6; ++j) {
                    const double before = distance(set[a].vertex(i), set[0].vertex(j));
                    const double after = distance(e[a].vertex(i), e[0].vertex(j));
                    EXPECT_NEAR(after, before, 1e-6 * std::max(before, 1.0));
                }
    }
    EXPECT_THROW(pca_projection(set, 6), InsufficientData);
    EXPECT_THROW(pca_projection(CurveSet({Curve({{0, 0, 0}, {1, 1, 1}})}), 3), InsufficientData);
}
