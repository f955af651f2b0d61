#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "frechet_jl/frechet_jl.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace frechet_jl;

namespace {

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("frechet_jl_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST(Curve, ValidatesVertices) {
    const Curve c({{0, 0}, {1, 0}, {1, 0}});
    EXPECT_EQ(c.size(), 3u);
    EXPECT_EQ(c.dimension(), 2u);
    EXPECT_EQ(c.vertex(1)[0], 1.0);

    EXPECT_THROW(Curve(std::vector<Point>{}), EmptyCurve);
    EXPECT_THROW(Curve({{0, 0}, {1}}), DimensionMismatch);
    EXPECT_THROW(Curve({{0, std::nan("")}}), NonFiniteCoordinate);
    EXPECT_THROW(Curve({{0, std::numeric_limits<double>::infinity()}}), NonFiniteCoordinate);
    EXPECT_THROW(Curve::from_flat(2, {1, 2, 3}), DimensionMismatch);
}

TEST(Curve, TranslationAndOrdering) {
    const Curve c({{0, 0}, {1, 2}});
    const std::vector<double> t{3, -1};
    const Curve s = c.translated(t);
    EXPECT_EQ(s.vertex(1)[0], 4.0);
    EXPECT_EQ(s.vertex(1)[1], 1.0);
    EXPECT_TRUE(c.canonical_compare(s) < 0);
    EXPECT_TRUE(s.canonical_compare(c) > 0);
    EXPECT_TRUE(c.canonical_compare(c) == 0);
}

TEST(CurveSet, RejectsMixedDimensions) {
    EXPECT_THROW(CurveSet({Curve({{0, 0}}), Curve({{0, 0, 0}})}), DimensionMismatch);
    const CurveSet s({Curve(std::vector<Point>{{0.0}}), Curve(std::vector<Point>{{1.0}, {2.0}})});
    EXPECT_EQ(s.total_vertices(), 3u);
    EXPECT_EQ(s.label(1), "1");
}

TEST(Geometry, AlphaIsLongestEdge) {
    EXPECT_EQ(alpha(Curve({{0, 0}})), 0.0);
    EXPECT_DOUBLE_EQ(alpha(Curve({{0, 0}, {3, 4}, {3, 5}})), 5.0);
    const auto [p, q] = additive_error_pair(4.0, 3);
    EXPECT_NEAR(alpha(q), std::sqrt(6.0), 1e-15);
    EXPECT_EQ(alpha(p, q), 4.0);
}

TEST(Geometry, SegmentPairEndpoints) {
    const std::vector<double> p1{0, 0}, p2{1, 0}, q1{0, 2}, q2{3, 3};
    EXPECT_DOUBLE_EQ(segment_pair_distance_sq(p1, p2, q1, q2, 0, 0), 4.0);
    EXPECT_DOUBLE_EQ(segment_pair_distance_sq(p1, p2, q1, q2, 1, 1), 13.0);
    EXPECT_THROW(segment_pair_distance_sq(p1, p2, q1, q2, 1.5, 0), ValidationError);
    const std::vector<double> bad{0};
    EXPECT_THROW(segment_pair_distance_sq(p1, bad, q1, q2, 0, 0), DimensionMismatch);
}

TEST(Geometry, SegmentPairMatchesDirectEvaluation) {
    Rng rng(11);
    for (std::size_t d : {1u, 2u, 5u, 10u, 100u}) {
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<double> p1(d), p2(d), q1(d), q2(d);
            for (auto* v : {&p1, &p2, &q1, &q2})
                for (double& x : *v) x = 10.0 * rng.normal();
            const double lp = trial == 0 ? 0.3 : rng.uniform();
            const double lq = trial == 0 ? 0.7 : rng.uniform();
            double direct = 0.0;
            for (std::size_t k = 0; k < d; ++k) {
                const double a = (1 - lp) * p1[k] + lp * p2[k];
                const double b = (1 - lq) * q1[k] + lq * q2[k];
                direct += (a - b) * (a - b);
            }
            const double six = segment_pair_distance_sq(p1, p2, q1, q2, lp, lq);
            EXPECT_NEAR(six, direct, std::max(1e-9 * std::abs(direct), 1e-12)) << "d=" << d;
        }
    }
}

TEST(CsvIo, ParsesSimpleFile) {
    std::istringstream in("0,0\n1,0\n");
    const Curve c = parse_curve_csv(in);
    EXPECT_EQ(c, Curve({{0, 0}, {1, 0}}));
}

TEST(CsvIo, RaggedRowsAreRejected) {
    std::istringstream in("0,0\n1\n");
    EXPECT_THROW(parse_curve_csv(in), DimensionMismatch);
}

TEST(CsvIo, MalformedNumbersAreParseErrors) {
    std::istringstream in("0,0\n1,abc\n");
    EXPECT_THROW(parse_curve_csv(in), ParseError);
    std::istringstream nan_in("0,nan\n");
    EXPECT_THROW(parse_curve_csv(nan_in), ValidationError);
    std::istringstream empty("");
    EXPECT_THROW(parse_curve_csv(empty), EmptyCurve);
}

TEST(CsvIo, RoundTripIsExact) {
    Rng rng(3);
    const Curve c = fjl_test::random_curve(rng, 7, 4, 1e6);
    std::stringstream buf;
    write_curve_csv(buf, c);
    EXPECT_EQ(parse_curve_csv(buf), c);
}

TEST(CsvIo, TransposeSwapsAxes) {
    const Curve c({{1, 2, 3}, {4, 5, 6}});
    const Curve t = transpose(c);
    EXPECT_EQ(t.size(), 3u);
    EXPECT_EQ(t.dimension(), 2u);
    EXPECT_EQ(t.vertex(2)[1], 6.0);
    EXPECT_EQ(transpose(t), c);
}

TEST(CsvIo, DirectoryIsSortedByFilename) {
    const fs::path dir = scratch_dir("dir");
    for (const auto& [name, body] : {std::pair{"b.csv", "1,1\n"}, std::pair{"a.csv", "0,0\n"},
                                     std::pair{"c.csv", "2,2\n3,3\n"}}) {
        std::ofstream(dir / name) << body;
    }
    std::ofstream(dir / "notes.txt") << "ignored";
    const CurveSet set = read_curveset_dir(dir);
    ASSERT_EQ(set.size(), 3u);
    EXPECT_EQ(set.labels, (std::vector<std::string>{"a.csv", "b.csv", "c.csv"}));
    EXPECT_EQ(set[2].size(), 2u);

    const fs::path out = scratch_dir("dir_out");
    write_curveset_dir(set, out);
    const CurveSet back = read_curveset_dir(out);
    EXPECT_EQ(back.labels, set.labels);
    EXPECT_EQ(back.curves, set.curves);
    fs::remove_all(dir);
    fs::remove_all(out);
}

TEST(CsvIo, MissingPathIsIoError) {
    EXPECT_THROW(read_curve_csv("/nonexistent/curve.csv"), IoError);
    EXPECT_THROW(read_curveset_dir("/nonexistent/dir"), IoError);
}
