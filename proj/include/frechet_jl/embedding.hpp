#ifndef FRECHET_JL_EMBEDDING_HPP
#define FRECHET_JL_EMBEDDING_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "frechet_jl/curve.hpp"
#include "frechet_jl/frechet.hpp"
#include "frechet_jl/parallel.hpp"
#include "frechet_jl/rng.hpp"

namespace frechet_jl {

enum class ProjectionKind { gaussian, pca, given };

/*
 * Linear map R^d -> R^d' applied vertex-wise. Rows are stored row-major.
 * PCA maps subtract the global vertex mean first; for the other kinds the
 * center is empty.
 */
class ProjectionMatrix {
public:
    ProjectionMatrix(std::size_t target_dim, std::size_t source_dim, std::vector<double> entries,
                     ProjectionKind kind = ProjectionKind::given, std::uint64_t seed = 0,
                     std::vector<double> center = {})
        : rows_(target_dim),
          cols_(source_dim),
          entries_(std::move(entries)),
          center_(std::move(center)),
          kind_(kind),
          seed_(seed) {
        if (rows_ == 0 || cols_ == 0) throw ValidationError("projection dimensions must be positive");
        if (entries_.size() != rows_ * cols_) throw DimensionMismatch(rows_ * cols_, entries_.size());
        if (!center_.empty() && center_.size() != cols_) throw DimensionMismatch(cols_, center_.size());
        for (double v : entries_)
            if (!std::isfinite(v)) throw ValidationError("projection entry is not finite");
    }

    static ProjectionMatrix identity(std::size_t d) {
        std::vector<double> e(d * d, 0.0);
        for (std::size_t i = 0; i < d; ++i) e[i * d + i] = 1.0;
        return {d, d, std::move(e)};
    }

    std::size_t target_dim() const noexcept { return rows_; }
    std::size_t source_dim() const noexcept { return cols_; }
    ProjectionKind kind() const noexcept { return kind_; }
    std::uint64_t seed() const noexcept { return seed_; }
    std::span<const double> center() const noexcept { return center_; }

    double operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const double> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    std::span<const double> entries() const noexcept { return entries_; }

    /// Writes P (v - center) into out (size target_dim).
    void apply(std::span<const double> v, std::span<double> out) const {
        if (v.size() != cols_) throw DimensionMismatch(cols_, v.size());
        for (std::size_t r = 0; r < rows_; ++r) {
            const double* w = entries_.data() + r * cols_;
            double s = 0.0;
            if (center_.empty())
                for (std::size_t c = 0; c < cols_; ++c) s += w[c] * v[c];
            else
                for (std::size_t c = 0; c < cols_; ++c) s += w[c] * (v[c] - center_[c]);
            out[r] = s;
        }
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> entries_;
    std::vector<double> center_;
    ProjectionKind kind_;
    std::uint64_t seed_;
};

/// ceil(constant * eps^-2 * ln(n m)); the empirical constant defaults to 2.
inline std::size_t target_dimension(std::size_t n, std::size_t m, double eps, double constant = 2.0) {
    if (!(eps > 0.0 && eps < 1.0)) throw InvalidEpsilon(eps);
    if (n * m < 2) throw ValidationError("target_dimension needs n*m >= 2");
    if (!(constant > 0.0)) throw ValidationError("dimension constant must be positive");
    const double nm = static_cast<double>(n) * static_cast<double>(m);
    return static_cast<std::size_t>(std::ceil(constant * std::log(nm) / (eps * eps)));
}

/// d' x d matrix of i.i.d. N(0, 1/d') entries drawn row-major from `seed`.
inline ProjectionMatrix gaussian_projection(std::size_t source_dim, std::size_t target_dim,
                                            std::uint64_t seed) {
    if (source_dim == 0 || target_dim == 0) throw ValidationError("projection dimensions must be positive");
    Rng rng(seed);
    const double scale = 1.0 / std::sqrt(static_cast<double>(target_dim));
    std::vector<double> e(source_dim * target_dim);
    for (double& x : e) x = scale * rng.normal();
    return {target_dim, source_dim, std::move(e), ProjectionKind::gaussian, seed};
}

inline Curve embed_curve(const Curve& c, const ProjectionMatrix& p) {
    if (c.dimension() != p.source_dim()) throw DimensionMismatch(p.source_dim(), c.dimension());
    const std::size_t out_dim = p.target_dim();
    std::vector<double> coords(c.size() * out_dim);
    for (std::size_t i = 0; i < c.size(); ++i)
        p.apply(c.vertex(i), std::span<double>(coords.data() + i * out_dim, out_dim));
    return Curve::from_flat(out_dim, std::move(coords));
}

inline CurveSet embed_curveset(const CurveSet& set, const ProjectionMatrix& p, std::size_t threads = 1) {
    std::vector<std::optional<Curve>> slots(set.size());
    parallel_for(set.size(), threads, [&](std::size_t i) { slots[i] = embed_curve(set[i], p); });
    std::vector<Curve> out;
    out.reserve(set.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return CurveSet(std::move(out), set.labels);
}

struct DistortionBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/*
 * Envelope for the Frechet distance after a (1 +- eps) JL embedding of all
 * vertices; alpha_pair is the longer of the two curves' longest edges.
 * The lower radicand can go negative, in which case the bound is 0.
 */
inline DistortionBounds distortion_bounds(double frechet, double eps, double alpha_pair) {
    const double f2 = frechet * frechet;
    const double additive = 2.0 * eps * alpha_pair * alpha_pair;
    const double upper = std::sqrt((1.0 + eps) * (1.0 + eps) * f2 + additive);
    const double lower = std::sqrt(std::max(0.0, (1.0 - eps) * (1.0 - eps) * f2 - additive));
    return {lower, upper};
}

struct DistortionRecord {
    std::size_t first = 0;
    std::size_t second = 0;
    double original = 0.0;
    double embedded = 0.0;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    double relative_error = 0.0;
    double alpha_pair = 0.0;

    bool within_bounds() const noexcept { return lower_bound <= embedded && embedded <= upper_bound; }
};

inline double relative_error(double original, double embedded) {
    return original > 0.0 ? std::abs(embedded - original) / original : embedded;
}

/// One record per unordered pair, given the distances before projection.
inline std::vector<DistortionRecord> measure_distortion(const CurveSet& set, const DistanceMatrix& original,
                                                        const ProjectionMatrix& p, double eps,
                                                        const DistanceQuery& query = {}) {
    if (original.size() != set.size()) throw DimensionMismatch(set.size(), original.size());
    if (set.dimension() != p.source_dim()) throw DimensionMismatch(p.source_dim(), set.dimension());
    const CurveSet embedded = embed_curveset(set, p, query.threads);
    const DistanceMatrix after = distance_matrix(embedded, query);

    std::vector<double> alphas(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) alphas[i] = alpha(set[i]);

    std::vector<DistortionRecord> records;
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            DistortionRecord r;
            r.first = i;
            r.second = j;
            r.original = original(i, j);
            r.embedded = after(i, j);
            r.alpha_pair = std::max(alphas[i], alphas[j]);
            const auto b = distortion_bounds(r.original, eps, r.alpha_pair);
            r.lower_bound = b.lower;
            r.upper_bound = b.upper;
            r.relative_error = relative_error(r.original, r.embedded);
            records.push_back(r);
        }
    }
    return records;
}

inline std::vector<DistortionRecord> measure_distortion(const CurveSet& set, const ProjectionMatrix& p,
                                                        double eps, const DistanceQuery& query = {}) {
    return measure_distortion(set, distance_matrix(set, query), p, eps, query);
}

/*
 * Top principal directions of all vertices of all curves, centered by the
 * global vertex mean. Uses a thin SVD of the centered vertex matrix; each
 * direction's sign is fixed so its largest-magnitude component is positive.
 */
inline ProjectionMatrix pca_projection(const CurveSet& set, std::size_t target_dim) {
    if (set.empty()) throw EmptySet();
    const std::size_t d = set.dimension();
    const std::size_t n = set.total_vertices();
    if (target_dim == 0) throw ValidationError("target dimension must be positive");
    if (target_dim > d) throw InsufficientData("target dimension exceeds source dimension");
    if (n < target_dim) throw InsufficientData("fewer vertices than target dimension");

    Eigen::MatrixXd x(n, d);
    Eigen::Index r = 0;
    for (const auto& c : set.curves)
        for (std::size_t i = 0; i < c.size(); ++i, ++r)
            x.row(r) = Eigen::Map<const Eigen::RowVectorXd>(c.vertex(i).data(), static_cast<Eigen::Index>(d));
    const Eigen::RowVectorXd mean = x.colwise().mean();
    x.rowwise() -= mean;

    Eigen::BDCSVD<Eigen::MatrixXd> svd(x, Eigen::ComputeThinV);
    const Eigen::MatrixXd& v = svd.matrixV();

    std::vector<double> entries(target_dim * d);
    for (std::size_t k = 0; k < target_dim; ++k) {
        Eigen::VectorXd dir = v.col(static_cast<Eigen::Index>(k));
        Eigen::Index arg = 0;
        dir.cwiseAbs().maxCoeff(&arg);
        if (dir(arg) < 0) dir = -dir;
        for (std::size_t c = 0; c < d; ++c) entries[k * d + c] = dir(static_cast<Eigen::Index>(c));
    }
    std::vector<double> center(mean.data(), mean.data() + d);
    return {target_dim, d, std::move(entries), ProjectionKind::pca, 0, std::move(center)};
}

}  // namespace frechet_jl

#endif
