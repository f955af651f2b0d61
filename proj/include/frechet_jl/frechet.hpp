#ifndef FRECHET_JL_FRECHET_HPP
#define FRECHET_JL_FRECHET_HPP

/*
 * Continuous Frechet distance between polygonal curves.
 *
 *   FreeSpaceGeometry   epsilon-independent per-boundary data: for every
 *                       (edge, vertex) pair the foot of the perpendicular on
 *                       the edge's line and the squared perpendicular distance.
 *   FreeSpaceDiagram    free and reachable boundary intervals for one epsilon;
 *                       reachability is propagated along anti-diagonal
 *                       wavefronts, optionally in parallel.
 *   frechet_distance    bisection on epsilon between the endpoint lower bound
 *                       and the discrete Frechet upper bound, the latter first
 *                       halved while the decision still succeeds.
 *
 * Cell (i, j) of the diagram spans edge i of tau (horizontal) and edge j of
 * sigma (vertical). Its left boundary is vertex i of tau against edge j of
 * sigma; its bottom boundary is edge i of tau against vertex j of sigma.
 */

#include <algorithm>
#include <barrier>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "frechet_jl/curve.hpp"
#include "frechet_jl/parallel.hpp"

namespace frechet_jl {

/// Closed sub-interval of [0, 1]; empty when lo > hi.
struct Interval {
    double lo = 1.0;
    double hi = 0.0;

    bool empty() const noexcept { return !(lo <= hi); }
    bool contains(double x) const noexcept { return lo <= x && x <= hi; }
    bool operator==(const Interval&) const = default;
};

/// Projection of a point onto the line through an edge a -> b.
struct BoundaryGeometry {
    double foot = 0.0;         // lambda of the closest point on the line
    double dist_sq = 0.0;      // squared distance from the point to that line
    double edge_len_sq = 0.0;  // |b - a|^2, zero for a degenerate edge
};

inline BoundaryGeometry boundary_geometry(std::span<const double> a, std::span<const double> b,
                                          std::span<const double> c) {
    const std::size_t d = a.size();
    double ee = 0.0;
    double ce = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        const double e = b[k] - a[k];
        ee += e * e;
        ce += (c[k] - a[k]) * e;
    }
    if (ee == 0.0) return {0.0, squared_distance(a, c), 0.0};

    const double foot = ce / ee;
    // Anchor the foot at the nearer endpoint so lambda = 0 or 1 reproduces it exactly.
    double h = 0.0;
    if (foot <= 0.5) {
        for (std::size_t k = 0; k < d; ++k) {
            const double t = a[k] + foot * (b[k] - a[k]) - c[k];
            h += t * t;
        }
    } else {
        const double back = foot - 1.0;
        for (std::size_t k = 0; k < d; ++k) {
            const double t = b[k] + back * (b[k] - a[k]) - c[k];
            h += t * t;
        }
    }
    return {foot, h, ee};
}

/// {lambda in [0,1] : |(1-lambda) a + lambda b - c| <= eps}, with eps given squared.
inline Interval free_interval(const BoundaryGeometry& g, double eps_sq) {
    if (!(g.dist_sq <= eps_sq)) return {};
    if (g.edge_len_sq == 0.0) return {0.0, 1.0};
    const double w = std::sqrt((eps_sq - g.dist_sq) / g.edge_len_sq);
    const Interval r{std::max(0.0, g.foot - w), std::min(1.0, g.foot + w)};
    return r.empty() ? Interval{} : r;
}

namespace detail {

// Min over monotone couplings of the max coupled squared distance, rolled over one row.
template <class DistSq>
double discrete_coupling(std::size_t p, std::size_t q, DistSq&& dist_sq) {
    std::vector<double> row(q);
    for (std::size_t i = 0; i < p; ++i) {
        double diag = 0.0;
        for (std::size_t j = 0; j < q; ++j) {
            const double up = row[j];
            double best;
            if (i == 0 && j == 0)
                best = 0.0;
            else if (i == 0)
                best = row[j - 1];
            else if (j == 0)
                best = up;
            else
                best = std::min({up, row[j - 1], diag});
            diag = up;
            row[j] = std::max(best, dist_sq(i, j));
        }
    }
    return std::sqrt(row[q - 1]);
}

}  // namespace detail

class FreeSpaceGeometry {
public:
    FreeSpaceGeometry(const Curve& tau, const Curve& sigma, std::size_t threads = 1)
        : p_(tau.size()), q_(sigma.size()) {
        if (tau.dimension() != sigma.dimension())
            throw DimensionMismatch(tau.dimension(), sigma.dimension());
        vv_.resize(p_ * q_);
        if (p_ > 1) bottom_.resize((p_ - 1) * q_);
        if (q_ > 1) left_.resize(p_ * (q_ - 1));

        parallel_for(p_, threads, [&](std::size_t i) {
            const auto ti = tau.vertex(i);
            for (std::size_t j = 0; j < q_; ++j) vv_[i * q_ + j] = squared_distance(ti, sigma.vertex(j));
            if (i + 1 < p_) {
                const auto tn = tau.vertex(i + 1);
                for (std::size_t j = 0; j < q_; ++j)
                    bottom_[i * q_ + j] = boundary_geometry(ti, tn, sigma.vertex(j));
            }
            for (std::size_t j = 0; j + 1 < q_; ++j)
                left_[i * (q_ - 1) + j] = boundary_geometry(sigma.vertex(j), sigma.vertex(j + 1), ti);
        });
    }

    std::size_t rows() const noexcept { return p_; }
    std::size_t cols() const noexcept { return q_; }

    double vertex_distance_sq(std::size_t i, std::size_t j) const { return vv_[i * q_ + j]; }
    const BoundaryGeometry& bottom(std::size_t i, std::size_t j) const { return bottom_[i * q_ + j]; }
    const BoundaryGeometry& left(std::size_t i, std::size_t j) const { return left_[i * (q_ - 1) + j]; }

    /// Discrete Frechet distance over the same vertex sequences.
    double discrete_distance() const {
        return detail::discrete_coupling(p_, q_, [this](std::size_t i, std::size_t j) {
            return vertex_distance_sq(i, j);
        });
    }

    /// max(|tau_first - sigma_first|, |tau_last - sigma_last|)
    double endpoint_distance() const {
        return std::sqrt(std::max(vertex_distance_sq(0, 0), vertex_distance_sq(p_ - 1, q_ - 1)));
    }

private:
    std::size_t p_;
    std::size_t q_;
    std::vector<double> vv_;
    std::vector<BoundaryGeometry> bottom_;
    std::vector<BoundaryGeometry> left_;
};

class FreeSpaceDiagram {
public:
    /// Diagrams with at least this many cells propagate reachability on several threads.
    static constexpr std::size_t kParallelCells = std::size_t{1} << 15;

    explicit FreeSpaceDiagram(const FreeSpaceGeometry& geometry) : g_(&geometry) {
        const std::size_t p = g_->rows();
        const std::size_t q = g_->cols();
        if (p > 1 && q > 1) {
            free_left_.resize(p * (q - 1));
            reach_left_.resize(p * (q - 1));
            free_bottom_.resize((p - 1) * q);
            reach_bottom_.resize((p - 1) * q);
        }
    }

    /// Fills the diagram for `eps` and returns whether d_F <= eps.
    bool compute(double eps, std::size_t threads = 1) {
        if (!(eps >= 0.0)) throw ValidationError("epsilon must be non-negative");
        eps_ = eps;
        const double eps_sq = eps * eps;
        const std::size_t p = g_->rows();
        const std::size_t q = g_->cols();

        if (p == 1 || q == 1) {
            // One side is a point: every vertex of the other curve must be within eps.
            reachable_ = true;
            for (std::size_t i = 0; i < p; ++i)
                for (std::size_t j = 0; j < q; ++j)
                    if (!(g_->vertex_distance_sq(i, j) <= eps_sq)) reachable_ = false;
            return reachable_;
        }

        parallel_for(p, threads, [&](std::size_t i) {
            for (std::size_t j = 0; j + 1 < q; ++j)
                free_left_[i * (q - 1) + j] = free_interval(g_->left(i, j), eps_sq);
            if (i + 1 < p)
                for (std::size_t j = 0; j < q; ++j)
                    free_bottom_[i * q + j] = free_interval(g_->bottom(i, j), eps_sq);
        });
        std::fill(reach_left_.begin(), reach_left_.end(), Interval{});
        std::fill(reach_bottom_.begin(), reach_bottom_.end(), Interval{});

        reachable_ = false;
        if (!(g_->vertex_distance_sq(0, 0) <= eps_sq) || !(g_->vertex_distance_sq(p - 1, q - 1) <= eps_sq))
            return reachable_;

        // Outer boundaries: reachable while the free space stays connected to the origin.
        for (std::size_t j = 0; j + 1 < q; ++j) {
            const Interval f = free_left(0, j);
            const bool connected = j == 0 || reach_left(0, j - 1).contains(1.0);
            if (!connected || !f.contains(0.0)) break;
            reach_left_[j] = f;
        }
        for (std::size_t i = 0; i + 1 < p; ++i) {
            const Interval f = free_bottom(i, 0);
            const bool connected = i == 0 || reach_bottom(i - 1, 0).contains(1.0);
            if (!connected || !f.contains(0.0)) break;
            reach_bottom_[i * q] = f;
        }

        const std::size_t cells = (p - 1) * (q - 1);
        if (threads > 1 && cells >= kParallelCells)
            propagate_parallel(threads);
        else
            for (std::size_t k = 0; k + 3 < p + q; ++k) propagate_diagonal(k, 0, 1);

        reachable_ = reach_left(p - 1, q - 2).contains(1.0) || reach_bottom(p - 2, q - 1).contains(1.0);
        return reachable_;
    }

    double epsilon() const noexcept { return eps_; }
    bool reachable() const noexcept { return reachable_; }

    std::size_t rows() const noexcept { return g_->rows(); }
    std::size_t cols() const noexcept { return g_->cols(); }

    // left boundaries: i in [0, rows), j in [0, cols - 1)
    Interval free_left(std::size_t i, std::size_t j) const { return free_left_[i * (cols() - 1) + j]; }
    Interval reach_left(std::size_t i, std::size_t j) const { return reach_left_[i * (cols() - 1) + j]; }
    // bottom boundaries: i in [0, rows - 1), j in [0, cols)
    Interval free_bottom(std::size_t i, std::size_t j) const { return free_bottom_[i * cols() + j]; }
    Interval reach_bottom(std::size_t i, std::size_t j) const { return reach_bottom_[i * cols() + j]; }

private:
    // Cells (i, k - i) of anti-diagonal k, restricted to this worker's share.
    void propagate_diagonal(std::size_t k, std::size_t worker, std::size_t workers) {
        const std::size_t p = rows();
        const std::size_t q = cols();
        const std::size_t i_min = k > q - 2 ? k - (q - 2) : 0;
        const std::size_t i_max = std::min(k, p - 2);
        if (i_min > i_max) return;
        const std::size_t len = i_max - i_min + 1;
        const std::size_t begin = i_min + len * worker / workers;
        const std::size_t end = i_min + len * (worker + 1) / workers;
        for (std::size_t i = begin; i < end; ++i) propagate_cell(i, k - i);
    }

    void propagate_cell(std::size_t i, std::size_t j) {
        const std::size_t q = cols();
        const Interval from_left = reach_left(i, j);
        const Interval from_bottom = reach_bottom(i, j);

        const Interval right = free_left(i + 1, j);
        Interval& right_reach = reach_left_[(i + 1) * (q - 1) + j];
        if (!from_bottom.empty()) {
            right_reach = right;
        } else if (!from_left.empty()) {
            const Interval r{std::max(right.lo, from_left.lo), right.hi};
            right_reach = r.empty() ? Interval{} : r;
        }

        const Interval top = free_bottom(i, j + 1);
        Interval& top_reach = reach_bottom_[i * q + j + 1];
        if (!from_left.empty()) {
            top_reach = top;
        } else if (!from_bottom.empty()) {
            const Interval r{std::max(top.lo, from_bottom.lo), top.hi};
            top_reach = r.empty() ? Interval{} : r;
        }
    }

    void propagate_parallel(std::size_t threads) {
        const std::size_t diagonals = rows() + cols() - 3;
        const std::size_t workers = std::min(threads, rows() - 1);
        std::barrier sync(static_cast<std::ptrdiff_t>(workers));
        auto run = [&](std::size_t w) {
            for (std::size_t k = 0; k < diagonals; ++k) {
                propagate_diagonal(k, w, workers);
                sync.arrive_and_wait();
            }
        };
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run, w);
        run(0);
    }

    const FreeSpaceGeometry* g_;
    double eps_ = 0.0;
    bool reachable_ = false;
    std::vector<Interval> free_left_;
    std::vector<Interval> reach_left_;
    std::vector<Interval> free_bottom_;
    std::vector<Interval> reach_bottom_;
};

/// Bisection tolerance and worker count for distance computations.
struct DistanceQuery {
    /// Absolute tolerance; unset means 1e-9 times the initial upper bound, floored at 1e-12.
    /// The initial upper bound is bracketed to within a factor 2 of the distance.
    std::optional<double> tolerance;
    std::size_t threads = 1;

    double resolve_tolerance(double upper_bound) const {
        if (tolerance) {
            if (!(*tolerance > 0.0)) throw ValidationError("tolerance must be positive");
            return *tolerance;
        }
        return std::max(1e-9 * upper_bound, 1e-12);
    }
};

namespace detail {

inline void check_same_dimension(const Curve& a, const Curve& b) {
    if (a.dimension() != b.dimension()) throw DimensionMismatch(a.dimension(), b.dimension());
}

// Canonical argument order so symmetric calls run the identical computation.
inline std::pair<const Curve*, const Curve*> canonical(const Curve& a, const Curve& b) {
    return a.canonical_compare(b) > 0 ? std::pair{&b, &a} : std::pair{&a, &b};
}

}  // namespace detail

inline bool decide_frechet(const Curve& tau, const Curve& sigma, double eps, std::size_t threads = 1) {
    detail::check_same_dimension(tau, sigma);
    const auto [a, b] = detail::canonical(tau, sigma);
    const FreeSpaceGeometry geometry(*a, *b, threads);
    FreeSpaceDiagram diagram(geometry);
    return diagram.compute(eps, threads);
}

inline double discrete_frechet(const Curve& tau, const Curve& sigma) {
    detail::check_same_dimension(tau, sigma);
    return detail::discrete_coupling(tau.size(), sigma.size(), [&](std::size_t i, std::size_t j) {
        return squared_distance(tau.vertex(i), sigma.vertex(j));
    });
}

inline double frechet_distance(const Curve& tau, const Curve& sigma, const DistanceQuery& query = {}) {
    detail::check_same_dimension(tau, sigma);
    const auto [a, b] = detail::canonical(tau, sigma);

    if (a->size() == 1 || b->size() == 1) {
        const Curve& point = a->size() == 1 ? *a : *b;
        const Curve& other = a->size() == 1 ? *b : *a;
        double worst = 0.0;
        for (std::size_t j = 0; j < other.size(); ++j)
            worst = std::max(worst, squared_distance(point.vertex(0), other.vertex(j)));
        return std::sqrt(worst);
    }

    const FreeSpaceGeometry geometry(*a, *b, query.threads);
    double lo = geometry.endpoint_distance();
    double hi = geometry.discrete_distance();
    if (hi - lo <= query.resolve_tolerance(hi)) return hi;

    FreeSpaceDiagram diagram(geometry);
    if (diagram.compute(lo, query.threads)) return lo;

    // The discrete bound can exceed d_F by up to the longest edge, so halve it
    // until it is within a factor 2 before fixing the tolerance.
    while (hi > 1e-12) {
        const double half = 0.5 * hi;
        if (half <= lo) break;
        if (!diagram.compute(half, query.threads)) {
            lo = half;
            break;
        }
        hi = half;
    }
    const double tol = query.resolve_tolerance(hi);
    while (hi - lo > tol) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        if (diagram.compute(mid, query.threads))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

/// Dense symmetric matrix of pairwise distances.
class DistanceMatrix {
public:
    explicit DistanceMatrix(std::size_t n = 0) : n_(n), values_(n * n, 0.0) {}

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double v) {
        values_[i * n_ + j] = v;
        values_[j * n_ + i] = v;
    }
    std::span<const double> row(std::size_t i) const { return {values_.data() + i * n_, n_}; }
    bool operator==(const DistanceMatrix&) const = default;

private:
    std::size_t n_;
    std::vector<double> values_;
};

/*
 * All pairwise distances. Upper triangle computed once and mirrored. Pairs
 * are spread across workers when there are enough of them; otherwise the
 * workers go into each distance computation. Either way the values are
 * independent of the worker count.
 */
inline DistanceMatrix distance_matrix(const CurveSet& set, const DistanceQuery& query = {}) {
    if (set.empty()) throw EmptySet();
    set.validate();
    const std::size_t n = set.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    const bool across_pairs = pairs.size() >= query.threads;
    DistanceQuery inner = query;
    inner.threads = across_pairs ? 1 : query.threads;

    DistanceMatrix m(n);
    std::vector<double> values(pairs.size());
    parallel_for(pairs.size(), across_pairs ? query.threads : 1, [&](std::size_t k) {
        const auto [i, j] = pairs[k];
        try {
            values[k] = frechet_distance(set[i], set[j], inner);
        } catch (const std::exception& e) {
            throw PairError(i, j, e.what());
        }
    });
    for (std::size_t k = 0; k < pairs.size(); ++k) m.set(pairs[k].first, pairs[k].second, values[k]);
    return m;
}

}  // namespace frechet_jl

#endif
