#ifndef FRECHET_JL_CURVE_HPP
#define FRECHET_JL_CURVE_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "frechet_jl/errors.hpp"

namespace frechet_jl {

using Point = std::vector<double>;

/*
 * Polygonal curve: an ordered list of vertices in R^d, linearly interpolated.
 * Coordinates live in one row-major buffer. Consecutive duplicates and
 * collinear triples are allowed.
 */
class Curve {
public:
    /// Validates and copies; throws EmptyCurve, DimensionMismatch, NonFiniteCoordinate.
    explicit Curve(const std::vector<Point>& vertices) {
        if (vertices.empty()) throw EmptyCurve();
        dim_ = vertices.front().size();
        if (dim_ == 0) throw DimensionMismatch(1, 0);
        coords_.reserve(vertices.size() * dim_);
        for (const auto& v : vertices) {
            if (v.size() != dim_) throw DimensionMismatch(dim_, v.size());
            coords_.insert(coords_.end(), v.begin(), v.end());
        }
        check_finite();
    }

    /// Builds from a flat row-major buffer of `dimension`-sized rows.
    static Curve from_flat(std::size_t dimension, std::vector<double> coords) {
        if (dimension == 0) throw DimensionMismatch(1, 0);
        if (coords.empty()) throw EmptyCurve();
        if (coords.size() % dimension != 0)
            throw DimensionMismatch(dimension, coords.size() % dimension);
        Curve c;
        c.dim_ = dimension;
        c.coords_ = std::move(coords);
        c.check_finite();
        return c;
    }

    std::size_t size() const noexcept { return coords_.size() / dim_; }
    std::size_t dimension() const noexcept { return dim_; }

    std::span<const double> vertex(std::size_t i) const noexcept {
        return {coords_.data() + i * dim_, dim_};
    }
    std::span<const double> front() const noexcept { return vertex(0); }
    std::span<const double> back() const noexcept { return vertex(size() - 1); }

    std::span<const double> coordinates() const noexcept { return coords_; }

    std::vector<Point> vertices() const {
        std::vector<Point> out;
        out.reserve(size());
        for (std::size_t i = 0; i < size(); ++i) out.emplace_back(vertex(i).begin(), vertex(i).end());
        return out;
    }

    /// Copy shifted by `offset`.
    Curve translated(std::span<const double> offset) const {
        if (offset.size() != dim_) throw DimensionMismatch(dim_, offset.size());
        auto coords = coords_;
        for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += offset[k % dim_];
        return from_flat(dim_, std::move(coords));
    }

    bool operator==(const Curve& other) const = default;

    /// Total order used to canonicalize argument order in symmetric computations.
    std::strong_ordering canonical_compare(const Curve& other) const noexcept {
        if (auto c = size() <=> other.size(); c != 0) return c;
        if (auto c = dim_ <=> other.dim_; c != 0) return c;
        for (std::size_t k = 0; k < coords_.size(); ++k) {
            const double a = coords_[k];
            const double b = other.coords_[k];
            if (a < b) return std::strong_ordering::less;
            if (b < a) return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

private:
    Curve() = default;

    void check_finite() const {
        for (std::size_t k = 0; k < coords_.size(); ++k)
            if (!std::isfinite(coords_[k])) throw NonFiniteCoordinate(k / dim_, k % dim_);
    }

    std::size_t dim_ = 0;
    std::vector<double> coords_;
};

inline Curve validate_curve(const std::vector<Point>& vertices) { return Curve(vertices); }

/// Curves of one ambient dimension, optionally labelled (file names for directory input).
struct CurveSet {
    std::vector<Curve> curves;
    std::vector<std::string> labels;

    CurveSet() = default;
    explicit CurveSet(std::vector<Curve> cs, std::vector<std::string> ls = {})
        : curves(std::move(cs)), labels(std::move(ls)) {
        validate();
    }

    std::size_t size() const noexcept { return curves.size(); }
    bool empty() const noexcept { return curves.empty(); }
    const Curve& operator[](std::size_t i) const { return curves[i]; }

    std::size_t dimension() const { return curves.empty() ? 0 : curves.front().dimension(); }

    std::size_t total_vertices() const {
        std::size_t n = 0;
        for (const auto& c : curves) n += c.size();
        return n;
    }

    std::string label(std::size_t i) const {
        return i < labels.size() ? labels[i] : std::to_string(i);
    }

    void validate() const {
        if (!labels.empty() && labels.size() != curves.size())
            throw ValidationError("label count does not match curve count");
        for (const auto& c : curves)
            if (c.dimension() != dimension()) throw DimensionMismatch(dimension(), c.dimension());
    }
};

// ---------------------------------------------------------------------------
// elementary geometry

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double t = a[k] - b[k];
        s += t * t;
    }
    return s;
}

inline double distance(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(squared_distance(a, b));
}

/// Longest edge of the curve; 0 for a single vertex.
inline double alpha(const Curve& c) {
    double longest = 0.0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        longest = std::max(longest, squared_distance(c.vertex(i), c.vertex(i + 1)));
    return std::sqrt(longest);
}

inline double alpha(const Curve& a, const Curve& b) { return std::max(alpha(a), alpha(b)); }

/*
 * Squared distance between p = (1-lp) p1 + lp p2 and q = (1-lq) q1 + lq q2,
 * written purely in terms of the six squared vertex distances.
 */
inline double segment_pair_distance_sq(std::span<const double> p1, std::span<const double> p2,
                                       std::span<const double> q1, std::span<const double> q2,
                                       double lp, double lq) {
    const std::size_t d = p1.size();
    if (p2.size() != d) throw DimensionMismatch(d, p2.size());
    if (q1.size() != d) throw DimensionMismatch(d, q1.size());
    if (q2.size() != d) throw DimensionMismatch(d, q2.size());
    if (!(lp >= 0.0 && lp <= 1.0) || !(lq >= 0.0 && lq <= 1.0))
        throw ValidationError("interpolation parameter outside [0, 1]");

    return -(lp - lp * lp) * squared_distance(p1, p2)
           - (lq - lq * lq) * squared_distance(q1, q2)
           + (1.0 - lp - lq + lp * lq) * squared_distance(p1, q1)
           + (lq - lp * lq) * squared_distance(p1, q2)
           + (lp - lp * lq) * squared_distance(p2, q1)
           + lp * lq * squared_distance(p2, q2);
}

}  // namespace frechet_jl

#endif
