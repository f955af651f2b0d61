#ifndef FRECHET_JL_GENERATORS_HPP
#define FRECHET_JL_GENERATORS_HPP

// Synthetic instance families with known distance structure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frechet_jl/curve.hpp"
#include "frechet_jl/rng.hpp"

namespace frechet_jl {

/// Non-empty sequence of bits.
class BitString {
public:
    explicit BitString(std::vector<bool> bits) : bits_(std::move(bits)) {
        if (bits_.empty()) throw ValidationError("bit string is empty");
    }

    /// Parses a string of '0' and '1' characters.
    static BitString parse(std::string_view text) {
        std::vector<bool> bits;
        for (char ch : text) {
            if (ch != '0' && ch != '1') throw ValidationError("bit string may only contain 0 and 1");
            bits.push_back(ch == '1');
        }
        return BitString(std::move(bits));
    }

    static BitString random(std::size_t length, Rng& rng) {
        std::vector<bool> bits(length);
        for (std::size_t i = 0; i < length; ++i) bits[i] = (rng.next() >> 63) != 0;
        return BitString(std::move(bits));
    }

    std::size_t size() const noexcept { return bits_.size(); }
    bool operator[](std::size_t i) const { return bits_[i]; }
    bool operator==(const BitString&) const = default;

    std::string str() const {
        std::string s;
        for (bool b : bits_) s.push_back(b ? '1' : '0');
        return s;
    }

    /// True when some position holds a 1 in both strings.
    bool intersects(const BitString& other) const {
        for (std::size_t i = 0; i < std::min(size(), other.size()); ++i)
            if (bits_[i] && other.bits_[i]) return true;
        return false;
    }

private:
    std::vector<bool> bits_;
};

/*
 * n curves of m vertices whose vertices are uniform in the corner simplex
 * {x >= 0, sum x <= 1} of R^d, scaled by `scale`. Each vertex is d+1 i.i.d.
 * exponentials normalized to sum 1 with the last coordinate dropped.
 */
inline CurveSet simplex_curves(std::size_t n, std::size_t m, std::size_t d, double scale, std::uint64_t seed) {
    if (n == 0 || m == 0 || d == 0) throw ValidationError("simplex_curves needs n, m, d >= 1");
    if (!(scale > 0.0)) throw ValidationError("scale must be positive");
    Rng rng(seed);
    std::vector<Curve> curves;
    std::vector<std::string> labels;
    std::vector<double> e(d + 1);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<double> coords;
        coords.reserve(m * d);
        for (std::size_t v = 0; v < m; ++v) {
            double total = 0.0;
            for (double& x : e) {
                x = rng.exponential();
                total += x;
            }
            for (std::size_t k = 0; k < d; ++k) coords.push_back(scale * (e[k] / total));
        }
        curves.push_back(Curve::from_flat(d, std::move(coords)));
        char name[32];
        std::snprintf(name, sizeof name, "curve_%05zu.csv", c);
        labels.emplace_back(name);
    }
    return CurveSet(std::move(curves), std::move(labels));
}

/*
 * p = (0,...,0) -> (alpha,0,...,0)
 * q = (0,1,0,...) -> (alpha/2,2,1,0,...) -> (alpha,1,0,...)
 * d_F(p, q) = sqrt(5) for every alpha, while the edges grow with alpha.
 */
inline std::pair<Curve, Curve> additive_error_pair(double alpha_len, std::size_t d) {
    if (d < 3) throw DimensionTooSmall(3, d);
    if (!(alpha_len > 0.0)) throw ValidationError("alpha must be positive");
    auto pt = [d](double x, double y, double z) {
        Point v(d, 0.0);
        v[0] = x;
        v[1] = y;
        v[2] = z;
        return v;
    };
    Curve p({pt(0, 0, 0), pt(alpha_len, 0, 0)});
    Curve q({pt(0, 1, 0), pt(alpha_len / 2, 2, 1), pt(alpha_len, 1, 0)});
    return {std::move(p), std::move(q)};
}

/*
 * 1-d curve with four vertices per bit (i is 1-based):
 *   0 -> 2i, 2i+2/3, 2i+4/3, 2i+2   (straight line)
 *   1 -> 2i, 2i+2,   2i,     2i+2   (zigzag)
 * Equal strings give identical curves; any differing bit forces d_F >= 1.
 */
inline Curve equality_gadget(const BitString& bits) {
    std::vector<double> coords;
    coords.reserve(4 * bits.size());
    for (std::size_t k = 0; k < bits.size(); ++k) {
        const double base = 2.0 * static_cast<double>(k + 1);
        if (bits[k])
            coords.insert(coords.end(), {base, base + 2.0, base, base + 2.0});
        else
            coords.insert(coords.end(), {base, base + 2.0 / 3.0, base + 4.0 / 3.0, base + 2.0});
    }
    return Curve::from_flat(1, std::move(coords));
}

enum class GadgetSide { alice, bob };

/*
 * 2-d curve with four vertices per bit (i is 1-based):
 *   0     -> (4i,0), (4i,0), (4i+4,0), (4i+4,0)        (straight, duplicates kept)
 *   1     -> (4i,0), (4i,h), (4i+4,h), (4i+4,0)        (notch)
 * with h = +1 for alice and -1 for bob. Intersecting supports give d_F >= 2,
 * disjoint ones d_F < sqrt(2).
 */
inline Curve disjointness_gadget(const BitString& bits, GadgetSide side) {
    const double h = side == GadgetSide::alice ? 1.0 : -1.0;
    std::vector<double> coords;
    coords.reserve(8 * bits.size());
    for (std::size_t k = 0; k < bits.size(); ++k) {
        const double x = 4.0 * static_cast<double>(k + 1);
        const double y = bits[k] ? h : 0.0;
        coords.insert(coords.end(), {x, 0.0, x, y, x + 4.0, y, x + 4.0, 0.0});
    }
    return Curve::from_flat(2, std::move(coords));
}

/// A set built from translated copies of one base curve, with the optimal median planted.
struct PlantedMedianSet {
    CurveSet curves;
    std::size_t center_index = 0;
    std::size_t outliers = 0;  // distance > far_radius from the center
    std::size_t medium = 0;    // in (close_radius, far_radius]
    std::size_t close = 0;     // within close_radius, center included
    double optimal_cost = 0.0;
    double far_radius = 0.0;    // r1 = cost / (gamma n)
    double close_radius = 0.0;  // r2 = 2 eps cost / n
};

/*
 * Translates a random base curve by vectors of planted norm. In units of
 * cost/n: close curves get norms in [0, eps), medium ones norms in the middle
 * half of (2 eps, 1/gamma], and the ceil((1-eps) gamma n) outliers norms
 * R (1 + u), u in [0, 1/4), with R solved so the total cost is exactly n.
 * Directions come in antipodal pairs (plus one zero-sum triple if needed), so
 * the unit vectors towards the other curves sum to zero and the untranslated
 * base curve at index 0 is a geometric median, hence the optimal center.
 * Distances between translates equal the norm of the translation difference.
 */
inline PlantedMedianSet median_test_set(std::size_t n, std::size_t m, std::size_t d, double gamma, double eps,
                                        std::uint64_t seed) {
    if (!(gamma > 0.0 && gamma < 0.5)) throw ValidationError("gamma must lie in (0, 1/2)");
    if (!(eps > 0.0 && eps < 1.0)) throw InvalidEpsilon(eps);
    if (n < 3) throw ValidationError("median_test_set needs n >= 3");
    if (m == 0) throw ValidationError("median_test_set needs m >= 1");
    if (d < 2) throw DimensionTooSmall(2, d);

    const double nd = static_cast<double>(n);
    const auto far_count = static_cast<std::size_t>(std::ceil((1.0 - eps) * gamma * nd));
    if (far_count + 1 > n) throw ValidationError("too many outliers requested");
    const double r1 = 1.0 / gamma;  // radii in units of cost / n
    const double r2 = 2.0 * eps;

    Rng rng(seed);
    std::vector<double> close_u(n), far_u(far_count);
    for (double& u : close_u) u = rng.uniform();
    for (double& u : far_u) u = 0.25 * rng.uniform();
    std::vector<double> medium_u(n);
    for (double& u : medium_u) u = rng.uniform();

    // Largest medium population that still leaves the outliers beyond r1.
    std::size_t medium = (n - 1 - far_count) / 4;
    std::vector<double> norms;
    double far_base = 0.0;
    while (true) {
        const std::size_t close = n - 1 - far_count - medium;  // excluding the center
        norms.assign(1, 0.0);
        double used = 0.0;
        for (std::size_t k = 0; k < close; ++k) {
            norms.push_back(eps * close_u[k]);
            used += norms.back();
        }
        const double lo = r2 + 0.25 * (r1 - r2);
        const double hi = r1 - 0.25 * (r1 - r2);
        for (std::size_t k = 0; k < medium; ++k) {
            norms.push_back(lo + (hi - lo) * medium_u[k]);
            used += norms.back();
        }
        double weight = 0.0;
        for (double u : far_u) weight += 1.0 + u;
        far_base = far_count ? (nd - used) / weight : 0.0;
        if (far_count == 0 || far_base > 1.01 * r1) break;
        if (medium == 0) throw ValidationError("outlier premise cannot be planted for these parameters");
        --medium;
    }
    for (double u : far_u) norms.push_back(far_base * (1.0 + u));

    // Unit directions summing to zero.
    auto random_unit = [&] {
        Point v(d);
        double s = 0.0;
        do {
            s = 0.0;
            for (double& x : v) {
                x = rng.normal();
                s += x * x;
            }
        } while (s == 0.0);
        const double inv = 1.0 / std::sqrt(s);
        for (double& x : v) x *= inv;
        return v;
    };
    std::vector<Point> dirs;
    std::size_t remaining = n - 1;
    if (remaining % 2 == 1) {
        Point u = random_unit();
        Point w = random_unit();
        double dot = 0.0;
        for (std::size_t k = 0; k < d; ++k) dot += u[k] * w[k];
        double s = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            w[k] -= dot * u[k];
            s += w[k] * w[k];
        }
        for (double& x : w) x /= std::sqrt(s);
        const double c = std::sqrt(3.0) / 2.0;
        Point a(d), b(d);
        for (std::size_t k = 0; k < d; ++k) {
            a[k] = -0.5 * u[k] + c * w[k];
            b[k] = -0.5 * u[k] - c * w[k];
        }
        dirs.push_back(std::move(u));
        dirs.push_back(std::move(a));
        dirs.push_back(std::move(b));
        remaining -= 3;
    }
    for (; remaining > 0; remaining -= 2) {
        Point u = random_unit();
        Point v = u;
        for (double& x : v) x = -x;
        dirs.push_back(std::move(u));
        dirs.push_back(std::move(v));
    }
    for (std::size_t k = dirs.size(); k > 1; --k) std::swap(dirs[k - 1], dirs[rng.index(k)]);

    const Curve base = simplex_curves(1, m, d, 1.0, rng.next()).curves.front();
    std::vector<Curve> curves;
    std::vector<std::string> labels;
    curves.push_back(base);
    for (std::size_t k = 1; k < n; ++k) {
        Point t = dirs[k - 1];
        for (double& x : t) x *= norms[k];
        curves.push_back(base.translated(t));
    }
    // Shuffle everything except the center so classes are interleaved.
    std::vector<std::size_t> order(n - 1);
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k + 1;
    for (std::size_t k = order.size(); k > 1; --k) std::swap(order[k - 1], order[rng.index(k)]);
    std::vector<Curve> shuffled{curves.front()};
    for (std::size_t k : order) shuffled.push_back(curves[k]);
    for (std::size_t k = 0; k < n; ++k) {
        char name[32];
        std::snprintf(name, sizeof name, "curve_%05zu.csv", k);
        labels.emplace_back(name);
    }

    PlantedMedianSet out;
    out.curves = CurveSet(std::move(shuffled), std::move(labels));
    out.center_index = 0;
    out.outliers = far_count;
    out.medium = medium;
    out.close = n - far_count - medium;
    double total = 0.0;
    for (double v : norms) total += v;
    out.optimal_cost = total;
    out.far_radius = total / (gamma * nd);
    out.close_radius = 2.0 * eps * total / nd;
    return out;
}

}  // namespace frechet_jl

#endif
