#ifndef FRECHET_JL_CLUSTERING_HPP
#define FRECHET_JL_CLUSTERING_HPP

/*
 * Discrete 1-median under the Frechet distance: the curve of the input that
 * minimizes the sum of distances to all input curves.
 *
 * sampled_median draws a candidate sample S and an independent witness
 * sample W, then returns the candidate with the smallest distance sum over
 * W. Sample sizes follow the worst-case (2 + eps) guarantee or, when the
 * input has enough far outliers, the (1 + eps) guarantee parametrized by the
 * outlier fraction gamma.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "frechet_jl/curve.hpp"
#include "frechet_jl/frechet.hpp"
#include "frechet_jl/parallel.hpp"
#include "frechet_jl/rng.hpp"

namespace frechet_jl {

enum class MedianMode { worst_case, beyond_worst_case };

struct MedianParams {
    double epsilon = 0.5;
    double delta = 0.25;
    MedianMode mode = MedianMode::worst_case;
    double gamma = 0.375;  // outlier fraction; only read in beyond_worst_case mode
    std::uint64_t seed = 0;
    bool with_replacement = true;

    void validate() const {
        // eps = 1/2 is admitted: the reference parametrization uses it.
        if (!(epsilon > 0.0 && epsilon <= 0.5)) throw InvalidEpsilon(epsilon);
        if (!(delta > 0.0 && delta < 0.5)) throw ValidationError("delta must lie in (0, 1/2)");
        if (mode == MedianMode::beyond_worst_case && !(gamma > 0.0 && gamma < 0.5))
            throw ValidationError("gamma must lie in (0, 1/2)");
    }
};

struct SampleSizes {
    std::size_t candidates = 0;  // l_S
    std::size_t witnesses = 0;   // l_W
};

/*
 * worst case:         l_S = ceil(2 ln(2/delta) / eps)
 * beyond worst case:  l_S = ceil(ln(2/delta) / (1/2 - gamma))
 * both:               l_W = ceil(64 / eps^2 * ln(2 l_S / delta))
 * l_W uses the uncapped l_S; both are capped at n afterwards.
 */
inline SampleSizes sample_sizes(std::size_t n, const MedianParams& p) {
    p.validate();
    const double log_term = std::log(2.0 / p.delta);
    const double ls = p.mode == MedianMode::worst_case ? 2.0 * log_term / p.epsilon
                                                        : log_term / (0.5 - p.gamma);
    const double candidates = std::ceil(ls);
    const double witnesses = std::ceil(64.0 / (p.epsilon * p.epsilon) * std::log(2.0 * candidates / p.delta));
    const auto cap = [n](double v) {
        return v >= static_cast<double>(n) ? n : static_cast<std::size_t>(v);
    };
    return {cap(candidates), cap(witnesses)};
}

struct MedianResult {
    std::size_t center_index = 0;
    double cost = 0.0;          // sum of distances from the center to every curve
    double witness_cost = 0.0;  // sum over the witness sample
    std::size_t candidate_count = 0;
    std::size_t witness_count = 0;
    std::vector<std::size_t> candidate_indices;
    std::vector<std::size_t> witness_indices;
};

inline double median_cost(const CurveSet& set, const Curve& center, const DistanceQuery& query = {}) {
    if (!set.empty() && set.dimension() != center.dimension())
        throw DimensionMismatch(set.dimension(), center.dimension());
    std::vector<double> terms(set.size());
    DistanceQuery inner = query;
    inner.threads = 1;
    parallel_for(set.size(), query.threads,
                 [&](std::size_t i) { terms[i] = frechet_distance(center, set[i], inner); });
    double sum = 0.0;
    for (double t : terms) sum += t;
    return sum;
}

/// Per-curve cost, summed in index order.
inline std::vector<double> row_costs(const DistanceMatrix& m) {
    std::vector<double> costs(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        double sum = 0.0;
        for (double v : m.row(i)) sum += v;
        costs[i] = sum;
    }
    return costs;
}

inline MedianResult exhaustive_median(const CurveSet& set, const DistanceQuery& query = {}) {
    if (set.empty()) throw EmptySet();
    const auto costs = row_costs(distance_matrix(set, query));
    const std::size_t best = static_cast<std::size_t>(std::min_element(costs.begin(), costs.end()) - costs.begin());

    MedianResult r;
    r.center_index = best;
    r.cost = costs[best];
    r.witness_cost = costs[best];
    r.candidate_indices.resize(set.size());
    std::iota(r.candidate_indices.begin(), r.candidate_indices.end(), std::size_t{0});
    r.witness_indices = r.candidate_indices;
    r.candidate_count = r.witness_count = set.size();
    return r;
}

/// `count` uniform indices in [0, n); without replacement requires count <= n.
inline std::vector<std::size_t> draw_indices(Rng& rng, std::size_t n, std::size_t count, bool with_replacement) {
    std::vector<std::size_t> out;
    out.reserve(count);
    if (with_replacement) {
        for (std::size_t k = 0; k < count; ++k) out.push_back(rng.index(n));
        return out;
    }
    if (count > n) throw ValidationError("sample larger than population without replacement");
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t k = 0; k < count; ++k) {
        std::swap(pool[k], pool[k + rng.index(n - k)]);
        out.push_back(pool[k]);
    }
    return out;
}

inline MedianResult sampled_median(const CurveSet& set, const MedianParams& params,
                                   const DistanceQuery& query = {}) {
    if (set.empty()) throw EmptySet();
    set.validate();
    const std::size_t n = set.size();
    const SampleSizes sizes = sample_sizes(n, params);

    // All randomness is consumed here, before any parallel work.
    Rng rng(params.seed);
    MedianResult r;
    r.candidate_indices = draw_indices(rng, n, sizes.candidates, params.with_replacement);
    r.witness_indices = draw_indices(rng, n, sizes.witnesses, params.with_replacement);
    r.candidate_count = r.candidate_indices.size();
    r.witness_count = r.witness_indices.size();

    std::vector<std::size_t> cands = r.candidate_indices;
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<std::size_t> wits = r.witness_indices;
    std::sort(wits.begin(), wits.end());
    wits.erase(std::unique(wits.begin(), wits.end()), wits.end());

    // Distinct unordered pairs actually needed.
    std::map<std::pair<std::size_t, std::size_t>, double> dist;
    for (std::size_t s : cands)
        for (std::size_t w : wits)
            if (s != w) dist.emplace(std::minmax(s, w), 0.0);
    std::vector<std::pair<const std::pair<std::size_t, std::size_t>, double>*> slots;
    slots.reserve(dist.size());
    for (auto& kv : dist) slots.push_back(&kv);

    DistanceQuery inner = query;
    inner.threads = 1;
    parallel_for(slots.size(), query.threads, [&](std::size_t k) {
        const auto [i, j] = slots[k]->first;
        try {
            slots[k]->second = frechet_distance(set[i], set[j], inner);
        } catch (const std::exception& e) {
            throw PairError(i, j, e.what());
        }
    });

    double best_cost = std::numeric_limits<double>::infinity();
    std::size_t best = cands.front();
    for (std::size_t s : cands) {  // ascending, so ties keep the smallest index
        double sum = 0.0;
        for (std::size_t w : r.witness_indices)
            if (w != s) sum += dist.at(std::minmax(s, w));
        if (sum < best_cost) {
            best_cost = sum;
            best = s;
        }
    }
    r.center_index = best;
    r.witness_cost = best_cost;
    r.cost = median_cost(set, set[best], query);
    return r;
}

// ---------------------------------------------------------------------------
// witness tail check

struct TailCheckParams {
    double epsilon = 0.5;
    std::size_t witness_size = 1;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    bool with_replacement = true;
};

struct TailCheckResult {
    std::size_t worse_index = 0;   // tau: full cost > (1 + eps) * cost(sigma)
    std::size_t better_index = 0;  // sigma
    double worse_cost = 0.0;
    double better_cost = 0.0;
    std::size_t failures = 0;  // trials where tau's witness cost <= sigma's
    std::size_t trials = 0;
    double rate = 0.0;
    double bound = 0.0;  // exp(-eps^2 |W| / 64)
};

/*
 * Empirical rate at which a uniform witness sample ranks a strictly worse
 * curve at least as good as a better one. sigma is the cheapest curve and
 * tau the cheapest curve that is still worse by more than a (1 + eps)
 * factor, i.e. the hardest eligible pair.
 */
inline TailCheckResult witness_tail_check(const CurveSet& set, const TailCheckParams& params,
                                          const DistanceQuery& query = {}) {
    if (set.size() < 2) throw ValidationError("witness tail check needs at least two curves");
    if (!(params.epsilon > 0.0 && params.epsilon <= 1.0)) throw InvalidEpsilon(params.epsilon);
    if (params.witness_size == 0 || params.trials == 0)
        throw ValidationError("witness size and trial count must be positive");

    const DistanceMatrix m = distance_matrix(set, query);
    const auto costs = row_costs(m);
    const std::size_t n = set.size();

    TailCheckResult r;
    r.better_index = static_cast<std::size_t>(std::min_element(costs.begin(), costs.end()) - costs.begin());
    r.better_cost = costs[r.better_index];
    bool found = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (costs[i] > (1.0 + params.epsilon) * r.better_cost && (!found || costs[i] < r.worse_cost)) {
            r.worse_index = i;
            r.worse_cost = costs[i];
            found = true;
        }
    }
    if (!found) throw NoEligiblePair();

    Rng rng(params.seed);
    for (std::size_t t = 0; t < params.trials; ++t) {
        const auto w = draw_indices(rng, n, params.witness_size, params.with_replacement);
        double worse = 0.0;
        double better = 0.0;
        for (std::size_t k : w) {
            worse += m(r.worse_index, k);
            better += m(r.better_index, k);
        }
        if (worse <= better) ++r.failures;
    }
    r.trials = params.trials;
    r.rate = static_cast<double>(r.failures) / static_cast<double>(r.trials);
    r.bound = std::exp(-params.epsilon * params.epsilon * static_cast<double>(params.witness_size) / 64.0);
    return r;
}

}  // namespace frechet_jl

#endif
