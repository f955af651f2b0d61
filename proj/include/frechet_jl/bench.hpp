#ifndef FRECHET_JL_BENCH_HPP
#define FRECHET_JL_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "frechet_jl/curve.hpp"
#include "frechet_jl/embedding.hpp"
#include "frechet_jl/frechet.hpp"

namespace frechet_jl {

struct BenchRow {
    std::string operation;  // "original" or "projected"
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t d = 0;
    std::optional<std::size_t> target_dim;
    std::size_t threads = 1;
    double epsilon = 0.0;  // projected rows only
    double wall_time_seconds = 0.0;  // median over repetitions
    std::size_t repetitions = 1;
};

struct BenchReport {
    std::vector<BenchRow> rows;

    const BenchRow* find(const std::string& operation, std::size_t threads) const {
        for (const auto& r : rows)
            if (r.operation == operation && r.threads == threads) return &r;
        return nullptr;
    }
};

struct BenchConfig {
    std::vector<std::size_t> threads_list{1};
    std::vector<double> epsilon_list{0.5};
    std::size_t repetitions = 3;
    std::uint64_t seed = 0;
    double jl_constant = 2.0;
    std::optional<double> tolerance;
};

namespace detail {

template <class Fn>
double median_wall_time(std::size_t reps, Fn&& fn) {
    std::vector<double> times;
    for (std::size_t r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        times.push_back(std::max(dt.count(), 1e-9));
    }
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    return times.size() % 2 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
}

}  // namespace detail

/*
 * Times distance_matrix on the original curves and on their Gaussian
 * projections, once per thread count (and per epsilon for the projections).
 * Projected timings include drawing the matrix and embedding the curves.
 */
inline BenchReport run_bench(const CurveSet& set, const BenchConfig& config) {
    if (set.empty()) throw EmptySet();
    if (config.repetitions == 0) throw ValidationError("repetitions must be positive");
    std::size_t max_m = 0;
    for (const auto& c : set.curves) max_m = std::max(max_m, c.size());

    BenchReport report;
    for (std::size_t threads : config.threads_list) {
        if (threads == 0) throw ValidationError("thread counts must be positive");
        DistanceQuery q{config.tolerance, threads};

        BenchRow row{"original", set.size(), max_m, set.dimension(), std::nullopt, threads};
        row.repetitions = config.repetitions;
        row.wall_time_seconds = detail::median_wall_time(config.repetitions, [&] { distance_matrix(set, q); });
        report.rows.push_back(row);

        for (double eps : config.epsilon_list) {
            const std::size_t target = target_dimension(set.size(), max_m, eps, config.jl_constant);
            BenchRow prow{"projected", set.size(), max_m, set.dimension(), target, threads, eps};
            prow.repetitions = config.repetitions;
            prow.wall_time_seconds = detail::median_wall_time(config.repetitions, [&] {
                const auto p = gaussian_projection(set.dimension(), target, config.seed);
                distance_matrix(embed_curveset(set, p, threads), q);
            });
            report.rows.push_back(prow);
        }
    }
    return report;
}

inline void write_bench_csv(std::ostream& out, const BenchReport& report) {
    out << "operation,n,m,d,d_prime,epsilon,threads,wall_time_seconds,repetitions\n";
    for (const auto& r : report.rows) {
        out << r.operation << ',' << r.n << ',' << r.m << ',' << r.d << ',';
        if (r.target_dim) out << *r.target_dim;
        out << ',';
        if (r.target_dim) out << r.epsilon;
        out << ',' << r.threads << ',' << r.wall_time_seconds << ',' << r.repetitions << '\n';
    }
}

}  // namespace frechet_jl

#endif
