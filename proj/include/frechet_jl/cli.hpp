#ifndef FRECHET_JL_CLI_HPP
#define FRECHET_JL_CLI_HPP

// Subcommands: dist, matrix, embed, distort, median, gen, bench.
// Exit codes: 0 success, 1 validation or usage error, 2 I/O error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "frechet_jl/bench.hpp"
#include "frechet_jl/clustering.hpp"
#include "frechet_jl/csv_io.hpp"
#include "frechet_jl/embedding.hpp"
#include "frechet_jl/frechet.hpp"
#include "frechet_jl/generators.hpp"
#include "frechet_jl/parallel.hpp"

namespace frechet_jl::cli {

inline std::string format_significant(double value, int digits = 12) {
    std::ostringstream os;
    os << std::setprecision(digits) << value;
    return os.str();
}

template <class T>
std::vector<T> parse_list(const std::string& text) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::istringstream is(item);
        T v{};
        if (!(is >> v) || !(is >> std::ws).eof()) throw ValidationError("bad list element: '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ValidationError("empty list: '" + text + "'");
    return out;
}

inline std::ofstream open_output(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

struct GlobalOptions {
    std::optional<std::size_t> threads;
    std::optional<double> tolerance;
    bool transpose = false;

    DistanceQuery query() const {
        return DistanceQuery{tolerance, threads.value_or(default_thread_count())};
    }
};

inline CurveSet load_dir(const std::string& dir, const GlobalOptions& g) {
    return read_curveset_dir(dir, g.transpose);
}

inline Curve load_curve(const std::string& path, const GlobalOptions& g) {
    auto c = read_curve_csv(path);
    return g.transpose ? transpose(c) : c;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Frechet distance, JL embedding and 1-median sampling for polygonal curves", "frechet_jl"};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--threads", g.threads, "worker threads (default: FRECHET_THREADS or all cores)")
        ->check(CLI::PositiveNumber);
    app.add_option("--tolerance", g.tolerance, "absolute bisection tolerance (default 1e-9 x upper bound)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--transpose", g.transpose, "read file columns as vertices");

    // dist
    auto* dist = app.add_subcommand("dist", "distance (or decision with --epsilon) between two curves");
    std::string a_path, b_path;
    std::optional<double> decision_eps;
    dist->add_option("--a", a_path)->required();
    dist->add_option("--b", b_path)->required();
    dist->add_option("--epsilon", decision_eps);

    // matrix
    auto* matrix = app.add_subcommand("matrix", "pairwise distance matrix of a curve directory");
    std::string dir, out_path;
    matrix->add_option("--dir", dir)->required();
    matrix->add_option("--out", out_path)->required();

    // embed
    auto* embed = app.add_subcommand("embed", "project every curve of a directory");
    double embed_eps = 0.5;
    std::uint64_t seed = 0;
    std::string kind = "gaussian";
    double jl_constant = 2.0;
    std::optional<std::size_t> target_override;
    embed->add_option("--dir", dir)->required();
    embed->add_option("--epsilon", embed_eps)->required();
    embed->add_option("--seed", seed);
    embed->add_option("--kind", kind)->check(CLI::IsMember({"gaussian", "pca"}));
    embed->add_option("--jl-constant", jl_constant);
    embed->add_option("--target-dim", target_override);
    embed->add_option("--out", out_path)->required();

    // distort
    auto* distort = app.add_subcommand("distort", "distortion records over epsilons and seeds");
    std::string eps_list = "0.5";
    std::size_t seeds = 1;
    std::uint64_t seed_base = 0;
    distort->add_option("--dir", dir)->required();
    distort->add_option("--epsilon-list", eps_list)->required();
    distort->add_option("--seeds", seeds);
    distort->add_option("--seed-base", seed_base);
    distort->add_option("--kind", kind)->check(CLI::IsMember({"gaussian", "pca"}));
    distort->add_option("--jl-constant", jl_constant);
    distort->add_option("--out", out_path)->required();

    // median
    auto* median = app.add_subcommand("median", "sampled discrete 1-median");
    MedianParams mp;
    std::string mode = "worst";
    bool exhaustive = false;
    bool without_replacement = false;
    median->add_option("--dir", dir)->required();
    median->add_option("--epsilon", mp.epsilon)->required();
    median->add_option("--delta", mp.delta)->required();
    median->add_option("--mode", mode)->check(CLI::IsMember({"worst", "bwc"}));
    median->add_option("--gamma", mp.gamma);
    median->add_option("--seed", mp.seed);
    median->add_flag("--exhaustive", exhaustive, "also compute the optimum and the deviation");
    median->add_flag("--without-replacement", without_replacement);
    median->add_option("--out", out_path)->required();

    // gen
    auto* gen = app.add_subcommand("gen", "write synthetic curve families");
    std::string family;
    std::size_t n = 10, m = 10, dim = 3;
    double scale = 1.0, alpha_len = 1.0, gamma = 0.375, gen_eps = 0.5;
    std::string bits_a, bits_b;
    gen->add_option("--family", family)
        ->required()
        ->check(CLI::IsMember({"simplex", "additive", "eqgadget", "disjgadget", "mediantest"}));
    gen->add_option("--n", n);
    gen->add_option("--m", m);
    gen->add_option("--dim", dim);
    gen->add_option("--scale", scale);
    gen->add_option("--seed", seed);
    gen->add_option("--alpha", alpha_len);
    gen->add_option("--bits-a", bits_a);
    gen->add_option("--bits-b", bits_b);
    gen->add_option("--gamma", gamma);
    gen->add_option("--epsilon", gen_eps);
    gen->add_option("--out", out_path)->required();

    // bench
    auto* bench = app.add_subcommand("bench", "time distance matrices: threads x original/projected");
    std::string threads_list;
    std::size_t reps = 3;
    bench->add_option("--dir", dir, "curve directory (default: generated simplex curves)");
    bench->add_option("--n", n);
    bench->add_option("--m", m);
    bench->add_option("--dim", dim);
    bench->add_option("--scale", scale);
    bench->add_option("--seed", seed);
    bench->add_option("--threads-list", threads_list);
    bench->add_option("--epsilon-list", eps_list);
    bench->add_option("--jl-constant", jl_constant);
    bench->add_option("--reps", reps)->check(CLI::PositiveNumber);
    bench->add_option("--out", out_path)->required();

    for (auto* sub : {dist, matrix, embed, distort, median, gen, bench}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        const DistanceQuery q = g.query();
        if (dist->parsed()) {
            const Curve a = load_curve(a_path, g);
            const Curve b = load_curve(b_path, g);
            if (decision_eps)
                out << (decide_frechet(a, b, *decision_eps, q.threads) ? "true" : "false") << "\n";
            else
                out << format_significant(frechet_distance(a, b, q)) << "\n";
        } else if (matrix->parsed()) {
            const CurveSet set = load_dir(dir, g);
            const DistanceMatrix dm = distance_matrix(set, q);
            auto os = open_output(out_path);
            for (std::size_t i = 0; i < dm.size(); ++i) {
                for (std::size_t j = 0; j < dm.size(); ++j) os << (j ? "," : "") << format_real(dm(i, j));
                os << "\n";
            }
        } else if (embed->parsed()) {
            const CurveSet set = load_dir(dir, g);
            if (set.empty()) throw EmptySet();
            const std::size_t target = target_override.value_or(
                target_dimension(1, set.total_vertices(), embed_eps, jl_constant));
            const ProjectionMatrix p =
                kind == "pca" ? pca_projection(set, std::min(target, set.dimension())) : gaussian_projection(set.dimension(), target, seed);
            write_curveset_dir(embed_curveset(set, p, q.threads), out_path);
        } else if (distort->parsed()) {
            const CurveSet set = load_dir(dir, g);
            if (set.empty()) throw EmptySet();
            const auto epsilons = parse_list<double>(eps_list);
            const DistanceMatrix original = distance_matrix(set, q);
            auto os = open_output(out_path);
            os << "original,embedded,lower,upper,rel_error,alpha,epsilon,seed\n";
            for (double eps : epsilons) {
                const std::size_t target = target_dimension(1, set.total_vertices(), eps, jl_constant);
                const std::size_t runs = kind == "pca" ? 1 : seeds;
                for (std::size_t s = 0; s < runs; ++s) {
                    const std::uint64_t sd = seed_base + s;
                    const ProjectionMatrix p = kind == "pca" ? pca_projection(set, std::min(target, set.dimension()))
                                                             : gaussian_projection(set.dimension(), target, sd);
                    for (const auto& r : measure_distortion(set, original, p, eps, q)) {
                        os << format_real(r.original) << ',' << format_real(r.embedded) << ','
                           << format_real(r.lower_bound) << ',' << format_real(r.upper_bound) << ','
                           << format_real(r.relative_error) << ',' << format_real(r.alpha_pair) << ','
                           << format_real(eps) << ',' << (kind == "pca" ? 0 : sd) << "\n";
                    }
                }
            }
        } else if (median->parsed()) {
            const CurveSet set = load_dir(dir, g);
            mp.mode = mode == "bwc" ? MedianMode::beyond_worst_case : MedianMode::worst_case;
            mp.with_replacement = !without_replacement;
            const MedianResult r = sampled_median(set, mp, q);
            auto os = open_output(out_path);
            os << "center_label,cost,witness_cost,l_s,l_w,opt_cost,deviation\n";
            os << set.label(r.center_index) << ',' << format_real(r.cost) << ',' << format_real(r.witness_cost)
               << ',' << r.candidate_count << ',' << r.witness_count << ',';
            if (exhaustive) {
                const MedianResult opt = exhaustive_median(set, q);
                const double deviation = opt.cost > 0.0 ? r.cost / opt.cost - 1.0 : 0.0;
                os << format_real(opt.cost) << ',' << format_real(deviation);
            } else {
                os << ',';
            }
            os << "\n";
            out << set.label(r.center_index) << "\n";
        } else if (gen->parsed()) {
            const std::filesystem::path outdir(out_path);
            std::error_code ec;
            std::filesystem::create_directories(outdir, ec);
            if (ec) throw IoError("cannot create " + outdir.string());
            if (family == "simplex") {
                write_curveset_dir(simplex_curves(n, m, dim, scale, seed), outdir);
            } else if (family == "additive") {
                const auto [p, qc] = additive_error_pair(alpha_len, dim);
                write_curve_csv(p, outdir / "p.csv");
                write_curve_csv(qc, outdir / "q.csv");
            } else if (family == "eqgadget" || family == "disjgadget") {
                if (bits_a.empty()) throw ValidationError("--bits-a is required for gadget families");
                const bool eq = family == "eqgadget";
                const auto a = BitString::parse(bits_a);
                write_curve_csv(eq ? equality_gadget(a) : disjointness_gadget(a, GadgetSide::alice),
                                outdir / "alice.csv");
                if (!bits_b.empty()) {
                    const auto b = BitString::parse(bits_b);
                    write_curve_csv(eq ? equality_gadget(b) : disjointness_gadget(b, GadgetSide::bob),
                                    outdir / "bob.csv");
                }
            } else {
                const auto planted = median_test_set(n, m, dim, gamma, gen_eps, seed);
                write_curveset_dir(planted.curves, outdir);
                out << "center=" << planted.curves.label(planted.center_index) << " outliers=" << planted.outliers
                    << " medium=" << planted.medium << " close=" << planted.close
                    << " optimal_cost=" << format_real(planted.optimal_cost) << "\n";
            }
        } else if (bench->parsed()) {
            const CurveSet set = dir.empty() ? simplex_curves(n, m, dim, scale, seed) : load_dir(dir, g);
            BenchConfig cfg;
            cfg.threads_list = threads_list.empty()
                                   ? std::vector<std::size_t>{1, q.threads}
                                   : parse_list<std::size_t>(threads_list);
            std::sort(cfg.threads_list.begin(), cfg.threads_list.end());
            cfg.threads_list.erase(std::unique(cfg.threads_list.begin(), cfg.threads_list.end()),
                                   cfg.threads_list.end());
            cfg.epsilon_list = parse_list<double>(eps_list);
            cfg.repetitions = reps;
            cfg.seed = seed;
            cfg.jl_constant = jl_constant;
            cfg.tolerance = g.tolerance;
            const BenchReport report = run_bench(set, cfg);
            auto os = open_output(out_path);
            write_bench_csv(os, report);
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace frechet_jl::cli

#endif
