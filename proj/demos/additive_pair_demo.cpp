// Projects the additive-error pair for growing alpha and prints how far the
// embedded Frechet distance drifts from the true value sqrt(5).

#include <cmath>
#include <cstdio>

#include "frechet_jl/frechet_jl.hpp"

int main() {
    using namespace frechet_jl;
    const std::size_t d = 50;
    const double eps = 0.25;
    const std::size_t target = target_dimension(1, 5, eps);
    std::printf("alpha,embedded,relative_error\n");
    for (double alpha_len : {1.0, 1e2, 1e4, 1e8, 1e16}) {
        const auto [p, q] = additive_error_pair(alpha_len, d);
        const auto proj = gaussian_projection(d, target, 7);
        const double embedded = frechet_distance(embed_curve(p, proj), embed_curve(q, proj));
        std::printf("%g,%.6g,%.4g\n", alpha_len, embedded, relative_error(std::sqrt(5.0), embedded));
    }
}
