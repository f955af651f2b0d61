#ifndef FRECHET_JL_HPP
#define FRECHET_JL_HPP

#include "frechet_jl/bench.hpp"
#include "frechet_jl/clustering.hpp"
#include "frechet_jl/csv_io.hpp"
#include "frechet_jl/curve.hpp"
#include "frechet_jl/embedding.hpp"
#include "frechet_jl/errors.hpp"
#include "frechet_jl/frechet.hpp"
#include "frechet_jl/generators.hpp"
#include "frechet_jl/parallel.hpp"
#include "frechet_jl/rng.hpp"

#endif
