#pragma once

#include <random>

#include "mtz/cone_zeta.hpp"
#include "mtz/lattice.hpp"

// Seeded generators for the randomized verification suites.
namespace mtz {

using Rng = std::mt19937_64;

// Product of random elementary matrices; entries stay small.
IMat random_unimodular(size_t n, Rng& rng, int steps = 6);
// i = first k columns of U, j = last n - k rows of U^-1.
ExactSequence random_exact_sequence(size_t n, size_t k, Rng& rng);
// Orthant fan in Z^n after `steps` random stellar subdivisions along faces of dimension >= 2.
RawConeFan random_subdivided_orthant(size_t n, int steps, Rng& rng);
RawConeFan orthant_fan(size_t n);

}  // namespace mtz
