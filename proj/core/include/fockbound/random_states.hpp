#pragma once

#include <cstddef>
#include <random>

#include "fockbound/fock_state.hpp"

namespace fockbound {

using Rng = std::mt19937_64;

/// Complex-Gaussian amplitudes on the bottom two thirds of a dim-level box
/// (at least one level), normalized. The top third is exactly empty.
FockState random_state(Rng& rng, std::size_t dim);

/// Draws dim uniformly from [min_dim, max_dim] and then a random_state.
FockState random_state(Rng& rng, std::size_t min_dim, std::size_t max_dim);

/// Number of occupied levels random_state uses for a given box.
std::size_t random_support(std::size_t dim);

}  // namespace fockbound
