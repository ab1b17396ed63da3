#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "lbext/braid.hpp"

namespace lbext {

using Rng = std::mt19937_64;

/// Uniform over the 4n-3 letters s_i, s_i^-1, r_i, t_i valid on n strands.
GenLetter random_letter(int n, Rng& rng);
BraidWord random_word(int n, std::size_t length, Rng& rng);

}  // namespace lbext
