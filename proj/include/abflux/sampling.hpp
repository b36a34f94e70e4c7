#pragma once

#include <random>

#include "abflux/extension.hpp"

namespace abflux::sampling {

using Rng = std::mt19937_64;

Matrix2 random_unitary(Rng& rng);
// Invertible with condition number below 50.
Matrix2 random_invertible(Rng& rng);

// Admissible pair in a random (non-canonical) representation.  Every fifth
// draw is degenerate: U gets an eigenvalue at -1 (dim ker D = 1) or +1
// (dim ker C = 1), so all evaluation paths are exercised.
ExtensionPair random_pair(Rng& rng, int index);

}  // namespace abflux::sampling
