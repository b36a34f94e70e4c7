#pragma once

#include <optional>
#include <vector>

#include "abflux/extension.hpp"
#include "abflux/flux.hpp"

namespace abflux {

struct BoundState {
  double z = 0.0;
  int multiplicity = 1;
  std::vector<Vector2> basis;      // orthonormal basis of ker (D M(z) - C)
  bool proximity_warning = false;  // another root within 1e-8 relative
};

// det(D M(z) - C) at z < 0.
cplx eigenvalue_determinant(const ExtensionPair& pair, const Flux& alpha, double z);

// All negative eigenvalues, sorted ascending.  Total multiplicity equals
// negative_count(pair).
std::vector<BoundState> find_negative_eigenvalues(const ExtensionPair& pair, const Flux& alpha);

// Channel values at r of the eigenfunction gamma(z) xi; xi defaults to the
// first basis vector and must lie in the span of the basis otherwise.
Vector2 eigenfunction_profile(const BoundState& b, const Flux& alpha, double r,
                              const std::optional<Vector2>& xi = std::nullopt);

}  // namespace abflux
