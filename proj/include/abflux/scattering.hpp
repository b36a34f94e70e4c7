#pragma once

#include <optional>
#include <string>

#include "abflux/extension.hpp"
#include "abflux/flux.hpp"

namespace abflux {

// Scattering matrix at energy kappa^2 in the (m = 0, m = -1) channel basis.
struct ScatteringResult {
  Matrix2 s;
  double kappa = 0.0;
  // b_j^2 left the double range; s holds the matching asymptotic class.
  bool saturated = false;
  double unitarity_defect() const;
};

enum class End { Zero, Infinity };

struct AsymptoticClass {
  End end;
  std::string label;  // "i".."v" at infinity, "a".."e" at zero
  Matrix2 limit;
};

// Aharonov-Bohm phase shift delta_m and the channel scattering coefficient e^{2 i delta_m}.
double ab_phase(int m, const Flux& alpha);
cplx ab_channel_s(int m, const Flux& alpha);

// Free part diag(e^{-i pi alpha}, e^{i pi alpha}).
Matrix2 s_free(const Flux& alpha);

// S - s_free by the stable evaluation path.
Matrix2 s_tilde(const ExtensionPair& pair, const Flux& alpha, double kappa);
// Direct evaluation of the raw formula; used for cross-checks only.
Matrix2 s_tilde_raw(const ExtensionPair& pair, const Flux& alpha, double kappa);

ScatteringResult s_matrix(const ExtensionPair& pair, const Flux& alpha, double kappa);

AsymptoticClass s_asymptotic(const ExtensionPair& pair, const Flux& alpha, End end);

// Constant S when the pair falls in one of the energy-independent classes.
std::optional<Matrix2> classify_energy_independent(const ExtensionPair& pair, const Flux& alpha);

}  // namespace abflux
