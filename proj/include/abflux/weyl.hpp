#pragma once

#include "abflux/extension.hpp"
#include "abflux/flux.hpp"
#include "abflux/types.hpp"

namespace abflux {

enum class Side { OffAxis, Plus, Minus };

// Spectral parameter z with the branch of k = sqrt(z), Im k >= 0, fixed by
// log k.  Boundary points carry the side of the cut they are approached from.
class SpectralPoint {
public:
  // z outside [0, inf)
  static SpectralPoint off_axis(cplx z);
  // lambda + i0 (Plus) or lambda - i0 (Minus), lambda > 0
  static SpectralPoint boundary(double lambda, Side side);

  cplx z() const { return z_; }
  cplx log_k() const { return log_k_; }
  cplx k() const { return std::exp(log_k_); }
  Side side() const { return side_; }
  // k^beta on the fixed branch
  cplx k_power(double beta) const { return std::exp(beta * log_k_); }

private:
  SpectralPoint(cplx z, cplx log_k, Side s) : z_(z), log_k_(log_k), side_(s) {}
  cplx z_, log_k_;
  Side side_;
};

struct ChannelCoefficients {
  cplx a, b;
};

// Coefficients of the small-r expansion H_nu(kr) ~ a r^{-nu} + b r^{nu}, 0 < nu < 1.
ChannelCoefficients coeff_ab(double nu, const SpectralPoint& p);

// Diagonal Weyl function; returns the 2x2 matrix diag(m_0, m_1).
Matrix2 weyl_m(const Flux& alpha, const SpectralPoint& p);

// Channel values (m = 0, m = -1) of gamma(z) xi at radius r > 0.
Vector2 gamma_field_profile(const Flux& alpha, const SpectralPoint& p, const Vector2& xi, double r);

// -(D M - C)^{-1} D; throws EigenvalueHit when D M(z) - C is numerically singular.
Matrix2 krein_matrix(const ExtensionPair& pair, const Flux& alpha, const SpectralPoint& p);
// Equivalent form -D* (M D* - C*)^{-1}.
Matrix2 krein_matrix_adjoint_form(const ExtensionPair& pair, const Flux& alpha, const SpectralPoint& p);

}  // namespace abflux
