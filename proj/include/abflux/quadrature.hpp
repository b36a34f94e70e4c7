#pragma once

#include <functional>
#include <string>

#include "abflux/types.hpp"

namespace abflux::quad {

using Integrand = std::function<cplx(double)>;

struct Result {
  cplx value{};
  double error = 0.0;
  long evaluations = 0;
  std::string metadata;  // truncation radius, averaging depth, panel count
};

// Adaptive Gauss-Kronrod (7/15) on a finite interval.
// Throws AccuracyError (carrying the best estimate) when the budget runs out.
Result integrate(const Integrand& f, double a, double b, double abs_tol,
                 double rel_tol = 0.0, int max_panels = 4000);

// Tanh-sinh rule on [a,b]; tolerates integrable endpoint singularities.
Result integrate_tanh_sinh(const Integrand& f, double a, double b, double tol);

// Exp-sinh rule on (0, inf) for integrands decaying at least exponentially.
Result integrate_exp_sinh(const Integrand& f, double tol);

struct OscillatoryOptions {
  double near_zero = 1.0;   // (0, near_zero] handled with s = near_zero e^{-t}
  double radius = 0.0;      // truncation radius R; 0 -> 200 / frequency
  int averaging_levels = 8; // repeated averaging depth K
};

// Integral over (0, inf).  frequency <= 0 selects the non-oscillatory path;
// frequency > 0 is the angular frequency of the tail oscillation, which is
// summed over half-period panels and accelerated by repeated averaging.
Result adaptive_quadrature(const Integrand& f, double abs_tol, double frequency,
                           const OscillatoryOptions& opts = {});

}  // namespace abflux::quad
