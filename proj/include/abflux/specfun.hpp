#pragma once

#include "abflux/types.hpp"

namespace abflux::specfun {

// Gamma function for complex argument.  Throws SingularArgument at poles.
cplx complex_gamma(cplx z);

// Principal branch of log Gamma (continuous off the negative real axis).
cplx log_gamma(cplx z);

// log Gamma for Re z > 0 in extended precision (standard continuous branch).
std::complex<long double> log_gamma_extended(cplx z);

// Gamma(a + i y) / Gamma(a - i y) for real a > 0; unit modulus by construction.
cplx gamma_ratio_conj(double a, double y);

// Digamma for real x > 0.
double digamma(double x);

// Bessel J_nu(x) for real order 0 <= nu <= 20 and x >= 0.
double bessel_j(double nu, double x);

// Hankel function H^(1)_nu(w) for 0 < nu < 1 and -pi/2 < arg w <= pi, w != 0.
cplx hankel1(double nu, cplx w);

// 2F1(a,b;c;x) restricted to a = (n+nu)/2, b = (n-nu)/2, c = n+1 with n >= 0
// an integer and 0 < nu < 1.  Supported for |x| < 0.95 or |1-x| < 0.7.
cplx gauss_2f1(double a, double b, double c, cplx x);

// Square root with Im >= 0 (k = i sqrt(-z) on the principal branch).
cplx sqrt_upper(cplx z);

namespace detail {
// J and Y of real order via Steed's method, valid for x >= 2.
void bessel_jy_steed(double nu, double x, double& j, double& y);
double bessel_j_series(double nu, double x);
double bessel_j_asymptotic(double nu, double x);
cplx hankel1_series(double nu, cplx w);
cplx hankel1_integral(double nu, cplx w);
cplx hankel1_asymptotic(double nu, cplx w);
}  // namespace detail

}  // namespace abflux::specfun
