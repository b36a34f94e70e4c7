#include "abflux/specfun.hpp"
#include "abflux/errors.hpp"

#include <cmath>

namespace abflux::specfun {

namespace {

void check_family(double a, double b, double c)
{
  const double n = c - 1.0;
  const bool integer_n = n >= -1e-12 && std::abs(n - std::round(n)) < 1e-12;
  const double nu = a - b;
  if (!integer_n || std::abs(a + b - std::round(n)) > 1e-12 || !(nu > 0.0 && nu < 1.0))
    throw UnsupportedParameters(
        "gauss_2f1: parameters outside the family a=(n+nu)/2, b=(n-nu)/2, c=n+1");
}

cplx direct_series(double a, double b, double c, cplx x)
{
  cplx term = 1.0, sum = 1.0;
  for (int k = 0; k < 5000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) return sum;
  }
  throw AccuracyError("gauss_2f1: direct series did not converge", sum, std::abs(term));
}

// c = a + b + 1: logarithmic expansion about x = 1.
cplx log_expansion(double a, double b, double c, cplx x)
{
  const cplx y = 1.0 - x;
  const cplx ly = std::log(y);
  const double lead = std::tgamma(c) / (std::tgamma(a + 1.0) * std::tgamma(b + 1.0));
  const double pref = std::tgamma(c) / (std::tgamma(a) * std::tgamma(b));
  double psi_n1 = digamma(1.0);
  double psi_n2 = digamma(2.0);
  double psi_a = digamma(a + 1.0);
  double psi_b = digamma(b + 1.0);
  cplx coef = 1.0;  // (a+1)_n (b+1)_n / (n! (n+1)!) y^n
  cplx sum = 0.0;
  for (int n = 0; n < 2000; ++n) {
    const cplx t = coef * (ly - psi_n1 - psi_n2 + psi_a + psi_b);
    sum += t;
    if (n > 2 && std::abs(t) < 1e-17 * std::abs(sum)) {
      return lead + y * pref * sum;
    }
    coef *= (a + 1.0 + n) * (b + 1.0 + n) / ((n + 1.0) * (n + 2.0)) * y;
    psi_n1 += 1.0 / (n + 1.0);
    psi_n2 += 1.0 / (n + 2.0);
    psi_a += 1.0 / (a + 1.0 + n);
    psi_b += 1.0 / (b + 1.0 + n);
  }
  throw AccuracyError("gauss_2f1: logarithmic expansion did not converge", lead + y * pref * sum, 1.0);
}

}  // namespace

cplx gauss_2f1(double a, double b, double c, cplx x)
{
  check_family(a, b, c);
  const double ax = std::abs(x), a1 = std::abs(1.0 - x);
  // Gauss summation; c - a - b = 1 in the supported family
  if (a1 == 0.0) return std::tgamma(c) * std::tgamma(c - a - b) / (std::tgamma(c - a) * std::tgamma(c - b));
  if (ax <= 0.5) return direct_series(a, b, c, x);
  if (a1 < 0.7) return log_expansion(a, b, c, x);
  if (ax < 0.95) return direct_series(a, b, c, x);
  throw DomainError("gauss_2f1: argument outside |x| < 0.95 and |1-x| < 0.7");
}

}  // namespace abflux::specfun
