#include "abflux/specfun.hpp"
#include "abflux/errors.hpp"
#include "abflux/quadrature.hpp"

#include <cmath>
#include <limits>

namespace abflux::specfun {

namespace detail {

double bessel_j_series(double nu, double x)
{
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  const double q = -0.25 * x * x;
  double term = std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0));
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (k * (k + nu));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

double bessel_j_asymptotic(double nu, double x)
{
  const double mu = 4.0 * nu * nu;
  double p = 1.0, q = 0.0;
  double term = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    if (std::abs(term) > last) break;
    last = std::abs(term);
    // terms alternate between Q (odd k) and P (even k) with sign (-1)^{floor(k/2)}
    const double sg = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 1)
      q += sg * term;
    else
      p += sg * term;
    if (last < 1e-17) break;
  }
  const double chi = x - (0.5 * nu + 0.25) * M_PI;
  return std::sqrt(2.0 / (M_PI * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

// Continued fractions of Steed's method (Barnett's CF1 + CF2), x >= 2.
void bessel_jy_steed(double nu, double x, double& rj, double& ry)
{
  constexpr double eps = 1e-16;
  constexpr double fpmin = 1e-300;
  constexpr int maxit = 100000;
  if (x < 2.0) throw DomainError("bessel_jy_steed: requires x >= 2");
  const int nl = std::max(0, static_cast<int>(nu - x + 1.5));
  const double xmu = nu - nl;
  const double xmu2 = xmu * xmu;
  const double xi = 1.0 / x, xi2 = 2.0 * xi, w = xi2 / M_PI;
  int isign = 1;
  double h = nu * xi;
  if (h < fpmin) h = fpmin;
  double b = xi2 * nu, d = 0.0, c = h;
  int i = 1;
  for (; i <= maxit; ++i) {
    b += xi2;
    d = b - d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = b - 1.0 / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) isign = -isign;
    if (std::abs(del - 1.0) < eps) break;
  }
  if (i > maxit) throw AccuracyError("bessel_jy_steed: CF1 did not converge", 0.0, 1.0);
  double rjl = isign * fpmin, rjpl = h * rjl;
  const double rjl1 = rjl;
  double fact = nu * xi;
  for (int l = nl; l >= 1; --l) {
    const double rjtemp = fact * rjl + rjpl;
    fact -= xi;
    rjpl = fact * rjtemp - rjl;
    rjl = rjtemp;
  }
  if (rjl == 0.0) rjl = eps;
  const double f = rjpl / rjl;

  double a = 0.25 - xmu2, p = -0.5 * xi, q = 1.0;
  const double br = 2.0 * x;
  double bi = 2.0;
  fact = a * xi / (p * p + q * q);
  double cr = br + q * fact, ci = bi + p * fact;
  double den = br * br + bi * bi;
  double dr = br / den, di = -bi / den;
  double dlr = cr * dr - ci * di, dli = cr * di + ci * dr;
  double temp = p * dlr - q * dli;
  q = p * dli + q * dlr;
  p = temp;
  for (i = 2; i <= maxit; ++i) {
    a += 2 * (i - 1);
    bi += 2.0;
    dr = a * dr + br;
    di = a * di + bi;
    if (std::abs(dr) + std::abs(di) < fpmin) dr = fpmin;
    fact = a / (cr * cr + ci * ci);
    cr = br + cr * fact;
    ci = bi - ci * fact;
    if (std::abs(cr) + std::abs(ci) < fpmin) cr = fpmin;
    den = dr * dr + di * di;
    dr /= den;
    di /= -den;
    dlr = cr * dr - ci * di;
    dli = cr * di + ci * dr;
    temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    if (std::abs(dlr - 1.0) + std::abs(dli) < eps) break;
  }
  if (i > maxit) throw AccuracyError("bessel_jy_steed: CF2 did not converge", 0.0, 1.0);
  const double gam = (p - f) / q;
  double rjmu = std::sqrt(w / ((p - f) * gam + q));
  rjmu = std::copysign(rjmu, rjl);
  double rymu = rjmu * gam;
  const double rymup = rymu * (p + q / gam);
  double ry1 = xmu * xi * rymu - rymup;
  rj = rjl1 * (rjmu / rjl);
  for (int k = 1; k <= nl; ++k) {
    const double rytemp = (xmu + k) * xi2 * ry1 - rymu;
    rymu = ry1;
    ry1 = rytemp;
  }
  ry = rymu;
}

cplx hankel1_series(double nu, cplx w)
{
  // H = (J_{-nu} - e^{-i pi nu} J_nu) / (i sin(pi nu))
  const cplx q = -0.25 * w * w;
  auto jser = [&](double v) {
    cplx term = std::pow(0.5 * w, v) / std::tgamma(v + 1.0);
    cplx sum = term;
    for (int k = 1; k < 300; ++k) {
      term *= q / (k * (k + v));
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
  };
  const double s = std::sin(M_PI * nu);
  return (jser(-nu) - std::polar(1.0, -M_PI * nu) * jser(nu)) / cplx(0.0, s);
}

cplx hankel1_integral(double nu, cplx w)
{
  // H = sqrt(2/(pi w)) e^{i(w - nu pi/2 - pi/4)} / Gamma(nu + 1/2)
  //     * int_0^inf e^{-u} u^{nu-1/2} (1 + i u/(2w))^{nu-1/2} du
  const cplx iw2 = cplx(0.0, 1.0) / (2.0 * w);
  const double e = nu - 0.5;
  auto f = [&](double u) -> cplx {
    if (u == 0.0) return 0.0;
    return std::exp(-u + e * std::log(u)) * std::pow(1.0 + u * iw2, e);
  };
  const quad::Result r = quad::integrate_exp_sinh(f, 1e-15);
  const cplx pre = std::sqrt(2.0 / (M_PI * w)) *
                   std::exp(cplx(0.0, 1.0) * (w - (0.5 * nu + 0.25) * M_PI)) /
                   std::tgamma(nu + 0.5);
  return pre * r.value;
}

cplx hankel1_asymptotic(double nu, cplx w)
{
  const double mu = 4.0 * nu * nu;
  cplx sum = 1.0, term = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= cplx(0.0, 1.0) * (mu - odd * odd) / (k * 8.0 * w);
    const double t = std::abs(term);
    if (t > last) break;
    last = t;
    sum += term;
    if (t < 1e-17) break;
  }
  return std::sqrt(2.0 / (M_PI * w)) *
         std::exp(cplx(0.0, 1.0) * (w - (0.5 * nu + 0.25) * M_PI)) * sum;
}

}  // namespace detail

double bessel_j(double nu, double x)
{
  if (!(nu >= 0.0 && nu <= 20.0)) throw DomainError("bessel_j: order must lie in [0,20]");
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("bessel_j: argument must be finite and >= 0");
  if (x <= 2.0 || 0.25 * x * x <= nu + 1.0) return detail::bessel_j_series(nu, x);
  if (x >= std::max(25.0, nu * nu)) return detail::bessel_j_asymptotic(nu, x);
  double j, y;
  detail::bessel_jy_steed(nu, x, j, y);
  return j;
}

cplx hankel1(double nu, cplx w)
{
  if (!(nu > 0.0 && nu < 1.0)) throw DomainError("hankel1: order must lie in (0,1)");
  if (w == cplx(0.0, 0.0)) throw SingularArgument("hankel1: w = 0");
  const double ar = std::arg(w);
  if (!(ar > -0.5 * M_PI && ar <= M_PI)) throw DomainError("hankel1: arg w outside (-pi/2, pi]");
  const double r = std::abs(w);
  if (r <= 2.0) return detail::hankel1_series(nu, w);
  if (r < 25.0) return detail::hankel1_integral(nu, w);
  return detail::hankel1_asymptotic(nu, w);
}

}  // namespace abflux::specfun
