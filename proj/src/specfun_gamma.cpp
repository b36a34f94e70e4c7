#include "abflux/specfun.hpp"
#include "abflux/errors.hpp"

#include <array>
#include <cmath>

namespace abflux::specfun {

namespace {

using ldcplx = std::complex<long double>;

constexpr std::array<double, 9> lanczos_coef = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// B_{2k} / (2k (2k-1)) for k = 1..12
constexpr std::array<long double, 12> stirling_coef = {
    1.0L / 12.0L,
    -1.0L / 360.0L,
    1.0L / 1260.0L,
    -1.0L / 1680.0L,
    1.0L / 1188.0L,
    -691.0L / 360360.0L,
    1.0L / 156.0L,
    -3617.0L / 122400.0L,
    43867.0L / 244188.0L,
    -174611.0L / 125400.0L,
    77683.0L / 5796.0L,
    -236364091.0L / 1506960.0L};

bool is_pole(cplx z)
{
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// sin(pi z) with the real part reduced first.
cplx sin_pi(cplx z)
{
  const double x = z.real(), y = z.imag();
  const double r = x - 2.0 * std::round(x / 2.0);  // r in [-1, 1]
  double s, c;
  if (std::abs(r) <= 0.25) {
    s = std::sin(M_PI * r);
    c = std::cos(M_PI * r);
  } else if (std::abs(r) <= 0.75) {
    const double sg = r > 0 ? 1.0 : -1.0;
    s = sg * std::cos(M_PI * (r - sg * 0.5));
    c = -sg * std::sin(M_PI * (r - sg * 0.5));
  } else {
    const double sg = r > 0 ? 1.0 : -1.0;
    s = -std::sin(M_PI * (r - sg));
    c = -std::cos(M_PI * (r - sg));
  }
  return {s * std::cosh(M_PI * y), c * std::sinh(M_PI * y)};
}

// Stirling series with upward shift; requires Re z > 0.
ldcplx log_gamma_right(ldcplx z)
{
  ldcplx shift = 0.0L;
  while (std::abs(z) < 15.0L) {
    shift += std::log(z);
    z += 1.0L;
  }
  const long double half_log_2pi = 0.918938533204672741780329736405617639861L;
  ldcplx s = (z - 0.5L) * std::log(z) - z + half_log_2pi;
  const ldcplx zi = 1.0L / z;
  const ldcplx zi2 = zi * zi;
  ldcplx p = zi;
  for (long double c : stirling_coef) {
    s += c * p;
    p *= zi2;
  }
  return s - shift;
}

ldcplx log_gamma_ld(cplx z)
{
  if (is_pole(z)) throw SingularArgument("log_gamma: pole at non-positive integer");
  if (z.real() >= 0.5) return log_gamma_right(ldcplx(z.real(), z.imag()));
  // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
  const cplx sp = sin_pi(z);
  const ldcplx lsp(std::log(std::abs(sp)), std::arg(sp));
  // log|sin(pi z)| loses nothing for large |Im z| since |sp| ~ e^{pi |y|}/2
  ldcplx r = log_gamma_right(ldcplx(1.0 - z.real(), -z.imag()));
  const long double log_pi = 1.144729885849400174143427351353058712L;
  return log_pi - lsp - r;
}

}  // namespace

cplx log_gamma(cplx z)
{
  const ldcplx v = log_gamma_ld(z);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::complex<long double> log_gamma_extended(cplx z)
{
  if (!(z.real() > 0.0)) throw DomainError("log_gamma_extended: requires Re z > 0");
  return log_gamma_right(ldcplx(z.real(), z.imag()));
}

cplx complex_gamma(cplx z)
{
  if (is_pole(z)) throw SingularArgument("complex_gamma: pole at non-positive integer");
  if (std::abs(z.imag()) > 20.0) {
    const ldcplx v = log_gamma_ld(z);
    const long double ph = std::fmod(v.imag(), 2.0L * 3.14159265358979323846264338327950288L);
    return std::polar(static_cast<double>(std::exp(v.real())), static_cast<double>(ph));
  }
  if (z.real() < 0.5) return M_PI / (sin_pi(z) * complex_gamma(1.0 - z));
  z -= 1.0;
  cplx x = lanczos_coef[0];
  for (int i = 1; i < 9; ++i) x += lanczos_coef[i] / (z + double(i));
  const cplx t = z + 7.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

cplx gamma_ratio_conj(double a, double y)
{
  if (!(a > 0.0)) throw DomainError("gamma_ratio_conj: need a > 0");
  const ldcplx v = log_gamma_right(ldcplx(a, y));
  const long double two_pi = 6.28318530717958647692528676655900577L;
  const long double ph = std::fmod(2.0L * v.imag(), two_pi);
  return std::polar(1.0, static_cast<double>(ph));
}

double digamma(double x)
{
  if (!(x > 0.0)) throw DomainError("digamma: need x > 0");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double x2 = 1.0 / (x * x);
  const double tail =
      x2 * (1.0 / 12 - x2 * (1.0 / 120 - x2 * (1.0 / 252 - x2 * (1.0 / 240 - x2 * (1.0 / 132)))));
  return acc + std::log(x) - 0.5 / x - tail;
}

cplx sqrt_upper(cplx z)
{
  // k = i sqrt(-z): Im k >= 0 on the principal branch of sqrt(-z)
  return cplx(0.0, 1.0) * std::sqrt(-z);
}

}  // namespace abflux::specfun
