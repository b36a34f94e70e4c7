#include "abflux/weyl.hpp"
#include "abflux/errors.hpp"
#include "abflux/specfun.hpp"

#include <cmath>

namespace abflux {

namespace {

// scale: squared size of the terms m is built from, so cancellation counts as singular
Matrix2 checked_inverse(const Matrix2& m, double scale)
{
  const cplx det = m.determinant();
  if (!(std::abs(det) >= 1e-14 * scale) || scale == 0.0)
    throw EigenvalueHit("spectral parameter is an eigenvalue of the extension");
  Matrix2 inv;
  inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return inv / det;
}

}  // namespace

SpectralPoint SpectralPoint::off_axis(cplx z)
{
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("spectral parameter must be finite");
  if (z.imag() == 0.0 && z.real() >= 0.0)
    throw DomainError("spectral parameter lies on [0, inf); use a boundary point");
  const cplx lk = cplx(0.0, 0.5 * pi) + 0.5 * std::log(-z);
  return SpectralPoint(z, lk, Side::OffAxis);
}

SpectralPoint SpectralPoint::boundary(double lambda, Side side)
{
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("boundary point needs lambda > 0");
  if (side == Side::OffAxis) throw DomainError("boundary point needs a side");
  const double lk = 0.5 * std::log(lambda);
  return SpectralPoint(lambda, cplx(lk, side == Side::Plus ? 0.0 : pi), side);
}

ChannelCoefficients coeff_ab(double nu, const SpectralPoint& p)
{
  if (!(nu > 0.0 && nu < 1.0)) throw DomainError("coeff_ab: order must lie in (0,1)");
  const double s = std::sin(pi * nu);
  const cplx i(0.0, 1.0);
  const cplx a = -std::pow(2.0, nu) * i * p.k_power(-nu) / (s * std::tgamma(1.0 - nu));
  const cplx b = std::pow(2.0, -nu) * i * std::polar(1.0, -pi * nu) * p.k_power(nu) /
                 (s * std::tgamma(1.0 + nu));
  return {a, b};
}

Matrix2 weyl_m(const Flux& alpha, const SpectralPoint& p)
{
  const double s = alpha.sin_pi();
  Matrix2 m = Matrix2::Zero();
  for (int ch = 0; ch < 2; ++ch) {
    const double nu = alpha.order(ch);
    const double g = std::tgamma(1.0 - nu);
    // e^{-i pi nu} k^{2 nu}, combined in the exponent
    const cplx ph = std::exp(2.0 * nu * p.log_k() - cplx(0.0, pi * nu));
    m(ch, ch) = -(2.0 / pi) * s * g * g * std::pow(4.0, -nu) * ph;
  }
  return m;
}

Vector2 gamma_field_profile(const Flux& alpha, const SpectralPoint& p, const Vector2& xi, double r)
{
  if (!(r > 0.0)) throw DomainError("gamma_field_profile: r must be positive");
  Vector2 out;
  const cplx k = p.k();
  for (int ch = 0; ch < 2; ++ch) {
    const double nu = alpha.order(ch);
    if (xi(ch) == cplx(0.0)) {
      out(ch) = 0.0;
      continue;
    }
    const ChannelCoefficients c = coeff_ab(nu, p);
    out(ch) = xi(ch) * specfun::hankel1(nu, k * r) / c.a;
  }
  return out;
}

Matrix2 krein_matrix(const ExtensionPair& pair, const Flux& alpha, const SpectralPoint& p)
{
  const Matrix2 m = weyl_m(alpha, p);
  const Matrix2 dm = pair.d() * m;
  const double scale = std::pow(dm.norm() + pair.c().norm(), 2);
  return -checked_inverse(dm - pair.c(), scale) * pair.d();
}

Matrix2 krein_matrix_adjoint_form(const ExtensionPair& pair, const Flux& alpha, const SpectralPoint& p)
{
  const Matrix2 m = weyl_m(alpha, p);
  const Matrix2 md = m * pair.d().adjoint();
  const double scale = std::pow(md.norm() + pair.c().norm(), 2);
  return -pair.d().adjoint() * checked_inverse(md - pair.c().adjoint(), scale);
}

}  // namespace abflux
